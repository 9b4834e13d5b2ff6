from __future__ import annotations

import json

import pytest

from aswram.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_plan(capsys):
    code, out, _ = call(capsys, "plan", '{"p":3,"jumps":[1,7]}')
    assert code == 0
    assert out["decomposition"]["N"] == 2
    assert out["different"]["per_branch"] == [34, 18] and out["different"]["special_fiber"] == 52
    assert out["verification"]["passed"] is True


def test_ow(capsys):
    code, out, _ = call(capsys, "ow", '{"p":2,"jumps":[3,11]}')
    assert code == 0
    star = out["star"][0]
    assert star["nu"] == 1 and star["holds"] is False and star["witness"] == 3
    assert star["bound"] == {"num": 55, "den": 8}


def test_herbrand_roundtrip(capsys):
    code, lower, _ = call(capsys, "herbrand", '{"p":2,"convention":"upper","jumps":[1,3]}')
    assert code == 0 and lower["jumps"] == [1, 5] and lower["convention"] == "lower"
    code, upper, _ = call(capsys, "herbrand", json.dumps(lower))
    assert upper["jumps"] == [1, 3] and upper["convention"] == "upper"


@pytest.mark.parametrize("verb,payload,key,value", [
    ("different", '{"p":3,"jumps":[1,7]}', "different", 52),
    ("genus", '{"p":2,"jumps":[1,2]}', "genus", 1),
])
def test_scalar_verbs(capsys, verb, payload, key, value):
    code, out, _ = call(capsys, verb, payload)
    assert code == 0 and out[key] == value


def test_essential_and_verify(capsys):
    _, out, _ = call(capsys, "essential", '{"p":3,"jumps":[1,7]}')
    assert out["decomposition"]["q"] == [0, 1]
    _, out, _ = call(capsys, "verify", '{"p":3,"jumps":[1,7]}')
    assert out["verification"]["passed"] is True


def test_generator_verbs(capsys):
    _, out, _ = call(capsys, "jumps", '{"p":3,"coords":[[0,0,1],[0,0,0,0,0,1]]}')
    assert out["jumps"]["jumps"] == [2, 6]
    _, out, _ = call(capsys, "standard-form", '{"coords":[[0,0,0,1,1]]}', "--field", '{"p":2}')
    assert out["generator"]["coords"][0]["coeffs"] == [[0], [1], [0], [1]]
    _, out, _ = call(capsys, "degree", '{"p":2,"coords":[[],[0,0,0,1]]}')
    assert out["m"] == 1 and out["degree"] == 2
    _, out, _ = call(capsys, "oracle", '{"p":2,"coeffs":[0,1,0,1]}')
    assert out["jump"] == 3 and out["field"]["p"] == 2


def test_materialize_with_extension(capsys):
    code, out, _ = call(capsys, "materialize", '{"p":3,"coords":[[0,1],[0,0,0,0,0,0,0,1]]}', "--seed", "3")
    assert code == 0 and out["seed"] == 3
    assert out["materialized"]["degrees"] == [[1, 4], [0, 3]]
    code, out, _ = call(capsys, "materialize", '{"p":3,"coords":[[0,0,1],[0,0,0,0,0,1]]}')
    assert code == 1 and out["error"]["required_extension"] == 2


def test_payload_file_and_out(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text('{"p":3,"jumps":[2]}')
    dst = tmp_path / "out.json"
    assert run(["genus", str(src), "--out", str(dst)]) == 0
    assert json.loads(dst.read_text())["genus"] == 1


def test_error_codes(capsys):
    code, out, _ = call(capsys, "herbrand", '{"p":2,"jumps":[1,4]}')
    assert code == 1 and out["error"]["type"] == "InvalidJumps" and out["error"]["index"] == 2
    assert call(capsys, "herbrand", "not json")[0] == 2
    assert call(capsys, "herbrand", '{"p":2}')[0] == 2
    assert call(capsys, "plan", '{"p":2,"jumps":[1,2,4,8,16]}')[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "sweep", "bogus")[0] == 2


def test_sweep_small(capsys):
    code, out, err = call(capsys, "sweep", "ow", "--max-jump", "60", "--max-e", "3")
    assert code == 0 and out["passed"] is True
    assert "PASS ow_implication" in err


def test_output_is_sorted(capsys):
    run(["different", '{"p":3,"jumps":[2]}'])
    text = capsys.readouterr().out
    keys = list(json.loads(text))
    assert keys == sorted(keys)
