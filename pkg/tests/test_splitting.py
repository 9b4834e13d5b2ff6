from __future__ import annotations

import pytest

from aswram.asw import AswClass, normalize_generator, standard_form
from aswram.fields import GF, FieldSpec
from aswram.ramification import JumpSequence, enumerate_upper_sequences
from aswram.splitting import materialize, split_plan, theta_matrix, verify_plan


def test_theta_examples():
    assert theta_matrix(JumpSequence(3, (1, 7))).to_json() == [[1, 4], [0, 2]]
    assert theta_matrix(JumpSequence(2, (1, 5))).to_json() == [[1, 3], [0, 1]]
    assert theta_matrix(JumpSequence(2, (1, 3, 7))).to_json() == [[1, 3, 7]]


def test_plan_examples():
    plan = split_plan(JumpSequence(3, (1, 7)))
    assert plan.N == 2 and plan.profiles == ((1, 4), (2,))
    assert plan.branch_different == (34, 18) and plan.special_different == 52
    plan = split_plan(JumpSequence(2, (1, 5)))
    assert plan.profiles == ((1, 3), (1,)) and plan.branch_different == (10, 4)
    plan = split_plan(JumpSequence(2, (1, 2)))
    assert plan.is_identity and plan.branch_different == (8,)


def test_verify_instances():
    report = verify_plan(split_plan(JumpSequence(3, (1, 7)), verify=False))
    assert report.passed
    assert [c.name for c in report.checks][:2] == ["combinatorial_identity", "prefix_identity"]


def test_verify_catches_a_broken_plan():
    plan = split_plan(JumpSequence(3, (1, 7)), verify=False)
    broken = type(plan)(plan.jumps, plan.decomposition, plan.theta, plan.profiles, (34, 17), plan.labels)
    report = verify_plan(broken)
    assert not report["kato_ledger"].passed
    assert report["kato_ledger"].failures[0] == {"lhs": 51, "rhs": 52}


def test_multi_block_plan():
    # p=2, (1, 5, 15): q = (0, 1, 2), two essential blocks
    plan = split_plan(JumpSequence(2, (1, 5, 15)))
    assert plan.decomposition.r == (2, 3) and plan.N == 4
    assert plan.lengths == (3, 2, 1, 1)
    assert plan.report.passed


@pytest.mark.parametrize("p", [2, 3, 5])
def test_small_sweep_all_checks(p):
    for jumps in enumerate_upper_sequences(p, 4, 60):
        plan = split_plan(JumpSequence(p, jumps))
        assert plan.report.passed, (p, jumps, plan.report.to_json())
        assert (plan.N == 1) == (not plan.decomposition.has_essential)
        for row, prof, start in zip(plan.theta.rows, plan.profiles, plan.theta.starts):
            assert prof == row[start - 1:] and all(x == 0 for x in row[:start - 1])


def test_profiles_depend_only_on_jumps():
    a = split_plan(JumpSequence(3, (2, 17)))
    b = split_plan(JumpSequence(3, (2, 17)))
    assert (a.N, a.lengths, a.profiles) == (b.N, b.lengths, b.profiles)
    assert a.to_json() == b.to_json()


@pytest.fixture(scope="module")
def normalized_17():
    F9 = GF(FieldSpec(3, 2))
    a = standard_form(AswClass.from_coords(F9, [(0, 1), (0, 0, 0, 0, 0, 0, 0, 1)]))[0]
    return normalize_generator(a, seed=3)


def test_materialize_degrees(normalized_17):
    plan = split_plan(JumpSequence(3, (1, 7)))
    mat = materialize(normalized_17, plan, seed=5)
    degs = [[max(int(f.degree), 0) for f in row] for row in mat.factors]
    assert degs == [[1, 4], [0, 3]]
    for rho in (1, 2):
        assert mat.product(rho) == mat.embedding.poly(normalized_17.generator.coords[rho - 1])
        assert sum(d[rho - 1] for d in degs) == plan.jumps[rho]
    assert len(set(mat.branch_points)) == plan.N


def test_materialize_is_seeded(normalized_17):
    plan = split_plan(JumpSequence(3, (1, 7)))
    assert materialize(normalized_17, plan, seed=5) == materialize(normalized_17, plan, seed=5)


def test_materialize_identity_plan(F3):
    a = standard_form(AswClass.from_coords(F3, [(0, 1), (0, 1, 1, 0, 1)]))[0]
    gen = normalize_generator(a, seed=0)
    mat = materialize(gen, split_plan(JumpSequence(3, (1, 4))))
    assert mat.factors == ((gen.generator.coords[0], gen.generator.coords[1]),)
    assert mat.field == F3


def test_materialize_rejects_mismatch(normalized_17):
    with pytest.raises(ValueError):
        materialize(normalized_17, split_plan(JumpSequence(3, (1, 4))))
    raw = AswClass(normalized_17.generator)
    with pytest.raises(ValueError):
        materialize(raw, split_plan(JumpSequence(3, (1, 7))))


def test_plan_json_is_stable():
    js = split_plan(JumpSequence(3, (1, 7))).to_json()
    assert js["different"] == {"special_fiber": 52, "generic_total": 52, "per_branch": [34, 18]}
    assert js["verification"]["passed"] is True
    assert js["branches"][1] == {"label": "x_2", "jumps": [2], "e": 1, "different": 18}
