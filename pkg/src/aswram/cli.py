"""Command-line front end.

    aswram VERB [PAYLOAD] [--field JSON] [--seed N] [--precision N]
                [--max-jump N] [--max-e N] [--out PATH]

PAYLOAD is inline JSON, a path to a JSON file, or "-" for stdin.  Reports are
JSON with sorted keys.  Exit status: 0 success, 1 domain error (a JSON error
object is printed), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional

from . import asw, oracle, ow, ramification, splitting, sweeps
from .fields import GF, FieldError, FieldSpec, FiniteField
from .polys import PolyU
from .ramification import JumpSequence
from .witt import WittVector

VERBS = ("jumps", "standard-form", "degree", "herbrand", "different", "essential", "genus",
         "plan", "verify", "materialize", "ow", "oracle", "sweep")
SUITES = ("witt", "sequences", "ow", "oracle", "all")
MAX_E = 4


class UsageError(Exception):
    pass


# -- payload parsing -------------------------------------------------------------

def _load_payload(raw: Optional[str]) -> Any:
    if raw is None:
        return None
    if raw == "-":
        text = sys.stdin.read()
    elif os.path.isfile(raw):
        with open(raw) as fh:
            text = fh.read()
    else:
        text = raw
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"payload is neither a file nor valid JSON: {exc}") from exc


def _require(payload: Any, *keys: str) -> dict:
    if not isinstance(payload, dict):
        raise UsageError("payload must be a JSON object")
    missing = [k for k in keys if k not in payload]
    if missing:
        raise UsageError(f"payload is missing {', '.join(missing)}")
    return payload


def _field(args: argparse.Namespace, payload: Optional[dict]) -> FiniteField:
    if payload and "field" in payload:
        spec = payload["field"]
    elif args.field:
        try:
            spec = json.loads(args.field)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--field is not valid JSON: {exc}") from exc
    elif payload and "p" in payload:
        spec = {"p": payload["p"]}
    else:
        raise UsageError("no field given: use --field or a 'field'/'p' entry in the payload")
    if not isinstance(spec, dict) or "p" not in spec:
        raise UsageError("field spec must be an object with key 'p'")
    return GF(FieldSpec.from_json(spec))


def _jumps(payload: Any) -> JumpSequence:
    data = _require(payload, "p", "jumps")
    try:
        seq = JumpSequence.from_json(data)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ramification.InvalidJumps):
            raise
        raise UsageError(f"malformed jump sequence: {exc}") from exc
    if seq.e > MAX_E:
        raise UsageError(f"e = {seq.e} is outside the supported range e <= {MAX_E}")
    return seq


def _asw_class(args: argparse.Namespace, payload: Any) -> asw.AswClass:
    data = _require(payload, "coords")
    F = _field(args, data)
    coords = tuple(PolyU.from_json(F, c) for c in data["coords"])
    if not coords:
        raise UsageError("coords must be non-empty")
    flags = data.get("flags", {})
    return asw.AswClass(WittVector(coords), bool(flags.get("standard_form", False)),
                        bool(flags.get("normalized", False)), bool(flags.get("separable", False)),
                        data.get("seed"))


def _standardized(a: asw.AswClass) -> asw.AswClass:
    return a if a.standard_form else asw.standard_form(a)[0]


# -- verbs -------------------------------------------------------------------------

def cmd_jumps(args, payload):
    a = _standardized(_asw_class(args, payload))
    seq = asw.upper_jumps(a)
    return {"jumps": seq.to_json(), "generator": a.to_json(), "conductor": asw.artin_conductor(a)}


def cmd_standard_form(args, payload):
    a = _asw_class(args, payload)
    std, cert = asw.standard_form(a, extend=args.extend)
    return {"generator": std.to_json(), "certificate": cert.to_json(), "in_image": asw.in_image_wp(a)}


def cmd_degree(args, payload):
    a = _asw_class(args, payload)
    m, b = asw.extension_degree(a)
    return {"m": m, "degree": a.p ** m, "b": b.to_json() if b else None}


def cmd_herbrand(args, payload):
    seq = _jumps(payload)
    target = args.to or (ramification.LOWER if seq.convention == ramification.UPPER else ramification.UPPER)
    return ramification.herbrand(seq, target).to_json()


def cmd_different(args, payload):
    seq = _jumps(payload)
    return {"input": seq.to_json(), "different": ramification.different_degree(seq)}


def cmd_essential(args, payload):
    seq = _jumps(payload)
    return {"input": seq.to_json(), "decomposition": ramification.essential_decomposition(seq).to_json()}


def cmd_genus(args, payload):
    seq = _jumps(payload)
    return {"input": seq.to_json(), "different": ramification.different_degree(seq),
            "genus": ramification.kg_genus(seq)}


def cmd_plan(args, payload):
    return splitting.split_plan(_jumps(payload)).to_json()


def cmd_verify(args, payload):
    plan = splitting.split_plan(_jumps(payload), verify=False)
    return {"input": plan.jumps.to_json(), "verification": splitting.verify_plan(plan).to_json()}


def cmd_materialize(args, payload):
    a = _asw_class(args, payload)
    if not (a.normalized and a.separable):
        a = asw.normalize_generator(_standardized(a), seed=args.seed, extend=args.extend)
    plan = splitting.split_plan(JumpSequence(a.p, tuple(int(c.degree) for c in a.generator.coords)))
    mat = splitting.materialize(a, plan, seed=args.seed)
    return {"generator": a.to_json(), "plan": plan.to_json(), "materialized": mat.to_json()}


def cmd_ow(args, payload):
    seq = _jumps(payload).upper()
    return {"input": seq.to_json(), "star": [e.to_json() for e in ow.star_report(seq)],
            "no_essential": not ramification.essential_decomposition(seq).has_essential,
            "liftable_no_essential": ow.ow_liftable_no_essential(seq),
            "theorem_hypothesis": ow.ow_theorem_hypothesis(seq)}


def cmd_oracle(args, payload):
    data = _require(payload, "coeffs")
    F = _field(args, data)
    f = PolyU.from_json(F, data)
    res = oracle.oracle_e1(f, precision=args.precision)
    out = res.to_json()
    out["field"] = F.spec.to_json()
    return out


def cmd_sweep(args, payload):
    suite = args.payload or "all"
    if suite not in SUITES:
        raise UsageError(f"unknown sweep suite {suite!r}; choose from {', '.join(SUITES)}")
    max_e = args.max_e or MAX_E
    results = []
    if suite in ("witt", "all"):
        results.append(sweeps.sweep_witt_ghost(seed=args.seed, max_e=max_e))
        results.append(sweeps.sweep_wp_additive(seed=args.seed + 1, max_e=max_e))
    if suite in ("sequences", "all"):
        results.extend(sweeps.sweep_sequences(max_e=max_e, max_jump=args.max_jump or 200).values())
    if suite in ("ow", "all"):
        results.append(sweeps.sweep_ow_implication(max_e=max_e, max_jump=args.max_jump or 500))
        results.append(sweeps.sweep_star_equivalence(max_e=max_e, max_jump=args.max_jump or 500))
    if suite in ("oracle", "all"):
        results.append(sweeps.sweep_oracle(seed=args.seed))
    for r in results:
        print(r.summary(), file=sys.stderr)
    return {"suite": suite, "passed": all(r.passed for r in results),
            "results": [r.to_json() for r in results]}


COMMANDS = {
    "jumps": cmd_jumps, "standard-form": cmd_standard_form, "degree": cmd_degree,
    "herbrand": cmd_herbrand, "different": cmd_different, "essential": cmd_essential,
    "genus": cmd_genus, "plan": cmd_plan, "verify": cmd_verify, "materialize": cmd_materialize,
    "ow": cmd_ow, "oracle": cmd_oracle, "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aswram", description="Ramification of Artin-Schreier-Witt extensions.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("payload", nargs="?", help="inline JSON, a JSON file, or '-' for stdin; "
                                                "for 'sweep', the suite name")
    ap.add_argument("--field", help='field spec, e.g. \'{"p":3,"n":1}\'')
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--precision", type=int, default=None)
    ap.add_argument("--max-jump", type=int, default=None)
    ap.add_argument("--max-e", type=int, default=None)
    ap.add_argument("--to", choices=(ramification.UPPER, ramification.LOWER),
                    help="target convention for 'herbrand'")
    ap.add_argument("--extend", action="store_true",
                    help="allow moving to a finite extension of the field when needed")
    ap.add_argument("--out", help="write the report here instead of standard output")
    return ap


def run(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.max_e is not None and not 1 <= args.max_e <= MAX_E:
            raise UsageError(f"--max-e must be in [1, {MAX_E}]")
        payload = None if args.verb == "sweep" else _load_payload(args.payload)
        if args.verb != "sweep" and payload is None:
            raise UsageError(f"verb {args.verb!r} needs a payload")
        report = COMMANDS[args.verb](args, payload)
        status = 0
        if args.verb == "sweep" and not report["passed"]:
            status = 1
    except UsageError as exc:
        print(f"aswram: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, FieldError, KeyError) as exc:
        report = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        if isinstance(exc, ramification.InvalidJumps):
            report["error"]["index"] = exc.index
        if isinstance(exc, asw.FieldTooSmall) and exc.required_extension:
            report["error"]["required_extension"] = exc.required_extension
        status = 1
    if args.seed is not None and isinstance(report, dict) and "error" not in report:
        report.setdefault("seed", args.seed)
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
