"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from collections import Counter

from . import collective as col
from . import gaussian_cv as cv
from . import qudit_mub as qm
from .errors import InputError
from .output import emit, parse_floats, parse_grid, to_csv, to_json
from .prime_field import require_prime

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

SIGN_NAMES = {-1: "n(n-1)", 1: "n(n+1)"}


def _label(text: str) -> qm.Label:
    if text.lower() in ("c", "comp", "computational"):
        return qm.COMPUTATIONAL
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"label must be an integer or 'comp', got {text!r}")


def _check_label(b: qm.Label, d: int) -> qm.Label:
    if b != qm.COMPUTATIONAL and not 0 <= b < d:
        raise InputError(f"basis label {b} outside 0..{d - 1}")
    return b


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def cmd_mub_verify(args) -> int:
    d = require_prime(args.d, allow_two=False)
    bases = qm.full_mub_set(d)
    pairs = []
    for a, b in itertools.combinations(bases, 2):
        ok, dev = qm.verify_unbiased(a, b, args.tol)
        pairs.append({"a": a.label, "b": b.label, "passed": ok, "max_deviation": dev})
    passed = all(p["passed"] for p in pairs)
    report = {
        "d": d,
        "bases": len(bases),
        "pair_checks": len(pairs),
        "tol": args.tol,
        "max_deviation": max(p["max_deviation"] for p in pairs),
        "passed": passed,
        "pairs": pairs,
    }
    emit(to_json(report), args.out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_mub_build(args) -> int:
    d = require_prime(args.d, allow_two=False)
    if args.b1 is None:
        bases = qm.full_mub_set(d)
    else:
        bases = [qm.mub_basis(d, _check_label(args.b1, d))]
    emit(to_json({"d": d, "bases": [b.to_json() for b in bases]}), args.out)
    return EXIT_OK


def cmd_mucb_state(args) -> int:
    d = require_prime(args.d, allow_two=False)
    b1, b2 = _check_label(args.b1, d), _check_label(args.b2, d)
    state = col.mucb_state(d, args.nbar1, b1, args.nbar2, b2, sign=args.sign)
    rep = col.entanglement_report(state, args.tol)
    out = {
        "d": d,
        "b1": b1,
        "b2": b2,
        "nbar1": args.nbar1 % d,
        "nbar2": args.nbar2 % d,
        "exponent_form": SIGN_NAMES[args.sign],
        "classification": rep.classification,
        "entropy_nats": rep.entropy_nats,
        "entropy_bits": rep.entropy_bits,
        "schmidt": rep.schmidt_coefficients,
        "reduced_trace_distance": rep.reduced_trace_distance_to_maximally_mixed,
        "ordering": "index = n1*d + n2",
        "amplitudes": [[z.real, z.imag] for z in state],
    }
    emit(to_json(out), args.out)
    return EXIT_OK


def cmd_mucb_classify(args) -> int:
    d = require_prime(args.d, allow_two=False)
    rows = col.classify_pairs(d, sign=args.sign, tol=args.tol)
    if args.format == "csv":
        text = to_csv(
            ["d", "b1", "b2", "class", "entropy"],
            [[r.d, r.b1, r.b2, r.classification, r.entropy_nats] for r in rows],
        )
    else:
        text = to_json(
            {
                "d": d,
                "rows": [
                    {
                        "d": r.d,
                        "b1": r.b1,
                        "b2": r.b2,
                        "classification": r.classification,
                        "entropy_nats": r.entropy_nats,
                        "schmidt": r.schmidt,
                    }
                    for r in rows
                ],
            }
        )
    emit(text, args.out)
    counts = Counter(r.classification for r in rows)
    print(
        f"d={d} rows={len(rows)} Product={counts[col.PRODUCT]} "
        f"MaximallyEntangled={counts[col.MAXIMALLY_ENTANGLED]} Other={counts[col.ENTANGLED]}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_mucb_project(args) -> int:
    d = require_prime(args.d, allow_two=False)
    variants = {}
    for sign in (-1, 1):
        res = col.projection_sweep(d, sign=sign, tol=args.tol)
        variants[SIGN_NAMES[sign]] = {"checks": res["checks"], "mismatches": res["mismatches"]}
    exact = sorted(k for k, v in variants.items() if v["mismatches"] == 0)
    emit(to_json({"d": d, "tol": args.tol, "variants": variants, "exact_variants": exact}), args.out)
    return EXIT_OK if exact else EXIT_FAIL


def cmd_cv_sweep(args) -> int:
    r_values = parse_floats(args.r)
    if any(r < 0 for r in r_values):
        raise InputError("squeezing values must be non-negative")
    angles = parse_grid(args.grid)
    rows = cv.sweep_rows(r_values, angles)
    if args.format == "json":
        text = to_json({"rows": rows})
    else:
        keys = ["r", "theta", "theta_prime", "log_negativity", "is_product"]
        text = to_csv(keys, [[row[k] for k in keys] for row in rows])
    emit(text, args.out)
    return EXIT_OK


def cmd_cv_kernel_check(args) -> int:
    angles = parse_grid(args.grid)
    checks = [cv.kernel_composition_check(t1, t2) for t1, t2 in itertools.product(angles, repeat=2)]
    passed = all(c["max_rel_error"] <= args.tol for c in checks)
    emit(to_json({"tol": args.tol, "passed": passed, "checks": checks}), args.out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_bell(args) -> int:
    states = []
    for b in col.bell_states():
        rep = col.entanglement_report(b.vector)
        states.append(
            {
                "xx_sign": b.xx_sign,
                "zz_sign": b.zz_sign,
                "entropy_nats": rep.entropy_nats,
                "amplitudes": [[z.real, z.imag] for z in b.vector],
            }
        )
    emit(to_json({"d": 2, "states": states}), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mucb", description=__doc__)
    sub = parser.add_subparsers(dest="group", required=True)

    def common(p, tol=1e-10, fmt=False):
        p.add_argument("--tol", type=_positive, default=tol)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default=fmt)
        return p

    mub = sub.add_parser("mub").add_subparsers(dest="command", required=True)
    p = common(mub.add_parser("verify"))
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_mub_verify)
    p = common(mub.add_parser("build"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--b1", type=_label, default=None, help="single basis label")
    p.set_defaults(func=cmd_mub_build)

    mucb = sub.add_parser("mucb").add_subparsers(dest="command", required=True)
    p = common(mucb.add_parser("state"), tol=col.CLASS_TOL)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nbar1", type=int, default=0)
    p.add_argument("--nbar2", type=int, default=0)
    p.add_argument("--b1", type=_label, default=qm.COMPUTATIONAL)
    p.add_argument("--b2", type=_label, default=qm.COMPUTATIONAL)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=1)
    p.set_defaults(func=cmd_mucb_state)
    p = common(mucb.add_parser("classify"), tol=col.CLASS_TOL, fmt="json")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=1)
    p.set_defaults(func=cmd_mucb_classify)
    p = common(mucb.add_parser("project"))
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_mucb_project)

    cvp = sub.add_parser("cv").add_subparsers(dest="command", required=True)
    p = common(cvp.add_parser("sweep"), fmt="csv")
    p.add_argument("--r", default="0.25,0.5,1,2", help="comma-separated squeezing values")
    p.add_argument("--grid", default="0:2:24", help="start:stop:count in units of pi")
    p.set_defaults(func=cmd_cv_sweep)
    p = common(cvp.add_parser("kernel-check"), tol=1e-2)
    p.add_argument("--grid", default="1/6,1/4,1/3", help="angles in units of pi")
    p.set_defaults(func=cmd_cv_kernel_check)

    p = sub.add_parser("bell")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bell)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"mucb: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
