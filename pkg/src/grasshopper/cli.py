"""Command-line driver: constructions, retention reports, verify suites, sweeps.

Exit codes: 0 success or all checks passed, 1 verification failure,
2 usage/parameter error, 3 numeric (quadrature or root-find) failure.
All output is deterministic for a fixed configuration including the seed;
CSV files start with a versioned schema comment and rows are emitted in a
fixed sorted order.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from fractions import Fraction

from .circle_core import PI, ArcSet, RationalAngle
from . import circle_lawns, sphere_lawns, suites

CSV_VERSION = "grasshopper-csv v1"


def _out_path(path, default_name):
    if path:
        return path
    base = os.environ.get("GRASSHOPPER_OUTDIR", ".")
    return os.path.join(base, default_name)


def _write_csv(path, schema, header, rows):
    with open(path, "w", newline="") as fh:
        fh.write(f"# {CSV_VERSION} {schema}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _length_from_flags(args):
    if args.L_pi:
        num, _, den = args.L_pi.partition("/")
        return RationalAngle.pi(int(num), int(den or 1))
    if args.L_rad is not None:
        return RationalAngle.radians(args.L_rad)
    raise SystemExit2("one of --L-pi or --L-rad is required")


class SystemExit2(Exception):
    """Parameter error surfaced with exit code 2."""


def _cmd_construct(args):
    kind = args.kind
    if kind == "circle-general":
        lawn = circle_lawns.construct_general(_length_from_flags(args), args.p, args.q)
        payload = {"type": "arc_set", "lawn": lawn.to_json_obj()}
        default = f"circle_general_q{args.q}.json"
    elif kind == "circle-irrational":
        if args.phi_rad is None or args.eps is None:
            raise SystemExit2("circle-irrational needs --phi-rad and --eps")
        lawn = circle_lawns.construct_irrational(_length_from_flags(args), args.phi_rad, args.eps)
        payload = {"type": "arc_set", "lawn": lawn.to_json_obj()}
        default = "circle_irrational.json"
    elif kind == "circle-antipodal-even":
        lawn = circle_lawns.construct_antipodal_even(args.q)
        payload = {"type": "arc_set", "lawn": lawn.to_json_obj()}
        default = f"circle_antipodal_even_q{args.q}.json"
    elif kind == "circle-antipodal-odd":
        block, demi = circle_lawns.construct_antipodal_odd(args.p, args.q)
        payload = {
            "type": "arc_set_pair",
            "block_lawn": block.to_json_obj(),
            "demi_lawn": demi.to_json_obj(),
        }
        default = f"circle_antipodal_odd_p{args.p}_q{args.q}.json"
    elif kind == "sphere-peven":
        lawn = sphere_lawns.construct_peven(args.p, args.q, args.r)
        payload = sphere_lawns.lawn_to_json(lawn)
        default = f"sphere_peven_p{args.p}_q{args.q}.json"
    elif kind == "sphere-irrational":
        if args.phi_rad is None:
            raise SystemExit2("sphere-irrational needs --phi-rad")
        lawn = sphere_lawns.construct_irrational(args.phi_rad, args.r, args.n)
        payload = sphere_lawns.lawn_to_json(lawn)
        default = "sphere_irrational.json"
    elif kind == "sphere-podd":
        lawn = sphere_lawns.construct_podd(args.p, args.q, args.r)
        payload = sphere_lawns.lawn_to_json(lawn)
        default = f"sphere_podd_p{args.p}_q{args.q}.json"
    else:
        raise SystemExit2(f"unknown construction kind {kind!r}")
    path = _out_path(args.out, default)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(path)
    return 0


def _load_circle_lawn(path):
    with open(path) as fh:
        obj = json.load(fh)
    if obj.get("type") == "arc_set":
        return ArcSet.from_json_obj(obj["lawn"])
    raise SystemExit2(f"{path} does not contain a circle lawn")


def _cmd_retention(args):
    lawn = _load_circle_lawn(args.lawn)
    if args.jump_p is not None and args.jump_q is not None:
        jump = RationalAngle.pi(args.jump_p, args.jump_q)
    elif args.phi_rad is not None:
        jump = RationalAngle.radians(args.phi_rad)
    else:
        raise SystemExit2("need --jump-p/--jump-q or --phi-rad")
    if args.lawn_b:
        other = _load_circle_lawn(args.lawn_b)
        value = circle_lawns.retention_two(lawn, other, jump)
        name = "two-lawn"
    else:
        value = circle_lawns.retention(lawn, jump)
        name = "one-lawn"
    opt = circle_lawns.optimal_antipodal_value(jump, two_lawn=bool(args.lawn_b))
    row = circle_lawns.retention_csv_row(jump, name, value, bound=opt.value,
                                         attained=opt.attained)
    path = _out_path(args.out, "retention.csv")
    _write_csv(
        path,
        "retention",
        ["jump_num", "jump_den_or_float", "construction", "retention_num",
         "retention_den", "bound", "attained_flag"],
        [row],
    )
    print(path)
    return 0


def _cmd_verify(args):
    kwargs = {}
    if args.suite == "circle-orbit":
        kwargs["max_q"] = args.max_q or 12
    elif args.suite == "diophantine":
        if args.x:
            kwargs["x_names"] = [args.x if args.x in suites.SPECIAL_X else float(args.x)]
        if args.max_q:
            kwargs["max_q"] = args.max_q
    elif args.suite == "sphere-improvement":
        kwargs = {
            "case": args.phi_case,
            "p": args.p or 0,
            "q": args.q or 0,
            "phi": args.phi_rad or 0.0,
            "r": args.r,
        }
        if args.n:
            kwargs["n"] = args.n
    rows = suites.run_suite(args.suite, **kwargs)
    path = _out_path(args.out, f"verify_{args.suite}.csv")
    _write_csv(
        path,
        f"verify {args.suite}",
        ["check", "expected", "actual", "tolerance", "pass"],
        [[r.check, r.expected, r.actual, r.tolerance, str(r.passed).lower()] for r in rows],
    )
    failed = [r for r in rows if not r.passed]
    for r in rows:
        print(("PASS" if r.passed else "FAIL"), r.check)
    print(path)
    return 1 if failed else 0


def _rational_jump_grid(max_q):
    seen = set()
    jumps = []
    for q in range(1, max_q + 1):
        for p in range(0, 2 * q):
            f = Fraction(p, q)
            if f not in seen:
                seen.add(f)
                jumps.append(f)
    return sorted(jumps)


def _cmd_sweep(args):
    rows = []
    if args.max_q:
        for f in _rational_jump_grid(args.max_q):
            jump = RationalAngle.pi(f.numerator, f.denominator)
            one = circle_lawns.optimal_antipodal_value(jump, two_lawn=False)
            two = circle_lawns.optimal_antipodal_value(jump, two_lawn=True)
            rows.append(
                [str(f.numerator), str(f.denominator),
                 f"{one.value.numerator}/{one.value.denominator}", str(one.attained).lower(),
                 f"{two.value.numerator}/{two.value.denominator}", str(two.attained).lower()]
            )
    elif args.grid_n:
        for i in range(args.grid_n):
            x = args.grid_start + (args.grid_stop - args.grid_start) * i / max(args.grid_n - 1, 1)
            jump = RationalAngle.radians(float(x))
            one = circle_lawns.optimal_antipodal_value(jump, two_lawn=False)
            two = circle_lawns.optimal_antipodal_value(jump, two_lawn=True)
            rows.append(
                [repr(float(x)), "", str(one.value), str(one.attained).lower(),
                 str(two.value), str(two.attained).lower()]
            )
    else:
        raise SystemExit2("need --max-q for a rational grid or --grid-n for a float grid")
    path = _out_path(args.out, "sweep.csv")
    _write_csv(
        path,
        "sweep",
        ["jump_pi_num", "jump_pi_den_or_rad", "one_lawn_value", "one_lawn_attained",
         "two_lawn_value", "two_lawn_attained"],
        rows,
    )
    print(path)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grasshopper",
        description="Constructions and retention probabilities for fixed-angle "
                    "jumps on the circle and sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a lawn and write it as JSON")
    c.add_argument("kind", choices=[
        "circle-general", "circle-irrational", "circle-antipodal-even",
        "circle-antipodal-odd", "sphere-peven", "sphere-irrational", "sphere-podd",
    ])
    c.add_argument("--p", type=int, default=1)
    c.add_argument("--q", type=int, default=1)
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--r", type=float, default=1e-3, help="cog radius (sphere)")
    c.add_argument("--L-pi", dest="L_pi", default="", help="lawn length as a fraction of pi, e.g. 1/3")
    c.add_argument("--L-rad", dest="L_rad", type=float, default=None, help="lawn length in radians")
    c.add_argument("--phi-rad", dest="phi_rad", type=float, default=None, help="jump angle in radians")
    c.add_argument("--eps", type=float, default=None, help="seed arc length (circle-irrational)")
    c.add_argument("--out", default="")
    c.set_defaults(func=_cmd_construct)

    r = sub.add_parser("retention", help="retention of a stored circle lawn at a jump")
    r.add_argument("--lawn", required=True)
    r.add_argument("--lawn-b", dest="lawn_b", default="", help="second lawn (two-lawn mode)")
    r.add_argument("--jump-p", dest="jump_p", type=int, default=None)
    r.add_argument("--jump-q", dest="jump_q", type=int, default=None)
    r.add_argument("--phi-rad", dest="phi_rad", type=float, default=None)
    r.add_argument("--out", default="")
    r.set_defaults(func=_cmd_retention)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=sorted(suites.SUITES))
    v.add_argument("--max-q", dest="max_q", type=int, default=None)
    v.add_argument("--x", default="", help="target for the diophantine suite "
                                           "(sqrt2, phi1.2, golden, ln2, pi, or a float)")
    v.add_argument("--phi-case", dest="phi_case", default="",
                   choices=["", "peven", "irrational", "podd"])
    v.add_argument("--p", type=int, default=None)
    v.add_argument("--q", type=int, default=None)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--r", type=float, default=1e-3)
    v.add_argument("--phi-rad", dest="phi_rad", type=float, default=None)
    v.add_argument("--out", default="")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sweep", help="optimal-retention table over a jump grid")
    s.add_argument("--max-q", dest="max_q", type=int, default=None)
    s.add_argument("--grid-start", dest="grid_start", type=float, default=0.0)
    s.add_argument("--grid-stop", dest="grid_stop", type=float, default=2 * math.pi)
    s.add_argument("--grid-n", dest="grid_n", type=int, default=None)
    s.add_argument("--out", default="")
    s.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
