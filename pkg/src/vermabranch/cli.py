"""Command line front end.

Exit codes: 0 on success, 1 on usage errors (including non-dominant or
malformed weights), 2 when a verification oracle disagrees with the
closed form.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .branching import (
    CASES,
    DominanceError,
    enumerate_decomposition,
    get_case,
    restricted_highest_weight,
)
from .characters import OracleFailure, hom_surface, peel
from .genericity import GENERIC_FOR_CASE, in_hypothesis, jantzen_simple, linkage_disjoint
from .parabolic import PAIRS, enumerate_compatible, intersect_parabolic, is_compatible
from .roots import WEYL_G2_NAMES, dot_action
from .weights import RANK, Weight

PARABOLIC_NAMES = {
    ("so7-g2", "borel"): "b3-borel",
    ("so7-g2", "p-e2-e3"): "b3-p23",
    ("so7-g2", "p-e1-e2-e3"): "b3-p12-3",
    ("g2-sl3", "borel"): "g2-borel",
    ("g2-sl3", "p-a1"): "g2-p1",
    ("g2-sl3", "p-a2"): "g2-p2",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_weight(text, algebra) -> Weight:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != RANK[algebra]:
        raise UsageError(
            f"{algebra} weights take {RANK[algebra]} comma-separated rationals"
        )
    try:
        coords = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad rational in weight: {e}") from None
    return Weight(algebra, coords)


def _case_from_args(args):
    key = (args.pair, args.parabolic)
    if key not in PARABOLIC_NAMES:
        raise UsageError(
            f"parabolic {args.parabolic!r} does not belong to pair {args.pair!r}"
        )
    return get_case(PARABOLIC_NAMES[key])


def _weight_from_args(args, case):
    return parse_weight(args.lam, case.ambient_algebra)


def cmd_compat(args):
    report = []
    for spec in enumerate_compatible(args.pair):
        w = is_compatible(spec, args.pair)
        report.append({
            "parabolic": spec.to_json(),
            "witness": [str(w[0]), str(w[1])],
            "intersection": intersect_parabolic(spec, args.pair).to_json(),
        })
    if args.format == "json":
        print(json.dumps({"pair": args.pair, "compatible": report}, indent=2))
    else:
        for entry in report:
            pi = ",".join(entry["parabolic"]["pi"]) or "(empty)"
            sub = ",".join(entry["intersection"]["pi"]) or "(empty)"
            a, b = entry["witness"]
            print(f"pi={{{pi}}}  witness=({a}, {b})  intersection={{{sub}}}")
    return 0


def cmd_decompose(args):
    case = _case_from_args(args)
    lam = _weight_from_args(args, case)
    dec = enumerate_decomposition(case, lam, args.depth)
    if args.format == "json":
        print(json.dumps(dec.to_json(), indent=2))
    elif args.format == "latex":
        print(dec.to_latex())
    else:
        print(f"case {case.id}, lambda = ({', '.join(map(str, lam.coords))}), "
              f"depth {args.depth}")
        for t in dec.terms:
            cs = ", ".join(str(c) for c in t.delta.coords)
            print(f"  offset ({t.offset[0]}, {t.offset[1]}): "
                  f"{t.multiplicity} x M'({cs})")
    return 0


def cmd_verify(args):
    case = _case_from_args(args)
    lam = _weight_from_args(args, case)
    dec = enumerate_decomposition(case, lam, args.depth)
    closed = {t.offset: t.multiplicity for t in dec.terms}
    try:
        peeled = peel(case, lam, args.depth)
    except OracleFailure as fail:
        print(json.dumps({"status": "mismatch", "oracle": "peel",
                          "failure": fail.to_json()}))
        return 2
    hom = hom_surface(case, lam, args.depth)
    if closed == peeled == hom:
        print(json.dumps({"status": "ok", "case": case.id,
                          "terms": len(closed), "depth": args.depth}))
        return 0
    disagreements = []
    for off in sorted(set(closed) | set(peeled) | set(hom),
                      key=lambda k: (k[0] + k[1], k[0])):
        row = (closed.get(off, 0), peeled.get(off, 0), hom.get(off, 0))
        if len(set(row)) > 1:
            disagreements.append({"offset": list(off), "closed_form": row[0],
                                  "peel": row[1], "hom": row[2]})
    print(json.dumps({"status": "mismatch", "case": case.id,
                      "disagreements": disagreements}))
    return 2


def cmd_simple(args):
    case = _case_from_args(args)
    lam = _weight_from_args(args, case)
    name = GENERIC_FOR_CASE[case.id]
    ok, failures = in_hypothesis(name, lam)
    out = {"case": case.id, "hypothesis": name, "generic": ok, "failures": failures}
    if ok:
        dec = enumerate_decomposition(case, lam, args.depth)
        simple = all(jantzen_simple(case.sub_parabolic, t.delta) for t in dec.terms)
        out["summands_simple"] = simple
        if case.pair_id == "so7-g2":
            out["linkage_disjoint"] = linkage_disjoint(
                case, [t.delta for t in dec.terms])
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"case {case.id}: generic={out['generic']}")
        for f in failures:
            print(f"  fails: {f}")
        for k in ("summands_simple", "linkage_disjoint"):
            if k in out:
                print(f"  {k}={out[k]}")
    return 0


def cmd_orbit(args):
    delta = parse_weight(args.lam, "g2")
    rows = []
    for name in WEYL_G2_NAMES:
        img = dot_action(name, delta)
        rows.append({"element": name, "image": [str(c) for c in img.coords]})
    if args.format == "json":
        print(json.dumps({"delta": delta.to_json(), "dot_orbit": rows}, indent=2))
    else:
        for r in rows:
            print(f"{r['element']:>9}: ({r['image'][0]}, {r['image'][1]})")
    return 0


def build_parser():
    parser = _Parser(prog="vermabranch",
                     description="Exact branching of generalized Verma modules "
                                 "for so7 > g2 and g2 > sl3")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_pair=True, need_lambda=True):
        if need_pair:
            p.add_argument("--pair", choices=PAIRS, required=True)
        if need_lambda:
            p.add_argument("--parabolic", required=True,
                           choices=["borel", "p-e2-e3", "p-e1-e2-e3", "p-a1", "p-a2"])
            p.add_argument("--lambda", dest="lam", required=True,
                           help="comma-separated rational coordinates")
            p.add_argument("--depth", type=int, default=12)
        p.add_argument("--format", choices=["json", "latex", "text"], default="text")
        p.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("compat", help="list compatible parabolics"),
           need_lambda=False)
    common(sub.add_parser("decompose", help="closed-form branching decomposition"))
    common(sub.add_parser("verify", help="cross-check the closed form against "
                                         "the peeling and hom oracles"))
    common(sub.add_parser("simple", help="genericity and simplicity report"))
    orbit = sub.add_parser("orbit", help="dot-action orbit of a g2 weight")
    orbit.add_argument("--lambda", dest="lam", required=True)
    orbit.add_argument("--format", choices=["json", "latex", "text"], default="text")
    return parser


COMMANDS = {
    "compat": cmd_compat,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "simple": cmd_simple,
    "orbit": cmd_orbit,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except DominanceError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
