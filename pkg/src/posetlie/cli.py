"""Command-line front end: poset inspection, breadth reports, theorem
verification campaigns, and breadth-spectrum sampling.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .breadth import (DEFAULT_COEFF_BOUND, DEFAULT_TRIALS, BreadthReport,
                      breadth, breadth_spectrum_sample)
from .algebra import VARIANTS, LiePosetAlgebra, build
from .poset import FamilyDescriptor, FinitePoset, PosetError, build_family
from .verify import CAMPAIGNS


class InputError(Exception):
    pass


def _default_seed() -> int:
    try:
        return int(os.environ.get("POSETLIE_SEED", "0"))
    except ValueError:
        return 0


def _add_source_args(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=["chain", "grid", "tree", "fan"])
    p.add_argument("--params", help="comma-separated family parameters")
    p.add_argument("--input", help="poset JSON file")


def _load_poset(args) -> FinitePoset:
    if args.input:
        if args.family:
            raise InputError("give either --input or --family, not both")
        try:
            with open(args.input) as fh:
                data = json.load(fh)
            return FinitePoset.from_json_dict(data)
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise InputError(f"cannot read poset from {args.input}: {e}")
    if not args.family:
        raise InputError("a poset source is required (--family or --input)")
    if not args.params:
        raise InputError("--family requires --params")
    try:
        params = tuple(int(x) for x in args.params.split(","))
        return build_family(FamilyDescriptor(args.family, params))
    except (ValueError, PosetError) as e:
        raise InputError(f"bad family parameters: {e}")


def _frac_str(c) -> str:
    return f"{c.numerator}/{c.denominator}"


def _report_json(a: LiePosetAlgebra, rep: BreadthReport) -> dict:
    labels = a.poset.labels
    witness = [[labels[p], labels[q], _frac_str(c)]
               for (p, q), c in sorted(rep.witness.matrix_entries().items())]
    return {
        "dim": a.dim,
        "variant": a.variant,
        "value": rep.value,
        "status": rep.status,
        "witness": witness,
        "upper_bounds": [{"value": b.value, "provenance": b.provenance}
                         for b in rep.bounds],
        "seed": rep.seed,
        "trials": rep.trials,
    }


def cmd_poset(args) -> int:
    P = _load_poset(args)
    labels = P.labels
    summary = {
        "n": P.n,
        "relations": len(P.strict),
        "covers": len(P.covers),
        "non_covering": len(P.non_covering),
        "extremal": sorted(labels[i] for i in P.extremal_elements),
        "extremal_relations": sorted([labels[a], labels[b]]
                                     for a, b in P.extremal_relations),
    }
    if args.json_out:
        summary["poset"] = P.to_json_dict()
    print(json.dumps(summary, indent=2))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(P.hasse_dot())
    return 0


def cmd_breadth(args) -> int:
    P = _load_poset(args)
    a = build(P, args.variant)
    rep = breadth(a, mode=args.mode, seed=args.seed,
                     coeff_bound=args.coeff_bound, trials=args.trials)
    print(json.dumps(_report_json(a, rep), indent=2))
    return 0


def cmd_verify(args) -> int:
    outcome = CAMPAIGNS[args.campaign](seed=args.seed)
    print(json.dumps(outcome.to_json_dict(), indent=2))
    if args.campaign == "conjecture-grid":
        return 0
    return 0 if outcome.passed else 1


def cmd_spectrum(args) -> int:
    P = _load_poset(args)
    a = build(P, args.variant)
    values = breadth_spectrum_sample(a, seed=args.seed, trials=args.trials)
    print(json.dumps({"dim": a.dim, "variant": a.variant,
                      "values": sorted(values), "seed": args.seed,
                      "trials": args.trials}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetlie")
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    p = sub.add_parser("poset", help="build a poset and print its relation counts")
    _add_source_args(p)
    p.add_argument("--dot", help="write Hasse diagram DOT to this file")
    p.add_argument("--json-out", action="store_true",
                   help="include the poset JSON in the summary")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("breadth", help="compute the breadth of a Lie poset algebra")
    _add_source_args(p)
    p.add_argument("--variant", choices=list(VARIANTS), required=True)
    p.add_argument("--mode", choices=["fast", "certified"], default="fast")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)
    p.set_defaults(fn=cmd_breadth)

    p = sub.add_parser("verify", help="run a theorem verification campaign")
    p.add_argument("--campaign", choices=sorted(CAMPAIGNS), required=True)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("spectrum", help="sample achievable element breadths")
    _add_source_args(p)
    p.add_argument("--variant", choices=list(VARIANTS), required=True)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--trials", type=int, default=32)
    p.set_defaults(fn=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (InputError, PosetError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
