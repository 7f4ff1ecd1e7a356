"""Command line front end: poly, verify, limit and hull subcommands.

Exit status 0 on success, 2 on usage or parse errors (including unknown
suites) and 3 on domain errors, with a one-line message on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from gmpy2 import mpq as Q

from . import limits
from .hopoly import DegenerateError, nonsym_E
from .jack import JackError, nonsym_jack
from .rootsys import Multiplicity, RootSystem, RootSystemError, rho, root_system
from .spectra import SpectralParameter, in_convex_hull_of_orbit, is_bounded_spectral
from .verify import SUITES, SuiteError, run_suite

VALUE_FLAGS = {"--weight", "--kappa", "--kappa3", "--point", "--im", "--grid", "--schedule"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_rationals(text: str) -> tuple:
    try:
        return tuple(Q(t.strip()) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as comma-separated rationals")


def parse_ints(text: str) -> tuple[int, ...]:
    vals = parse_rationals(text)
    if any(v.denominator != 1 for v in vals):
        raise UsageError(f"weight {text!r} must have integer entries")
    return tuple(int(v) for v in vals)


def parse_kappa(desc: RootSystem, values: Sequence) -> Multiplicity:
    """Full arity, or just the labels that actually occur at this rank."""
    values = tuple(values)
    if len(values) == len(desc.labels):
        return desc.multiplicity(values)
    present = [lab for lab in desc.labels if any(l == lab for _, l in desc.positive_roots)]
    if len(values) == len(present):
        it = iter(values)
        return desc.multiplicity(next(it) if lab in present else 0 for lab in desc.labels)
    raise RootSystemError(
        f"{desc.family}{desc.rank} takes {len(desc.labels)} multiplicities {desc.labels}, "
        f"got {len(values)}")


def parse_grid(text: str, n: int):
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError("grid must look like lo:hi:step")
    lo, hi, step = (parse_rationals(p)[0] if p else None for p in parts)
    if None in (lo, hi, step):
        raise UsageError("grid must look like lo:hi:step")
    return limits.make_grid(n, lo, hi, step)


def parse_schedule(text: str) -> limits.LimitSchedule:
    if text == "default":
        return limits.default_schedule()
    if text in ("k2zero", "k2=0"):
        return limits.k2_zero_schedule()
    pts = []
    for chunk in text.split(","):
        pair = chunk.split(":")
        if len(pair) != 2:
            raise UsageError("schedule must be default, k2zero or k1:k2,k1:k2,...")
        pts.append((parse_rationals(pair[0])[0], parse_rationals(pair[1])[0]))
    return limits.LimitSchedule(tuple(pts))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="heckman-opdam", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    q = sub.add_parser("poly", help="non-symmetric polynomial E_lambda as JSON")
    q.add_argument("--family", default="BC")
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--kappa", required=True)
    q.add_argument("--weight", required=True)
    q.add_argument("--jack", action="store_true", help="non-symmetric Jack polynomial instead")
    q.add_argument("--output", "-o")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--family", default="BC")
    v.add_argument("--rank", type=int, required=True)
    v.add_argument("--kappa", help="one multiplicity; default is the built-in sample list")
    v.add_argument("--kappa3", help="k3 values for the bcjack suite")
    v.add_argument("--output", "-o")

    l = sub.add_parser("limit", help="BC -> A convergence table as CSV")
    l.add_argument("--weight", required=True)
    l.add_argument("--kappa3", default="1")
    l.add_argument("--schedule", default="default")
    l.add_argument("--grid", default="-2:2:1/2")
    l.add_argument("--output", "-o")

    h = sub.add_parser("hull", help="membership of a spectral parameter in C(rho(k)) + i a")
    h.add_argument("--family", default="BC")
    h.add_argument("--rank", type=int, required=True)
    h.add_argument("--kappa", required=True)
    h.add_argument("--point", required=True)
    h.add_argument("--im")
    h.add_argument("--output", "-o")
    return p


def cmd_poly(args) -> str:
    lam = parse_ints(args.weight)
    if len(lam) != args.rank:
        raise RootSystemError(f"weight {lam} does not have rank {args.rank}")
    if args.jack:
        k = parse_rationals(args.kappa)
        if len(k) != 1:
            raise UsageError("--jack takes a single k in --kappa")
        return json.dumps(nonsym_jack(lam, k[0]).to_dict())
    desc = root_system(args.family, args.rank)
    kappa = parse_kappa(desc, parse_rationals(args.kappa))
    return json.dumps(nonsym_E(desc, lam, kappa).to_dict())


def cmd_verify(args) -> tuple[str, bool]:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}")
    kappas = k3s = None
    if args.kappa:
        desc = root_system(args.family, args.rank)
        kappas = [parse_kappa(desc, parse_rationals(args.kappa))]
    if args.kappa3:
        k3s = parse_rationals(args.kappa3)
    report = run_suite(args.suite, args.family, args.rank, kappas, k3s)
    return json.dumps(report), report["failed"] == 0


def cmd_limit(args) -> str:
    lam = parse_ints(args.weight)
    k3 = parse_rationals(args.kappa3)
    if len(k3) != 1:
        raise UsageError("--kappa3 takes a single value")
    grid = parse_grid(args.grid, len(lam))
    rows = limits.convergence_table(lam, k3[0], parse_schedule(args.schedule), grid)
    return limits.table_to_csv(rows)


def cmd_hull(args) -> str:
    desc = root_system(args.family, args.rank)
    kappa = parse_kappa(desc, parse_rationals(args.kappa))
    re = parse_rationals(args.point)
    im = parse_rationals(args.im) if args.im else (0,) * len(re)
    if len(re) != desc.rank or len(im) != desc.rank:
        raise RootSystemError(f"point must have rank {desc.rank}")
    lam = SpectralParameter(re, im)
    out = {
        "re": [str(v) for v in lam.re],
        "im": [str(v) for v in lam.im],
        "kappa": kappa.as_strings(),
        "rho": [str(v) for v in rho(desc, kappa)],
        "in_hull": in_convex_hull_of_orbit(desc, lam.re, kappa),
        "bounded": is_bounded_spectral(desc, lam, kappa),
    }
    return json.dumps(out)


def _join_values(argv: Sequence[str]) -> list[str]:
    # "--weight -1,2" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _emit(text: str, path: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_join_values(argv))
        if args.command is None:
            raise UsageError("a subcommand is required: poly, verify, limit or hull")
        ok = True
        if args.command == "poly":
            text = cmd_poly(args)
        elif args.command == "verify":
            text, ok = cmd_verify(args)
        elif args.command == "limit":
            text = cmd_limit(args)
        else:
            text = cmd_hull(args)
        _emit(text, args.output)
        return 0 if ok else 1
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RootSystemError, DegenerateError, JackError, SuiteError,
            limits.LimitError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
