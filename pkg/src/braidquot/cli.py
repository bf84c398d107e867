"""Command-line entry point (``braidquot``)."""

from __future__ import annotations

import argparse
import logging
import sys

from . import scenarios as sc
from .braids import braid
from .burau import ImageTooLarge, format_matrix, image_order, rho_m
from .intlinalg import read_triplets, rank_mod_p, smith_normal_form
from .words import WordError, parse_word

VERIFY_TARGETS = ("table1", "quotients", "frontier", "wajnryb", "abelianizations", "table3", "crystal", "crystal33", "all")


def _verify_jobs(args) -> list[tuple[str, dict]]:
    t = args.target
    if t == "all":
        jobs = [("table1", {}), ("images", {}), ("quotients", {}), ("wajnryb", {}),
                ("abelianizations", {"mode": "full" if args.long else "rank", "long": args.long}),
                ("table3", {}), ("crystal", {}), ("crystal33", {})]
        if args.long:
            jobs.append(("frontier", {}))
        return jobs
    if t == "quotients":
        return [("images", {}), ("quotients", {})]
    if t == "abelianizations":
        return [("abelianizations", {"mode": args.mode, "long": args.long})]
    if t == "crystal":
        if None in (args.n, args.m, args.k):
            return [("crystal", {})]
        return [("crystal", {"cases": [(args.n, args.m, args.k)]})]
    if t == "crystal33":
        return [("crystal33", {"qs": [args.q] if args.q is not None else None})]
    return [(t, {})]


def cmd_verify(args) -> int:
    cfg = sc.load_config(
        args.config,
        overrides={"max_cosets": args.max_cosets, "jobs": args.jobs, "output": args.output},
    )
    records = sc.run_suites(_verify_jobs(args), cfg)
    for r in records:
        print(sc.summary_line(r))
    if cfg.output:
        sc.report(records, cfg.output)
    code = sc.exit_code(records)
    counts = {s: sum(r.status == s for r in records) for s in sc.STATUSES}
    print(" ".join(f"{k}={v}" for k, v in counts.items()), f"exit={code}")
    return code


def cmd_snf(args) -> int:
    res = smith_normal_form(read_triplets(args.file))
    print(f"rank: {res.rank}")
    print(f"free_rank: {res.free_rank}")
    print("torsion: " + " ".join(str(d) for d in res.torsion))
    print("divisors: " + " ".join(str(d) for d in res.divisors))
    return 0


def cmd_rank(args) -> int:
    print(rank_mod_p(read_triplets(args.file), args.prime))
    return 0


def cmd_rho(args) -> int:
    print(format_matrix(rho_m(braid(args.n, parse_word(args.word)), args.m).entries))
    return 0


def cmd_image_order(args) -> int:
    print(image_order(args.n, args.m, args.cap))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidquot", description="Exact computations with braid group quotients.")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification scenarios and report")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--mode", choices=("full", "rank"), default="rank", help="abelianizations: full SNF or modular rank for (5,3)")
    v.add_argument("--long", action="store_true", help="include long-running computations")
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--output", help="report file path")
    v.add_argument("--max-cosets", type=int, dest="max_cosets")
    v.add_argument("--jobs", type=int)
    v.add_argument("--config", help="key = value configuration file")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("snf", help="Smith normal form of a triplet-format matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_snf)

    r = sub.add_parser("rank", help="rank modulo a prime of a triplet-format matrix")
    r.add_argument("--prime", type=int, required=True)
    r.add_argument("file")
    r.set_defaults(func=cmd_rank)

    h = sub.add_parser("rho", help="image of a braid word modulo m")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--m", type=int, required=True)
    h.add_argument("--word", required=True)
    h.set_defaults(func=cmd_rho)

    i = sub.add_parser("image-order", help="order of B_n / B_n[m]")
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--m", type=int, required=True)
    i.add_argument("--cap", type=int, default=10**6)
    i.set_defaults(func=cmd_image_order)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (WordError, ValueError, ImageTooLarge, OSError) as exc:
        print(f"braidquot: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
