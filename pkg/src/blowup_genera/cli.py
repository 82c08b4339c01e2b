"""Command-line interface.

Machine-readable JSON goes to stdout (or --output); human-readable
progress goes to stderr via logging.  All randomness flows from explicit
seeds (default base 1729, seeds base..base+count-1), so identical
invocations produce identical outputs; wall-clock timing is only included
when --timing is passed.  Exit codes: 0 success or pass, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .blowup_factor import yk_euler, yk_gottsche, yk_hol, yk_main
from .coefficients import sample_specialization
from .genera import SeriesRequest, series_report
from .partitions import FixedPointCache
from .verify import (
    DEFAULT_SEED_BASE,
    default_order,
    default_seeds,
    verify_corollary,
    verify_limit_consistency,
    verify_main_theorem,
    verify_rank1_identity,
)

CACHE_ENV_VAR = "BLOWUP_GENERA_CACHE"

logger = logging.getLogger("blowup_genera")


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.add_argument("--threads", type=int, default=1, help="worker threads (results are independent of this)")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the JSON output")
    p.add_argument(
        "--cache-dir",
        default=os.environ.get(CACHE_ENV_VAR),
        help=f"fixed-point cache directory (env {CACHE_ENV_VAR})",
    )
    p.add_argument("--verbose", action="store_true", help="log progress to stderr")


def _seed_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seeds", type=int, default=5, help="number of specializations")
    p.add_argument("--seed-base", type=int, default=DEFAULT_SEED_BASE)
    p.add_argument("--seed-list", help="comma-separated explicit seeds, overrides --seeds")


def _series_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=DEFAULT_SEED_BASE)
    p.add_argument("--max-n", type=int, help="diagram-weight cutoff")
    p.add_argument("--order", type=int, help="target q-order (alternative to --max-n)")
    p.add_argument("--mode", choices=("equivariant", "limit"), default="equivariant")
    p.add_argument("--y-mode", choices=("symbolic", "numeric"), default="symbolic")
    p.add_argument("--y0", default="1", help="rational y value for numeric mode, e.g. 1 or 2/3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowup-genera",
        description="Exact localization series and blow-up factor verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute-z", help="plane moduli generating series")
    p.add_argument("--rank", type=int, required=True)
    _series_flags(p)
    _common_flags(p)

    p = sub.add_parser("compute-zhat", help="blow-up moduli generating series")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    _series_flags(p)
    _common_flags(p)

    p = sub.add_parser("compute-yk", help="universal blow-up factor")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--form", choices=("main", "gottsche", "euler", "hol"), default="main")
    _common_flags(p)

    p = sub.add_parser("compute-w", help="rank-one hook series")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED_BASE)
    p.add_argument(
        "--substitution", choices=("identity", "t2/t1", "t1/t2"), default="identity"
    )
    _common_flags(p)

    p = sub.add_parser("verify-blowup", help="main blow-up identity zhat = yk * z")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--order", type=int)
    p.add_argument("--mode", choices=("equivariant", "limit"), default="equivariant")
    _seed_flags(p)
    _common_flags(p)

    p = sub.add_parser("verify-rank1", help="rank-one infinite-product identity")
    p.add_argument("--order", type=int, default=8)
    _seed_flags(p)
    _common_flags(p)

    p = sub.add_parser("verify-corollary", help="Euler and holomorphic branches")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--order", type=int)
    _seed_flags(p)
    _common_flags(p)

    p = sub.add_parser("verify-limits", help="equivariant vs limit mode quotients")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--order", type=int)
    _seed_flags(p)
    _common_flags(p)

    p = sub.add_parser("verify-all", help="the documented default verification grid")
    _seed_flags(p)
    _common_flags(p)

    return parser


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _seeds_from(args) -> tuple[int, ...]:
    if getattr(args, "seed_list", None):
        return tuple(int(s) for s in args.seed_list.split(","))
    return default_seeds(args.seeds, args.seed_base)


def _check_k(parser, r: int, k: int) -> None:
    if not 0 <= k < r:
        parser.error(f"--k must satisfy 0 <= k < rank, got k={k}, rank={r}")


def _max_n_from(parser, args, r: int, k: int = 0) -> int:
    if args.max_n is not None:
        return args.max_n
    if args.order is not None:
        return max(-(-(args.order - k * (r - k)) // (2 * r)), 0)
    parser.error("one of --max-n or --order is required")


def _series_request(args, r: int, k: int = 0) -> SeriesRequest:
    y0 = None if args.y_mode == "symbolic" else Fraction(args.y0)
    spec = sample_specialization(r, args.seed, y0)
    cache = FixedPointCache(args.cache_dir) if args.cache_dir else None
    return spec, cache


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(message)s",
    )

    if args.command == "compute-z":
        max_n = _max_n_from(parser, args, args.rank)
        spec, cache = _series_request(args, args.rank)
        req = SeriesRequest(
            rank=args.rank, max_n=max_n, spec=spec, k=0, mode=args.mode,
            cache=cache, threads=args.threads,
        )
        _emit(series_report("z", req, include_timing=args.timing), args)
        return 0

    if args.command == "compute-zhat":
        _check_k(parser, args.rank, args.k)
        max_n = _max_n_from(parser, args, args.rank, args.k)
        spec, cache = _series_request(args, args.rank)
        req = SeriesRequest(
            rank=args.rank, max_n=max_n, spec=spec, k=args.k, mode=args.mode,
            cache=cache, threads=args.threads,
        )
        _emit(series_report("zhat", req, include_timing=args.timing), args)
        return 0

    if args.command == "compute-yk":
        _check_k(parser, args.rank, args.k)
        form = args.form
        payload = {
            "schema": "series-report/1",
            "kind": f"yk-{form}",
            "params": {"rank": args.rank, "k": args.k, "order": args.order},
        }
        if form == "main":
            payload["series"] = yk_main(args.rank, args.k, args.order).to_json()
        elif form == "gottsche":
            payload["series"] = yk_gottsche(args.rank, args.k, args.order).to_json()
        elif form == "euler":
            payload["series"] = yk_euler(args.rank, args.k, args.order).to_json()
        else:
            payload["holomorphic"] = yk_hol(args.rank, args.k, args.order).to_json()
        _emit(payload, args)
        return 0

    if args.command == "compute-w":
        from .rank1 import w_series

        spec = sample_specialization(1, args.seed, None)
        series = w_series(spec, args.order, args.substitution)
        _emit(
            {
                "schema": "series-report/1",
                "kind": "w",
                "params": {
                    "order": args.order,
                    "seed": args.seed,
                    "substitution": args.substitution,
                    "prng": "splitmix64",
                },
                "series": series.to_json(),
            },
            args,
        )
        return 0

    if args.command == "verify-blowup":
        _check_k(parser, args.rank, args.k)
        order = args.order if args.order is not None else default_order(args.rank, args.k)
        report = verify_main_theorem(
            args.rank, args.k, order, _seeds_from(args), mode=args.mode,
            threads=args.threads,
        )
        _emit(report.to_json(include_timing=args.timing), args)
        return 0 if report.outcome else 1

    if args.command == "verify-rank1":
        report = verify_rank1_identity(args.order, _seeds_from(args))
        _emit(report.to_json(include_timing=args.timing), args)
        return 0 if report.outcome else 1

    if args.command == "verify-corollary":
        _check_k(parser, args.rank, args.k)
        report = verify_corollary(args.rank, args.k, args.order, _seeds_from(args))
        _emit(report.to_json(include_timing=args.timing), args)
        return 0 if report.outcome else 1

    if args.command == "verify-limits":
        _check_k(parser, args.rank, args.k)
        report = verify_limit_consistency(args.rank, args.k, args.order, _seeds_from(args))
        _emit(report.to_json(include_timing=args.timing), args)
        return 0 if report.outcome else 1

    if args.command == "verify-all":
        seeds = _seeds_from(args)
        reports = [verify_rank1_identity(8, seeds[:3])]
        for r in (1, 2, 3):
            for k in range(r):
                reports.append(verify_main_theorem(r, k, default_order(r, k), seeds))
                reports.append(verify_corollary(r, k, default_order(r, k), seeds))
                lim_order = 2 * r * min(2, 8 // r) + k * (r - k)
                reports.append(verify_limit_consistency(r, k, lim_order, seeds))
        payload = {
            "schema": "verification-report/1",
            "check": "verify-all",
            "outcome": "pass" if all(rep.outcome for rep in reports) else "fail",
            "reports": [rep.to_json(include_timing=args.timing) for rep in reports],
        }
        _emit(payload, args)
        return 0 if all(rep.outcome for rep in reports) else 1

    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
