"""Command-line front end.  JSON goes to stdout, diagnostics to stderr.

Exit codes: 0 certified/success, 2 inconclusive, 1 failure or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from .census import quotient_census
from .coset import DEFAULT_BUDGET
from .framed_link import FramedLink, build_Y, link_h1, reduce_Y
from .intmatrix import IntMatrix, determinant, product as transvection_product
from .mapping_torus import (
    MappingTorus,
    circle_surgery_group,
    cs_condition,
    cs_search,
    realize_by_surgeries,
    replay,
    torus_presentation,
)
from .presentation import Presentation, abelianization
from .surgery import CERTIFIED, FAILED, INCONCLUSIVE, verify_sphere

BUDGET_ENV = "TORUSCALC_BUDGET"
EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _budget(args) -> int:
    if args.budget is not None:
        budget = args.budget
    elif os.environ.get(BUDGET_ENV):
        try:
            budget = int(os.environ[BUDGET_ENV])
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be a positive integer") from None
    else:
        budget = DEFAULT_BUDGET
    if budget < 1:
        raise UsageError("budget must be a positive integer")
    return budget


def exit_code(verdict: str) -> int:
    return {CERTIFIED: EXIT_OK, INCONCLUSIVE: EXIT_INCONCLUSIVE}.get(verdict, EXIT_ERROR)


def _report_dict(params, budget, command, timing):
    report = verify_sphere(*params, budget=budget)
    report.command = command
    d = report.to_dict()
    if not timing:
        d["elapsed_ms"] = None
    return d


def _scan_worker(job):
    return _report_dict(*job)


def cmd_verify_sphere(args) -> int:
    budget = _budget(args)
    params = (args.m, args.n, args.mp, args.np)
    command = f"verify-sphere --m {args.m} --n {args.n} --mp {args.mp} --np {args.np} --budget {budget}"
    d = _report_dict(params, budget, command, args.timing)
    _emit(d)
    return exit_code(d["verdict"])


def cmd_scan(args) -> int:
    if args.range < 0:
        raise UsageError("--range must be >= 0")
    budget = _budget(args)
    r = args.range
    tuples = list(product(range(-r, r + 1), repeat=4))
    command = f"scan --range {r} --budget {budget}"
    jobs = [(t, budget, command, args.timing) for t in tuples]
    start = time.perf_counter()
    if args.parallel:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            reports = list(pool.map(_scan_worker, jobs, chunksize=max(1, len(jobs) // 64)))
    else:
        reports = [_scan_worker(j) for j in jobs]
    reports.sort(key=lambda d: tuple(d["params"].values()))
    counts = {v: sum(1 for d in reports if d["verdict"] == v) for v in (CERTIFIED, INCONCLUSIVE, FAILED)}
    _emit(reports)
    elapsed = time.perf_counter() - start
    print(
        f"scan range {r}: {len(reports)} tuples, "
        + ", ".join(f"{k}={v}" for k, v in counts.items())
        + f" ({elapsed:.1f}s)",
        file=sys.stderr,
    )
    if counts[FAILED]:
        return EXIT_ERROR
    if counts[INCONCLUSIVE]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _matrix(text: str) -> IntMatrix:
    try:
        return IntMatrix.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def cmd_cs_search(args) -> int:
    try:
        found = cs_search(args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({
        "command": f"cs-search --bound {args.bound}",
        "bound": args.bound,
        "count": len(found),
        "matrices": [m.to_text() for m in found],
    })
    return EXIT_OK


def cmd_factor(args) -> int:
    m = _matrix(args.matrix)
    try:
        factors = realize_by_surgeries(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    # realize_by_surgeries is in replay order; the matrix product runs the other way
    product_order = list(reversed(factors))
    _emit({
        "command": f"factor --matrix {m.to_text()}",
        "matrix": m.to_text(),
        "factors": [{"i": t.i, "j": t.j, "k": t.k} for t in product_order],
        "factors_text": " ".join(str(t) for t in product_order),
        "replay_order": " ".join(str(t) for t in factors),
        "product": transvection_product(product_order).to_text(),
        "replay_result": replay(factors).monodromy.to_text(),
    })
    return EXIT_OK


def cmd_mt_h1(args) -> int:
    m = _matrix(args.matrix)
    if m.shape != (3, 3):
        raise UsageError("mt-h1 needs a 3x3 matrix")
    if determinant(m) != 1:
        raise UsageError("monodromy must have determinant +1")
    mt = MappingTorus(m)
    cs = cs_condition(m)
    _emit({
        "command": f"mt-h1 --matrix {m.to_text()}",
        "monodromy": m.to_text(),
        "h1": list(abelianization(torus_presentation(mt)).invariant_factors),
        "cs_condition": cs,
        "is_cappell_shaneson": cs in (1, -1),
        "circle_surgery_group": list(circle_surgery_group(mt).invariant_factors),
    })
    return EXIT_OK


def cmd_y3(args) -> int:
    y = build_Y(args.m, args.n)
    moves, reduced = reduce_Y(args.m, args.n)
    _emit({
        "command": f"y3 --m {args.m} --n {args.n}",
        "params": {"m": args.m, "n": args.n},
        "link": y.to_dict(),
        "h1": list(link_h1(y).invariant_factors),
        "moves": [list(mv) for mv in moves],
        "reduced_link": reduced.to_dict(),
        "reduced_h1": list(link_h1(reduced).invariant_factors),
        "note": "linking-matrix level only; the knot type of the remaining component is not determined",
    })
    return EXIT_OK


def cmd_link_h1(args) -> int:
    m = _matrix(args.matrix)
    try:
        link = FramedLink.from_matrix(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({
        "command": f"link-h1 --matrix {m.to_text()}",
        "link": link.to_dict(),
        "h1": list(link_h1(link).invariant_factors),
    })
    return EXIT_OK


def cmd_census(args) -> int:
    text = args.presentation.replace("\\n", "\n")
    try:
        p = Presentation.parse(text)
        counts = quotient_census(p, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({
        "command": "census",
        "presentation": p.to_dict(),
        "bound": args.bound,
        "counts": counts,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toruscalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flags(p):
        p.add_argument("--budget", type=int, default=None, help=f"max coset table rows (env {BUDGET_ENV}, default {DEFAULT_BUDGET})")
        p.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes output run-dependent)")

    p = sub.add_parser("verify-sphere", help="certify one member of the sphere family")
    for flag in ("--m", "--n", "--mp", "--np"):
        p.add_argument(flag, type=int, required=True)
    budget_flags(p)
    p.set_defaults(func=cmd_verify_sphere)

    p = sub.add_parser("scan", help="verify every tuple in [-R, R]^4")
    p.add_argument("--range", type=int, required=True)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    budget_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("cs-search", help="Cappell-Shaneson monodromies with bounded entries")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
    p.set_defaults(func=cmd_cs_search)

    p = sub.add_parser("factor", help="factor an SL(3,Z) matrix into unit transvections")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("mt-h1", help="homology data of a mapping torus")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_mt_h1)

    p = sub.add_parser("y3", help="linking matrix and H1 of the surgered 3-torus Y(m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
    p.set_defaults(func=cmd_y3)

    p = sub.add_parser("link-h1", help="H1 of the 3-manifold given by a linking matrix")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_link_h1)

    p = sub.add_parser("census", help="homomorphism counts into small finite groups")
    p.add_argument("--presentation", required=True, help='e.g. "gens: a,b / rels: a^2; b^3; (a b)^3"')
    p.add_argument("--bound", type=int, default=120)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 means "inconclusive" here
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"toruscalc {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
