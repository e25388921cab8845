"""
Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error,
3 enumeration size above the cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import asdict, dataclass

from . import enumerative
from .diagram import diagram, essential_set, render_board
from .maps import DomainError, phi, phi_fibers
from .paths import LatticePath, PathError, psi_em, psi_em_inverse, tau_k
from .perm import (
    PermutationError,
    des,
    descent_set,
    format_permutation,
    generate_avoiding,
    inversions,
    left_to_right_minima,
    parse_permutation,
    pattern_set,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class AnalysisReport:
    permutation: list[int]
    n: int
    is_schroeder: bool
    max_rank: int
    inversions: int
    diagram_size: int
    descent_set: list[int]
    left_to_right_minima: list[int]
    essential_set: list[list[int]]
    phi: list[int] | None
    psi_em: str | None
    tau: dict[str, int] | None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        return cls(**d)


def analyze(p) -> AnalysisReport:
    E = essential_set(p)
    schroeder = E.max_rank() <= 1
    path = psi_em(p) if schroeder and len(p) > 0 else None
    report = AnalysisReport(
        permutation=list(p),
        n=len(p),
        is_schroeder=schroeder,
        max_rank=E.max_rank(),
        inversions=inversions(p),
        diagram_size=len(diagram(p)),
        descent_set=sorted(descent_set(p)),
        left_to_right_minima=sorted(left_to_right_minima(p)),
        essential_set=[list(e) for e in E.entries],
        phi=list(phi(p)) if schroeder else None,
        psi_em=str(path) if path is not None else None,
        tau={str(k): tau_k(path, k) for k in range(2, 6)} if path is not None else None,
    )
    assert report.diagram_size == report.inversions
    return report


def _format_report(r: AnalysisReport) -> str:
    lines = [
        f"permutation: {format_permutation(r.permutation)}",
        f"n: {r.n}",
        f"schroeder (avoids 1243, 2143): {'yes' if r.is_schroeder else 'no'}",
        f"max rank: {r.max_rank}",
        f"inversions: {r.inversions}",
        f"descents: {r.descent_set}",
        f"left-to-right minima: {r.left_to_right_minima}",
        "essential set: " + (", ".join(f"({i},{j}):{k}" for i, j, k in r.essential_set) or "empty"),
    ]
    if r.phi is not None:
        lines.append(f"phi: {format_permutation(r.phi)}")
    if r.psi_em is not None:
        lines.append(f"path: {r.psi_em or '(empty)'}")
        lines.append("tau: " + ", ".join(f"k={k}: {v}" for k, v in r.tau.items()))
    return "\n".join(lines)


def _parse_patterns(text: str):
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError("avoid-list required")
    return pattern_set(parse_permutation(t) for t in items)


def cmd_analyze(args, out) -> int:
    p = parse_permutation(args.permutation)
    report = analyze(p)
    if args.json:
        print(json.dumps(report.to_dict()), file=out)
    else:
        print(_format_report(report), file=out)
    if args.ascii:
        print(render_board(p), file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    patterns = _parse_patterns(args.avoid)
    enumerative.check_cap(args.n, args.force)
    count = 0
    inv_hist: Counter = Counter()
    des_hist: Counter = Counter()
    for p in generate_avoiding(args.n, patterns):
        count += 1
        if args.list:
            print(format_permutation(p), file=out)
        if args.stats:
            inv_hist[inversions(p)] += 1
            des_hist[des(p)] += 1
    if args.stats:
        print(json.dumps({"count": count,
                          "inversions": {str(k): v for k, v in sorted(inv_hist.items())},
                          "descents": {str(k): v for k, v in sorted(des_hist.items())}}), file=out)
    else:
        print(count, file=out)
    return EXIT_OK


def _emit_results(results, args, out) -> int:
    lines = [r.to_json() for r in results]
    if args.out:
        with open(args.out, "w") as f:
            f.writelines(line + "\n" for line in lines)
    else:
        for line in lines:
            print(line, file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def cmd_verify(args, out) -> int:
    results = enumerative.verify_identities(args.max_n, workers=args.workers, force=args.force)
    return _emit_results(results, args, out)


def cmd_conjecture(args, out) -> int:
    if args.m < 3 or args.k < 3:
        raise UsageError("conjecture needs m >= 3 and k >= 3")
    results = enumerative.check_conjecture(args.m, args.k, args.max_n,
                                           workers=args.workers, force=args.force)
    for r in results:
        if not r.passed:
            print(f"counterexample: n={r.n}: {r.expected} avoid 12...{args.k}, "
                  f"{r.actual} avoid 213...{args.k}", file=sys.stderr)
    return _emit_results(results, args, out)


def cmd_fibers(args, out) -> int:
    s = parse_permutation(args.permutation)
    for q in phi_fibers(s):
        print(format_permutation(q), file=out)
    return EXIT_OK


def cmd_path(args, out) -> int:
    text = args.value.strip()
    if text and text.upper().strip("NED") == "":
        print(format_permutation(psi_em_inverse(LatticePath(text))), file=out)
    elif text.upper() == "EMPTY":
        print(format_permutation(psi_em_inverse(LatticePath(""))), file=out)
    else:
        print(str(psi_em(parse_permutation(text))), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schroeder",
        description="Diagrams, essential sets and lattice paths of Schröder permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report on a single permutation")
    p.add_argument("permutation", help='e.g. "4 7 5 2 6 3 1" or 4752631')
    p.add_argument("--ascii", action="store_true", help="print the rank-labelled board")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="count or list an avoidance class")
    p.add_argument("n", type=int)
    p.add_argument("--avoid", required=True, help="comma-separated patterns, e.g. 1243,2143")
    p.add_argument("--list", action="store_true", help="stream the members")
    p.add_argument("--stats", action="store_true", help="inversion and descent histograms")
    p.add_argument("--force", action="store_true", help="allow n above the cap")
    p.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (("verify", cmd_verify, "check closed forms against brute force"),
                                 ("conjecture", cmd_conjecture, "compare T_m + 12...k with T_m + 213...k")):
        p = sub.add_parser(name, help=helptext)
        if name == "conjecture":
            p.add_argument("m", type=int)
            p.add_argument("k", type=int)
        p.add_argument("max_n", type=int)
        p.add_argument("--out", help="write JSON lines here instead of stdout")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--force", action="store_true", help="allow max_n above the cap")
        p.set_defaults(func=func)

    p = sub.add_parser("fibers", help="all Schröder permutations phi sends to a 132-avoider")
    p.add_argument("permutation")
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("path", help="permutation to path word, or path word to permutation")
    p.add_argument("value", help='a permutation, a word over N/E/D, or "empty"')
    p.set_defaults(func=cmd_path)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except enumerative.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, PermutationError, PathError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
