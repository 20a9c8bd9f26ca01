"""Command-line front end: ``phenylene <subcommand> ...``.

Exit codes: 0 success, 1 a check failed or two methods disagreed,
2 bad input or a refused range.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .cuts import cut_classes, mostar_cut
from .enumeration import MAX_H_ENV, enumerate_classes
from .errors import PhenyleneError, RangeError
from .families import describe, parse_family
from .formulas import FORMULAS
from .geometry import geometric_embedding
from .graph import mostar_direct
from .model import PhenyleneTree, expand
from .verify import (THEOREMS, check_lemma_4_1, check_lemma_4_3, check_lemma_5_2, rank, run_trials,
                     verify)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise RangeError(f"cannot read {path}: {exc.strerror}") from None


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True)


def parse_h_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise RangeError(f"h range must look like A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise RangeError(f"empty or invalid h range {text!r}")
    return range(a, b + 1)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_compute(args: argparse.Namespace) -> int:
    tree = PhenyleneTree.from_json(_read_text(args.input))
    out = sys.stdout
    if args.method == "direct":
        print(mostar_direct(expand(tree)), file=out)
        return EXIT_OK
    if args.method == "cut":
        print(mostar_cut(tree), file=out)
        return EXIT_OK
    direct = mostar_direct(expand(tree))
    classes = cut_classes(tree)
    cut = sum(c.contribution for c in classes)
    print(f"{'edge':>12} {'o':>3} {'r_u':>4} {'r_v':>4} {'contribution':>12}", file=out)
    for c in sorted(classes, key=lambda c: c.representative):
        u, v = c.representative
        print(f"{f'{u}-{v}':>12} {c.size:>3} {c.r_u:>4} {c.r_v:>4} {c.contribution:>12}", file=out)
    agree = cut == direct
    print(f"direct {direct}", file=out)
    print(f"cut {cut}", file=out)
    print("agree" if agree else "DISAGREE", file=out)
    return EXIT_OK if agree else EXIT_FAIL


def to_dot(tree: PhenyleneTree) -> str:
    """Graphviz text with exact coordinates (``x = a + b*sqrt(3)`` in half-units)
    as ``exact`` attributes and their decimal value as ``pos``."""
    emb = geometric_embedding(tree)
    g = expand(tree)
    lines = ["graph phenylene {", "  node [shape=point];"]
    for vid, (x, y) in enumerate(emb.vertices):
        lines.append(f'  {vid} [pos="{x.decimal()},{y.decimal()}!", exact="({x}, {y})"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_family(args: argparse.Namespace) -> int:
    tree = parse_family(args.spec)
    print(tree.to_json())
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(tree))
    return EXIT_OK


def cmd_formula(args: argparse.Namespace) -> int:
    if args.name not in FORMULAS:
        raise RangeError(f"unknown formula {args.name!r}; expected one of {', '.join(FORMULAS)}")
    fn, arity = FORMULAS[args.name]
    try:
        params = [int(x) for x in args.params.split(",")]
    except ValueError:
        raise RangeError(f"parameters must be comma-separated integers, got {args.params!r}") from None
    if len(params) != arity:
        raise RangeError(f"{args.name} takes {arity} parameter(s), got {len(params)}")
    result = fn(*params)
    print(_dump(result.to_dict()))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    catalog = enumerate_classes(args.h, args.chains_only, args.planar_only, max_h=args.max_h)
    for e in catalog.entries:
        print(_dump({
            "tree": e.tree.to_dict(), "certificate": e.certificate.hex(), "mo": e.mo,
            "overlap": e.overlap, "name": describe(e.tree),
        }))
    print(_dump({"summary": {"h": catalog.h, "chains_only": catalog.chains_only,
                             "planar_only": catalog.planar_only, **catalog.counts}}))
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    report = rank(args.h, args.chains_only, args.planar_only, max_h=args.max_h)
    groups = report.groups[: args.top] if args.top else report.groups
    if args.format == "json":
        print(_dump(report.to_dict(args.top)))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank", "mo_value", "class_count", "member_specs"])
        for i, g in enumerate(groups, start=1):
            w.writerow([i, g.value, len(g.members), ";".join(sorted(g.names()))])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"{'rank':>4} {'mo':>8} {'classes':>7}  members")
        for i, g in enumerate(groups, start=1):
            print(f"{i:>4} {g.value:>8} {len(g.members):>7}  {', '.join(sorted(g.names()))}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    verdicts = [verify(th, h, planar_only=args.planar_only, max_h=args.max_h)
                for th in theorems for h in parse_h_range(args.h_range)]
    if args.format == "json":
        print(_dump([v.to_dict() for v in verdicts]))
    else:
        for v in verdicts:
            obs = "-" if v.observed_value is None else v.observed_value
            print(f"{v.claim:>4} h={v.h:<3} {v.status:<8} expected={v.expected_value} observed={obs}"
                  f"  {', '.join(v.observed_members)}")
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAIL


def cmd_check_lemmas(args: argparse.Namespace) -> int:
    rows = []
    for lemma in ("3.1", "3.2", "3.3"):
        s = run_trials(lemma, args.trials, args.seed, max_h=args.max_h)
        rows.append((lemma, s.passed, f"{args.trials} trials, {len(s.violations)} violations",
                     s.to_dict()))
    for lemma, fn, hs in (("4.1", check_lemma_4_1, range(4, 31)),
                          ("4.3", check_lemma_4_3, range(4, 13)),
                          ("5.2", check_lemma_5_2, range(5, 13))):
        checks = [fn(h) for h in hs]
        bad = [c.values["h"] for c in checks if not c.passed]
        rows.append((lemma, not bad, f"h={hs.start}..{hs.stop - 1}, failing h: {bad or 'none'}",
                     {"lemma": lemma, "passed": not bad, "checks": [c.to_dict() for c in checks]}))
    if args.format == "json":
        print(_dump([r[3] for r in rows]))
    else:
        for lemma, ok, note, _ in rows:
            print(f"{lemma:>4} {'pass' if ok else 'FAIL':<5} {note}")
    return EXIT_OK if all(r[1] for r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="phenylene",
        description="Mostar index of tree-like phenylenes: computation, enumeration and extremal checks.",
        epilog=f"The enumeration bound (default 9) can be raised with {MAX_H_ENV} or --max-h.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="Mostar index of a phenylene given as JSON")
    c.add_argument("input", help="JSON file, or - for stdin")
    c.add_argument("--method", choices=("direct", "cut", "both"), default="cut")
    c.set_defaults(func=cmd_compute)

    f = sub.add_parser("family", help="build a named family member and print its JSON")
    f.add_argument("spec", help="linear:H, chain:WORD, cl:T1,T2,... or pl:J,K,N")
    f.add_argument("--dot", metavar="PATH", help="also write a Graphviz drawing with exact coordinates")
    f.set_defaults(func=cmd_family)

    fo = sub.add_parser("formula", help="evaluate a closed form")
    fo.add_argument("name", choices=sorted(FORMULAS))
    fo.add_argument("params", help="comma-separated integers, e.g. 1,1,3")
    fo.set_defaults(func=cmd_formula)

    def filters(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--h", type=int, required=True)
        sp.add_argument("--chains-only", action="store_true")
        sp.add_argument("--planar-only", action="store_true", help="drop self-overlapping drawings")
        sp.add_argument("--max-h", type=int, default=None, help="override the enumeration bound")

    e = sub.add_parser("enumerate", help="all isomorphism classes as JSON lines")
    filters(e)
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("rank", help="classes grouped by Mostar value")
    filters(r)
    r.add_argument("--top", type=int, default=None)
    r.add_argument("--format", choices=("table", "csv", "json"), default="table")
    r.set_defaults(func=cmd_rank)

    v = sub.add_parser("verify", help="check the minimum, second and third groups")
    v.add_argument("--theorem", choices=(*THEOREMS, "all"), default="all",
                   help="3.5 minimum, 4.4 second, 5.4 third")
    v.add_argument("--h-range", default="2..8", help="A..B or a single h")
    v.add_argument("--planar-only", action="store_true")
    v.add_argument("--max-h", type=int, default=None)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.set_defaults(func=cmd_verify)

    cl_ = sub.add_parser("check-lemmas", help="seeded random trials of the transformation lemmas")
    cl_.add_argument("--trials", type=int, default=500)
    cl_.add_argument("--seed", type=int, default=0)
    cl_.add_argument("--max-h", type=int, default=8)
    cl_.add_argument("--format", choices=("table", "json"), default="table")
    cl_.set_defaults(func=cmd_check_lemmas)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PhenyleneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
