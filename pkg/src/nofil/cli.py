"""Command-line entry point: ``nofil <subcommand> ...`` or ``python -m nofil``.

Exit status is 0 on success, 1 on a domain error (invalid system, infeasible
embedding, ...) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import groupby

from . import bounds, catalog, embed, game, generate, kayles, solver, sts
from .errors import EmbeddingFailure, NofilError, ValidationError

MAX_EMBED_SEARCH = 60


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(catalog.BUILTIN_NAMES)}")
    group.add_argument("--file", metavar="PATH", help="STS file or archive")


def _add_played(p: argparse.ArgumentParser) -> None:
    p.add_argument("--played", metavar="X,Y,...",
                   help="0-based played points (default: none, or the stored set of a builtin)")


def _systems(args) -> list[tuple[str, sts.SteinerTripleSystem]]:
    if args.builtin:
        return [(args.builtin.upper(), catalog.builtin_sts(args.builtin))]
    return [(f"{args.file}#{i}", s) for i, s in enumerate(sts.load_file(args.file))]


def _played(args, name: str) -> frozenset[int]:
    if args.played is not None:
        text = args.played.strip()
        try:
            return frozenset(int(x) for x in text.replace(",", " ").split()) if text else frozenset()
        except ValueError:
            raise UsageError(f"--played needs integers, got {args.played!r}") from None
    return catalog.DEFAULT_PLAYED.get(name, frozenset())


def _fmt_points(points) -> str:
    return " ".join(map(str, sorted(points))) or "-"


# -- subcommands --------------------------------------------------------------------


def cmd_validate(args) -> int:
    if args.builtin:
        s = catalog.builtin_sts(args.builtin)
        print(f"{args.builtin.upper()}: valid STS({s.v}), {len(s.blocks)} blocks")
        return 0
    with open(args.file) as fh:
        results = sts.check_archive(fh.read())
    status = 0
    for i, item in enumerate(results):
        if isinstance(item, ValidationError):
            status = 1
            print(f"system {i}: INVALID ({len(item.violations)} violations)")
            for code, detail in item.violations:
                print(f"  {code} {detail}")
        else:
            print(f"system {i}: valid STS({item.v}), {len(item.blocks)} blocks")
    return status


def cmd_generate(args) -> int:
    batch = generate.generate_distinct(args.order, args.count, seed=args.seed)
    sys.stdout.write(sts.dumps_archive(batch.systems))
    if batch.exhausted:
        print(f"warning: found {len(batch.systems)} non-isomorphic systems "
              f"after {batch.attempts} attempts", file=sys.stderr)
    return 0 if batch.systems else 1


def cmd_solve(args) -> int:
    systems = _systems(args)
    for name, s in systems:
        played = _played(args, name)
        pos = game.position_from_played(s, played)
        value = solver.grundy(pos)
        moves = solver.best_moves(pos) if value else frozenset()
        if len(systems) > 1:
            print(f"[{name}]")
        print(f"order: {s.v}")
        print(f"played: {_fmt_points(played)}")
        print(f"nim-value: {value}")
        print(f"outcome: {'P' if value == 0 else 'N'}")
        print(f"best moves: {_fmt_points(moves)}")
        print(f"best moves (1-based): {_fmt_points(x + 1 for x in moves)}")
    return 0


def cmd_gametree(args) -> int:
    (name, s), *rest = _systems(args)
    if rest:
        raise UsageError("gametree takes a single system")
    pos = game.position_from_played(s, _played(args, name))
    tree = solver.game_tree(pos, max_depth=args.depth, iso_reduce=args.iso_reduce)
    sys.stdout.write(solver.to_dot(tree))
    return 0


def cmd_census(args) -> int:
    for name, s in _systems(args):
        played = _played(args, name)
        c = game.census(s, played)
        print(f"[{name}] played: {_fmt_points(played)}")
        for kind in game.CENSUS_TYPES:
            line = f"{kind}\t{len(c.blocks[kind])}"
            if args.blocks:
                line += "\t" + "  ".join(" ".join(map(str, b)) for b in c.blocks[kind])
            print(line)
    return 0


def _print_report(report: bounds.FeasibilityReport) -> None:
    print(f"a={report.a} e={report.e} v={report.v}")
    for b in report.bounds:
        value = "n/a" if b.value is None else f"{b.value} (~{float(b.value):.4f})"
        note = f"  [{b.note}]" if b.note else ""
        print(f"  {b.side:>6} {b.name:<12} {value}{note}")
    upper = "none" if report.real_upper is None else f"{float(report.real_upper):.4f}"
    print(f"real interval: [{float(report.real_lower):.4f}, {upper}]"
          f"{'  EMPTY' if report.real_empty else ''}")
    lows, highs = report.binding()
    print(f"binding: lower {', '.join(lows) or '-'}; upper {', '.join(highs) or '-'}")
    if report.empty:
        print(f"integer u: EMPTY (u_lo={report.u_lo}, u_hi={report.u_hi})")
    else:
        print(f"integer u: {' '.join(map(str, report.feasible_u))}")
    print(f"exception tables: {', '.join(report.exception_hits) or 'none'}")


def cmd_bounds(args) -> int:
    a, e, v = args.a, args.e, args.v
    chi = None
    if args.graph:
        g = kayles.load_graph(args.graph)
        if (g.n, g.e) != (a, e):
            raise UsageError(f"graph has a={g.n}, e={g.e}, not a={a}, e={e}")
        chi = embed.colouring_indices(g)
    report = bounds.u_interval(a, e, v, chi)
    _print_report(report)
    adm = bounds.min_admissible_v(a, e)
    print(f"v bound ({adm.case}): {adm.v_formula} (~{float(adm.v_formula):.4f})")
    skipped = ", ".join(f"{x} ({why})" for x, why in adm.skipped) or "none"
    print(f"smallest admissible v: {adm.v_min} (skipped: {skipped})")
    verdict = "admissible" if sts.admissible_order(v) and not report.empty else "not admissible"
    print(f"v={v}: {verdict}")
    return 0


def _runs(values: list[int]) -> str:
    out = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == values[j] + 1:
            j += 1
        if j - i >= 2:
            out.append(f"{values[i]}-{values[j]}")
        else:
            out.extend(str(x) for x in values[i:j + 1])
        i = j + 1
    return ",".join(out)


def cmd_exceptions(args) -> int:
    triples = bounds.enumerate_exceptions(args.integral)
    print(f"# {len(triples)} triples")
    print("a\te\tv")
    for a, rows in groupby(triples, key=lambda t: t[0]):
        for e, group in groupby(rows, key=lambda t: t[1]):
            print(f"{a}\t{e}\t{_runs([t[2] for t in group])}")
    return 0


def cmd_embed(args) -> int:
    g = kayles.load_graph(args.graph)
    if args.order is not None:
        result = embed.embed_graph(g, args.order, seed=args.seed)
        note = f"embedded at order {args.order}"
    else:
        start = bounds.min_admissible_v(g.n, g.e).v_min
        result = None
        for v in range(start, start + MAX_EMBED_SEARCH + 1):
            if not sts.admissible_order(v):
                continue
            try:
                result = embed.embed_graph(g, v, seed=args.seed)
                break
            except EmbeddingFailure as exc:
                print(f"# order {v}: {exc}", file=sys.stderr)
        if result is None:
            raise EmbeddingFailure(f"no embedding found up to order {start + MAX_EMBED_SEARCH}")
        note = f"smallest order found: {result.sts.v} (an upper bound on the minimum)"
    s = result.sts
    comment = f"{note}; p={result.seeds.p} u={result.seeds.u} seed={result.seed}"
    sys.stdout.write(sts.dumps(s, comment=comment))
    print(f"played: {_fmt_points(result.played)}")
    for line in result.report.lines():
        print(f"# {line}", file=sys.stderr)
    return 0


def _survey_one(job) -> int:
    v, seed = job
    return solver.grundy(game.initial_position(generate.hill_climb_sts(v, seed=seed)))


def _solve_initial(s: sts.SteinerTripleSystem) -> int:
    return solver.grundy(game.initial_position(s))


def cmd_survey(args) -> int:
    jobs = max(1, args.jobs)
    if args.file:
        systems = sts.load_file(args.file)
        func, items = _solve_initial, systems
    else:
        if args.order is None or args.count is None:
            raise UsageError("survey needs --file, or --order and --count")
        master = random.Random(args.seed)
        func, items = _survey_one, [(args.order, master.getrandbits(64)) for _ in range(args.count)]
    if jobs == 1:
        values = [func(x) for x in items]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(func, items))
    hist = Counter(values)
    print("nim_value\tcount")
    for value in sorted(hist):
        print(f"{value}\t{hist[value]}")
    return 0


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nofil", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a file holds Steiner triple systems")
    _add_source(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("generate", help="hill-climb non-isomorphic systems, print an archive")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="nim-value, outcome and winning moves")
    _add_source(p)
    _add_played(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gametree", help="game tree as Graphviz DOT")
    _add_source(p)
    _add_played(p)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--iso-reduce", action="store_true",
                   help="merge options with isomorphic available hypergraphs")
    p.set_defaults(func=cmd_gametree)

    p = sub.add_parser("census", help="count blocks by played/available/unplayable type")
    _add_source(p)
    _add_played(p)
    p.add_argument("--blocks", action="store_true", help="list the blocks of each type")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bounds", help="bounds on the unplayable count for (a, e, v)")
    p.add_argument("a", type=int)
    p.add_argument("e", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--graph", metavar="PATH", help="graph file; adds the edge-colouring bounds")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exceptions", help="exceptional (a, e, v) triples")
    p.add_argument("--integral", action="store_true",
                   help="restrict to v = 1, 3 mod 6 and integer u")
    p.set_defaults(func=cmd_exceptions)

    p = sub.add_parser("embed", help="find an STS in which a graph is the available graph")
    p.add_argument("--graph", metavar="PATH", required=True)
    p.add_argument("--order", type=int, default=None,
                   help="target order (default: search upward from the smallest admissible)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("survey", help="nim-value histogram over many systems (TSV)")
    p.add_argument("--file", metavar="PATH", help="archive of systems to solve")
    p.add_argument("--order", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except NofilError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
