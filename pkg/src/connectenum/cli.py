"""Command-line interface.

Subcommands map one-to-one onto the library's surfaces: ``enumerate-paths``
and ``enumerate-mcs`` stream results as they are produced and finish with a
``#``-prefixed footer, ``solve-2dcs`` reports YES/NO with a witness,
``bound`` prints the leaf-count ceiling, the minimal-set count bound and the
growth-base curve, ``gen`` emits instances, ``verify`` cross-checks the
enumerators against the brute-force oracles, and ``bench`` produces CSV
reports with optional figures. Exit codes: 0 success or YES, 1 NO,
2 input error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import sys
from math import nan
from pathlib import Path

from . import __version__
from .bench import MODES, run_benchmark, reports_to_csv
from .connecting import (
    ConnectingStats,
    iter_connecting_supersets,
    iter_minimal_connecting,
    minimal_count_bound,
)
from .dcs import DcsInstance, SolveStats, iter_2dcs_witnesses, runtime_bound_curve, verify_witness
from .dimacs import Instance, format_instance, format_vertex_set, parse_instance
from .generators import LayeredSpec, gen_layered, gen_named, gen_random
from .graph import vertex_mask
from .oracles import oracle_2dcs, oracle_induced_paths, oracle_minimal_connecting
from .paths import EnumerationStats, format_path, iter_induced_paths, max_leaves


def _read_instance(path: str) -> Instance:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_instance(text)


def _ids_to_mask(ids: list[int], n: int, what: str) -> int:
    for v in ids:
        if not 1 <= v <= n:
            raise ValueError(f"{what} id {v} out of range 1..{n}")
    return vertex_mask(v - 1 for v in ids)


def _resolve_set(inst: Instance, name: str, flag_ids: list[int] | None, required: bool = True) -> int:
    if flag_ids is not None:
        return _ids_to_mask(flag_ids, inst.graph.n, name)
    mask = inst.sets.get(name, 0)
    if not mask and required:
        raise ValueError(f"no {name!r} set given (use a flag or a 'c set {name} ...' line)")
    return mask


def _cmd_gen(args: argparse.Namespace) -> int:
    sets: dict[str, int] = {}
    if args.kind == "layered":
        spec = LayeredSpec(args.columns, args.target_size, args.variant)
        g, source, targets = gen_layered(spec)
        sets = {"v": 1 << source, "R": targets, "T": (1 << source) | targets}
        meta = {
            "generator": "layered",
            "columns": str(args.columns),
            "target_size": str(args.target_size),
            "variant": args.variant,
        }
    elif args.kind == "random":
        g = gen_random(args.n, args.edge_prob, args.seed)
        meta = {
            "generator": "random",
            "n": str(args.n),
            "edge_prob": repr(args.edge_prob),
            "seed": str(args.seed),
        }
    else:
        g = gen_named(args.kind, args.n)
        meta = {"generator": args.kind, "n": str(args.n)}
    text = format_instance(g, sets, meta)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_paths(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    g = inst.graph
    if args.source is not None:
        source_mask = _ids_to_mask([args.source], g.n, "source")
    else:
        source_mask = inst.sets.get("v", 0)
        if source_mask.bit_count() != 1:
            raise ValueError("no source vertex given (use --source or a 'c set v <id>' line)")
    source = source_mask.bit_length() - 1
    targets = _resolve_set(inst, "R", args.target_set)
    stats = EnumerationStats()
    count = 0
    for path in iter_induced_paths(g, source, targets, args.t_limit, stats):
        count += 1
        print(format_path(path))
    print(f"# count={count} nodes={stats.nodes}")
    return 0


def _footer_bound(n: int, t_size: int) -> float:
    if 2 <= t_size and 3 * t_size <= n:
        return minimal_count_bound(n, t_size).log
    return nan


def _cmd_mcs(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    g = inst.graph
    terminals = _resolve_set(inst, "T", args.terminals)
    t_size = terminals.bit_count()
    stats = ConnectingStats()
    count = 0
    if args.raw:
        if t_size <= 1:
            if terminals:
                print(format_vertex_set(terminals))
                count = 1
            stats.raw = count
        else:
            for s in iter_connecting_supersets(g, terminals, stats):
                count += 1
                print(format_vertex_set(s))
    else:
        for s in iter_minimal_connecting(g, terminals, stats):
            count += 1
            print(format_vertex_set(s))
    bound = _footer_bound(g.n, t_size)
    print(f"# count={count} raw={stats.raw} bound_ln={bound:.6f}")
    return 0


def _cmd_dcs(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    z1 = _resolve_set(inst, "Z1", args.z1)
    z2 = _resolve_set(inst, "Z2", args.z2)
    dcs = DcsInstance(inst.graph, z1, z2)
    stats = SolveStats()
    witnesses = iter_2dcs_witnesses(dcs, stats=stats)
    first = next(witnesses, None)
    if first is None:
        print("NO")
        if args.count_all:
            print("# candidates=0")
        return 1
    assert verify_witness(dcs, first)
    print("YES")
    print(f"A1: {format_vertex_set(first.a1)}")
    print(f"A2: {format_vertex_set(first.a2)}")
    if args.count_all:
        total = 1 + sum(1 for _ in witnesses)
        print(f"# candidates={total}")
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.leaves is None and args.minimal_sets is None and args.curve is None:
        raise ValueError("nothing to print: pass --leaves, --minimal-sets and/or --curve")
    if args.plot and args.curve is None:
        raise ValueError("--plot needs --curve")
    for t in args.leaves or ():
        print(f"max_leaves({t}) = {max_leaves(t)}")
    if args.minimal_sets is not None:
        n, t = args.minimal_sets
        bound = minimal_count_bound(n, t)
        exact = "" if bound.exact is None else f" exact={bound.exact}"
        print(f"bound_ln({n}, {t}) = {bound.log:.6f}{exact}")
    if args.curve is not None:
        alpha_max, step = args.curve
        points = runtime_bound_curve(alpha_max, step)
        for alpha, base in points:
            print(f"alpha={alpha:.6f} base={base:.6f}")
        if args.plot:
            from .plots import save_bound_curve

            save_bound_curve(points, args.plot, threshold=alpha_max)
            print(f"# figure={args.plot}", file=sys.stderr)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    g = inst.graph
    if args.what == "paths":
        source_mask = inst.sets.get("v", 0)
        if args.source is not None:
            source_mask = _ids_to_mask([args.source], g.n, "source")
        if source_mask.bit_count() != 1:
            raise ValueError("no source vertex given")
        source = source_mask.bit_length() - 1
        targets = _resolve_set(inst, "R", args.target_set)
        got = {p.vertices for p in iter_induced_paths(g, source, targets)}
        want = oracle_induced_paths(g, source, targets)
        label = f"paths count={len(want)}"
    elif args.what == "mcs":
        terminals = _resolve_set(inst, "T", args.terminals)
        got = set(iter_minimal_connecting(g, terminals))
        want = oracle_minimal_connecting(g, terminals)
        label = f"minimal sets count={len(want)}"
    else:
        z1 = _resolve_set(inst, "Z1", args.z1)
        z2 = _resolve_set(inst, "Z2", args.z2)
        dcs = DcsInstance(g, z1, z2)
        witness = next(iter_2dcs_witnesses(dcs), None)
        got = witness is not None and verify_witness(dcs, witness)
        want = oracle_2dcs(g, z1, z2)
        label = f"2dcs answer={'YES' if want else 'NO'}"
    if got == want:
        print(f"OK {label}")
        return 0
    print(f"MISMATCH {label}")
    return 3


def _cmd_bench(args: argparse.Namespace) -> int:
    entries = []
    for path in args.instances:
        entries.append((Path(path).stem, _read_instance(path)))
    reports = run_benchmark(entries, args.mode, jobs=args.jobs)
    failures = [r for r in reports if r.error]
    if args.format == "csv":
        text = reports_to_csv(reports)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        header = f"{'instance':<20} {'n':>4} {'m':>5} {'|T|':>4} {'emitted':>8} {'raw':>8} {'bound_ln':>9} {'time':>9} {'nodes':>8}  error"
        print(header)
        for r in reports:
            bound = "" if r.bound_ln is None else f"{r.bound_ln:9.3f}"
            print(
                f"{r.instance:<20} {r.n:>4} {r.m:>5} {r.t_size:>4} {r.emitted:>8} "
                f"{r.raw:>8} {bound:>9} {r.wall_time:>9.4f} {r.nodes:>8}  {r.error}"
            )
    if args.figures:
        from .plots import save_benchmark_figures

        for path in save_benchmark_figures(reports, args.figures):
            print(f"# figure={path}", file=sys.stderr)
    for r in failures:
        print(f"warning: {r.instance}: {r.error}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="connectenum", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance in the text format")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    p_layered = gen_sub.add_parser("layered", help="layered worst-case family")
    p_layered.add_argument("--columns", type=int, required=True)
    p_layered.add_argument("--target-size", type=int, default=1)
    p_layered.add_argument("--variant", choices=("base", "wide", "tail"), default="base")
    p_random = gen_sub.add_parser("random", help="seeded random graph")
    p_random.add_argument("--n", type=int, required=True)
    p_random.add_argument("--edge-prob", type=float, required=True)
    p_random.add_argument("--seed", type=int, default=0)
    for kind in ("path", "cycle", "star", "complete"):
        p_named = gen_sub.add_parser(kind, help=f"{kind} graph")
        p_named.add_argument("--n", type=int, required=True)
    for sp in (p_layered, p_random, *[gen_sub.choices[k] for k in ("path", "cycle", "star", "complete")]):
        sp.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("enumerate-paths", help="stream induced paths to the target fringe")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--source", type=int, help="1-based source vertex (overrides the 'v' set)")
    p.add_argument("--target-set", type=int, nargs="+", help="1-based target ids (overrides 'R')")
    p.add_argument("--t-limit", type=int, help="branch-depth limit")
    p.set_defaults(handler=_cmd_paths)

    p = sub.add_parser("enumerate-mcs", help="stream minimal terminal-connecting sets")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--terminals", type=int, nargs="+", help="1-based terminal ids (overrides 'T')")
    p.add_argument("--raw", action="store_true", help="stream the unfiltered branching family")
    p.set_defaults(handler=_cmd_mcs)

    p = sub.add_parser("solve-2dcs", help="decide the two-group disjoint split")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--z1", type=int, nargs="+", help="1-based first-group ids (overrides 'Z1')")
    p.add_argument("--z2", type=int, nargs="+", help="1-based second-group ids (overrides 'Z2')")
    p.add_argument("--count-all", action="store_true", help="also count all successful candidates")
    p.set_defaults(handler=_cmd_dcs)

    p = sub.add_parser("bound", help="print count bounds and the growth-base curve")
    p.add_argument("--leaves", type=int, nargs="+", help="branching budgets for the leaf-count ceiling")
    p.add_argument("--minimal-sets", type=int, nargs=2, metavar=("N", "T"), help="minimal-set count bound")
    p.add_argument("--curve", type=float, nargs=2, metavar=("ALPHA_MAX", "STEP"), help="growth-base grid")
    p.add_argument("--plot", help="render the curve to this file")
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("verify", help="cross-check an enumerator against its oracle")
    p.add_argument("what", choices=("paths", "mcs", "2dcs"))
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--source", type=int)
    p.add_argument("--target-set", type=int, nargs="+")
    p.add_argument("--terminals", type=int, nargs="+")
    p.add_argument("--z1", type=int, nargs="+")
    p.add_argument("--z2", type=int, nargs="+")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="run instances and emit a CSV report")
    p.add_argument("instances", nargs="+", help="instance files")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--out", help="CSV output file (default stdout)")
    p.add_argument("--figures", help="directory for report figures")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=("text", "csv"), default="csv")
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:
        return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
