"""Benchmark harness: run instances, time them, and cross-check counts
against their bounds. Reports serialize to CSV and round-trip exactly."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import log
from time import perf_counter
from typing import Optional

from .connecting import (
    ConnectingStats,
    brute_force_connecting,
    enumerate_minimal_connecting,
    minimal_count_bound,
)
from .dcs import DcsInstance, SolveStats, solve_2dcs, verify_witness
from .dimacs import Instance
from .paths import EnumerationStats, enumerate_induced_paths, max_leaves

MODES = ("mcs", "paths", "dcs", "brute")

CSV_FIELDS = (
    "instance",
    "n",
    "m",
    "t_size",
    "mode",
    "emitted",
    "raw",
    "bound_ln",
    "wall_time",
    "nodes",
    "error",
)


@dataclass
class RunReport:
    """One benchmark row: counts, the log-scale bound when one applies, wall
    time, and the choice-tree nodes the run visited."""

    instance: str
    n: int
    m: int
    t_size: int
    mode: str
    emitted: int
    raw: int
    bound_ln: Optional[float]
    wall_time: float
    nodes: int
    error: str = ""


def _require_set(inst: Instance, name: str) -> int:
    mask = inst.sets.get(name)
    if not mask:
        raise ValueError(f"instance defines no {name!r} set")
    return mask


def run_instance(name: str, inst: Instance, mode: str) -> RunReport:
    """Run one instance in the given mode; failures land in the error column."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    g = inst.graph
    started = perf_counter()
    t_size = 0
    emitted = raw = nodes = 0
    bound_ln: Optional[float] = None
    error = ""
    try:
        if mode in ("mcs", "brute"):
            terminals = _require_set(inst, "T")
            t_size = terminals.bit_count()
            if mode == "mcs":
                stats = ConnectingStats()
                emitted = enumerate_minimal_connecting(g, terminals, stats=stats)
                raw = stats.raw
                nodes = stats.path_nodes
            else:
                emitted = raw = brute_force_connecting(g, terminals)
            if 2 <= t_size and 3 * t_size <= g.n:
                bound_ln = minimal_count_bound(g.n, t_size).log
        elif mode == "paths":
            source_mask = _require_set(inst, "v")
            if source_mask.bit_count() != 1:
                raise ValueError("the 'v' set must hold exactly one vertex")
            source = source_mask.bit_length() - 1
            targets = _require_set(inst, "R")
            t_size = targets.bit_count()
            stats = EnumerationStats()
            emitted = raw = enumerate_induced_paths(g, source, targets, stats=stats)
            nodes = stats.nodes
            bound_ln = log(max_leaves(g.n - t_size - 1))
        else:
            z1 = _require_set(inst, "Z1")
            z2 = _require_set(inst, "Z2")
            t_size = (z1 | z2).bit_count()
            stats = SolveStats()
            dcs = DcsInstance(g, z1, z2)
            witness = solve_2dcs(dcs, stats=stats)
            emitted = int(witness is not None)
            raw = stats.candidates
            if witness is not None and not verify_witness(dcs, witness):
                raise AssertionError("solver returned an invalid witness")
        if bound_ln is not None and emitted > 0 and log(emitted) > bound_ln + 1e-9:
            error = "bound violated"
    except Exception as exc:  # per-instance isolation: record and continue
        error = f"{type(exc).__name__}: {exc}"
    return RunReport(
        instance=name,
        n=g.n,
        m=g.edge_count,
        t_size=t_size,
        mode=mode,
        emitted=emitted,
        raw=raw,
        bound_ln=bound_ln,
        wall_time=perf_counter() - started,
        nodes=nodes,
        error=error,
    )


def _run_entry(entry: tuple[str, Instance, str]) -> RunReport:
    return run_instance(*entry)


def run_benchmark(
    entries: list[tuple[str, Instance]],
    mode: str,
    jobs: int = 1,
) -> list[RunReport]:
    """Run every (name, instance) pair, optionally across worker processes.

    Output order matches input order regardless of the worker count.
    """
    work = [(name, inst, mode) for name, inst in entries]
    if jobs <= 1 or len(work) <= 1:
        return [_run_entry(item) for item in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_entry, work))


def reports_to_csv(reports: list[RunReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_FIELDS)
    for r in reports:
        writer.writerow(
            [
                r.instance,
                r.n,
                r.m,
                r.t_size,
                r.mode,
                r.emitted,
                r.raw,
                "" if r.bound_ln is None else repr(r.bound_ln),
                repr(r.wall_time),
                r.nodes,
                r.error,
            ]
        )
    return buf.getvalue()


def reports_from_csv(text: str) -> list[RunReport]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_FIELDS:
        raise ValueError("unrecognized report header")
    out = []
    for row in rows[1:]:
        if not row:
            continue
        (name, n, m, t_size, mode, emitted, raw, bound_ln, wall, nodes, error) = row
        out.append(
            RunReport(
                instance=name,
                n=int(n),
                m=int(m),
                t_size=int(t_size),
                mode=mode,
                emitted=int(emitted),
                raw=int(raw),
                bound_ln=None if bound_ln == "" else float(bound_ln),
                wall_time=float(wall),
                nodes=int(nodes),
                error=error,
            )
        )
    return out
