"""Enumeration of induced paths from a source vertex into the fringe of a target set.

The enumerator walks a backtracking choice tree. From a partial path
``(v1, ..., vi)`` the candidate extensions are the neighbors of ``vi`` that
are neither in nor adjacent to ``{v1, ..., v_{i-1}}``, which keeps every
emitted path induced and duplicate-free by construction. A partial path is
emitted, and not extended, as soon as it reaches a neighbor of the target
set; intermediate vertices never touch the target set's closed neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional, Sequence

from .graph import Graph, closed_neighborhood, open_neighborhood


class InducedPath(NamedTuple):
    """An induced path plus the branching budget its enumeration consumed."""

    vertices: tuple[int, ...]
    branch_depth: int


@dataclass
class EnumerationStats:
    """Mutable counters filled in by an enumeration run.

    ``nodes`` counts choice-tree nodes visited: every partial path entered
    plus every emitted path. It is the observable cost of an enumeration and
    lets callers measure delay behavior rather than assume it.
    """

    nodes: int = 0


def max_leaves(t: int) -> int:
    """Largest leaf count of a rooted tree whose root-to-leaf child counts sum to <= t.

    Equals the largest product of positive integers with sum at most t,
    which is also the exact ceiling on the number of paths the enumerator
    can emit under a branch-depth limit of t. Exact for any t.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 1:
        return 1
    i, r = divmod(t, 3)
    if r == 0:
        return 3**i
    if r == 1:
        return 4 * 3 ** (i - 1)
    return 2 * 3**i


def branch_depth(g: Graph, vertices: Sequence[int]) -> int:
    """Branch depth of a path: size of the closed neighborhood of all but its
    last vertex, minus one.

    A single-vertex sequence yields -1, the literal value of the formula.
    """
    if not vertices:
        raise ValueError("empty vertex sequence")
    seen = 0
    for v in vertices:
        g._check_vertex(v)
        if seen >> v & 1:
            raise ValueError("repeated vertex in path sequence")
        seen |= 1 << v
    for a, b in zip(vertices, vertices[1:]):
        if not g.adj[a] >> b & 1:
            raise ValueError(f"({a}, {b}) is not an edge; sequence is not a path")
    prefix = 0
    for v in vertices[:-1]:
        prefix |= 1 << v
    return closed_neighborhood(g, prefix).bit_count() - 1


def is_induced_path(g: Graph, vertices: Sequence[int]) -> bool:
    """True when the sequence is a path with no chords among its vertices."""
    members = 0
    for v in vertices:
        g._check_vertex(v)
        if members >> v & 1:
            return False
        members |= 1 << v
    for i, v in enumerate(vertices):
        expected = 0
        if i > 0:
            expected |= 1 << vertices[i - 1]
        if i + 1 < len(vertices):
            expected |= 1 << vertices[i + 1]
        if g.adj[v] & members != expected:
            return False
    return True


def _scan_paths(
    adj: Sequence[int],
    start: int,
    targets: int,
    target_fringe: int,
    t_limit: Optional[int],
    stats: Optional[EnumerationStats],
) -> Iterator[InducedPath]:
    # Core walk over the choice tree. `adj` may be pre-masked to restrict the
    # graph; `target_fringe` must be the open neighborhood of `targets` in
    # the same restriction. Children are explored in ascending id order.
    covered = adj[start] | (1 << start)
    nodes = 1
    try:
        if t_limit is not None and covered.bit_count() - 1 > t_limit:
            return
        path = [start]
        frames = [[adj[start], covered]]
        while frames:
            frame = frames[-1]
            cand = frame[0]
            if not cand:
                frames.pop()
                path.pop()
                continue
            low = cand & -cand
            frame[0] = cand ^ low
            w = low.bit_length() - 1
            if low & target_fringe:
                nodes += 1
                yield InducedPath((*path, w), frame[1].bit_count() - 1)
            elif low & targets:
                continue
            else:
                grown = frame[1] | adj[w]
                if t_limit is None or grown.bit_count() - 1 <= t_limit:
                    nodes += 1
                    path.append(w)
                    frames.append([adj[w] & ~frame[1], grown])
    finally:
        if stats is not None:
            stats.nodes += nodes


def _check_path_query(g: Graph, start: int, targets: int) -> None:
    g._check_vertex(start)
    if targets <= 0 or targets & ~g.full_mask:
        raise ValueError("target set must be a non-empty set of graph vertices")
    if targets >> start & 1:
        raise ValueError("start vertex must not belong to the target set")
    if closed_neighborhood(g, 1 << start) & targets:
        raise ValueError("target set must avoid the closed neighborhood of the start vertex")


def iter_induced_paths(
    g: Graph,
    start: int,
    targets: int,
    t_limit: Optional[int] = None,
    stats: Optional[EnumerationStats] = None,
) -> Iterator[InducedPath]:
    """Yield every induced path from start to a neighbor of the target set.

    Emitted paths end on a vertex adjacent to ``targets``, keep all earlier
    vertices outside the closed neighborhood of ``targets``, and have branch
    depth at most ``t_limit`` when one is given. Each qualifying path is
    yielded exactly once, in a deterministic order (ascending vertex id at
    every branching point). The number of paths never exceeds
    ``max_leaves(t_limit)``.
    """
    _check_path_query(g, start, targets)
    return _scan_paths(g.adj, start, targets, open_neighborhood(g, targets), t_limit, stats)


def enumerate_induced_paths(
    g: Graph,
    start: int,
    targets: int,
    t_limit: Optional[int] = None,
    sink: Optional[Callable[[InducedPath], object]] = None,
    stats: Optional[EnumerationStats] = None,
) -> int:
    """Stream induced paths into a sink and return how many were emitted.

    The sink is called once per path as it is produced; returning a truthy
    value stops the enumeration early (the path just passed still counts).
    """
    count = 0
    for path in iter_induced_paths(g, start, targets, t_limit, stats):
        count += 1
        if sink is not None and sink(path):
            break
    return count


def format_path(path: InducedPath) -> str:
    """Render a path in the text output format: 1-based ids then ``bd=<depth>``."""
    ids = " ".join(str(v + 1) for v in path.vertices)
    return f"{ids} bd={path.branch_depth}"
