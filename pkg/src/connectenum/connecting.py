"""Enumeration of minimal connecting vertex sets for a terminal set.

A set S is terminal-connecting when it contains every terminal and induces a
connected subgraph; it is minimal when no strict subset containing the
terminals still does. The main enumerator is a branching recursion: each
node holds a connector set C and an exclusion set X. While the terminals
plus C are not yet connected, the connected block around the anchor terminal
is contracted to a single vertex and every induced attachment path from that
vertex to the fringe of the unreached terminals (avoiding X) spawns a child
node. The family produced this way contains every minimal connecting set,
possibly alongside duplicates and non-minimal sets; the public enumerator
filters and deduplicates, while the raw stream stays available for bound
experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, lgamma, log
from typing import Callable, Iterator, NamedTuple, Optional

from .graph import (
    ContractionMap,
    Graph,
    closed_neighborhood,
    component_of,
    components,
    contract_set,
    is_connected,
    open_neighborhood,
)
from .paths import EnumerationStats, _scan_paths


@dataclass
class ConnectingStats:
    """Counters for one enumeration run.

    ``raw`` counts sets emitted by the branching recursion before any
    filtering, ``emitted`` the minimal sets that survive it, and
    ``path_nodes`` the choice-tree nodes visited by the internal path walks.
    """

    raw: int = 0
    emitted: int = 0
    path_nodes: int = 0


class CountBound(NamedTuple):
    """Upper bound on the number of minimal connecting sets.

    ``log`` is the bound on the natural-log scale; ``exact`` carries the
    integer value whenever the bound is an integer (free vertex count
    divisible by three).
    """

    log: float
    exact: Optional[int]


def minimal_count_bound(n: int, t: int) -> CountBound:
    """Bound C(n-t, t-2) * 3^((n-t)/3) on the number of minimal connecting sets.

    Valid for terminal sets of size t with 2 <= t <= n/3. Computed through
    log-gamma so large instances cannot overflow.
    """
    if t < 2 or 3 * t > n:
        raise ValueError("bound requires 2 <= t <= n/3")
    free = n - t
    log_binom = lgamma(free + 1) - lgamma(t - 1) - lgamma(free - t + 3)
    log_value = log_binom + free * log(3.0) / 3.0
    exact = comb(free, t - 2) * 3 ** (free // 3) if free % 3 == 0 else None
    return CountBound(log_value, exact)


def is_minimal_connecting(g: Graph, terminals: int, candidate: int) -> bool:
    """Decide whether candidate is a minimal terminal-connecting set.

    Uses the removal characterization: a connected candidate is minimal
    exactly when deleting any of its non-terminal vertices leaves the
    terminals spread over more than one component of what remains. (Any
    connecting strict subset survives inside a single such component, so the
    two formulations agree; the oracles module cross-checks this against the
    literal subset definition.)
    """
    if candidate < 0 or candidate & ~g.full_mask:
        raise ValueError("candidate set outside the graph's vertex range")
    if terminals & ~candidate:
        raise ValueError("candidate must contain every terminal")
    if terminals == 0:
        return candidate == 0
    if not is_connected(g, candidate):
        return False
    anchor = (terminals & -terminals).bit_length() - 1
    extras = candidate & ~terminals
    while extras:
        low = extras & -extras
        extras ^= low
        reached = component_of(g, candidate ^ low, anchor)
        if not terminals & ~reached:
            return False
    return True


def contract_terminal_edges(g: Graph, terminals: int) -> tuple[Graph, int, ContractionMap]:
    """Contract edges between terminals until the terminal set is independent.

    Each connected block of terminals collapses onto its lowest-id member.
    Minimal connecting sets correspond one-to-one across the contraction, so
    enumerating on the reduced instance and expanding through the returned
    map recovers the original answer.
    """
    if terminals < 0 or terminals & ~g.full_mask:
        raise ValueError("terminal set outside the graph's vertex range")
    gcur, tcur = g, terminals
    cmap = ContractionMap.identity(g.n)
    while True:
        multi = [b for b in components(gcur, tcur) if b.bit_count() > 1]
        if not multi:
            break
        block = multi[0]
        rep = (block & -block).bit_length() - 1
        gcur, step = contract_set(gcur, block, rep)
        cmap = cmap.then(step)
        tcur = step.translate(tcur)
    return gcur, tcur, cmap


def _attachment_paths(
    g: Graph,
    block: int,
    anchor: int,
    unreached: int,
    excluded: int,
    stats: Optional[ConnectingStats],
    incremental: bool,
) -> Iterator[tuple[int, ...]]:
    """Yield the vertex tuples (v2, ..., vq) of induced paths that attach the
    contracted block around the anchor to the fringe of the unreached
    terminals, skipping excluded vertices entirely."""
    walk_stats = EnumerationStats() if stats is not None else None
    try:
        if incremental:
            # Walk the original graph directly: the contraction only rewires
            # the first step, whose candidates are the block's neighbors.
            adj = g.adj
            allowed = g.full_mask & ~excluded & ~block
            fringe = (closed_neighborhood(g, unreached) & ~unreached) & allowed
            around = open_neighborhood(g, block)
            assert not around & unreached
            nodes = 1
            path: list[int] = []
            frames = [[around & allowed, block | around]]
            try:
                while frames:
                    frame = frames[-1]
                    cand = frame[0]
                    if not cand:
                        frames.pop()
                        if path:
                            path.pop()
                        continue
                    low = cand & -cand
                    frame[0] = cand ^ low
                    w = low.bit_length() - 1
                    if low & fringe:
                        nodes += 1
                        yield (*path, w)
                    elif low & unreached:
                        continue
                    else:
                        nodes += 1
                        path.append(w)
                        frames.append([adj[w] & ~frame[1] & allowed, frame[1] | adj[w]])
            finally:
                if walk_stats is not None:
                    walk_stats.nodes += nodes
        else:
            g2, cmap = contract_set(g, block, anchor)
            a2 = cmap.to_new(anchor)
            t2 = cmap.translate(unreached)
            x2 = cmap.translate(excluded & ~block)
            assert not closed_neighborhood(g2, 1 << a2) & t2
            assert not x2 >> a2 & 1
            adjf = [a & ~x2 for a in g2.adj]
            fringe = 0
            m = t2
            while m:
                low = m & -m
                fringe |= adjf[low.bit_length() - 1]
                m ^= low
            fringe &= ~t2
            for found in _scan_paths(adjf, a2, t2, fringe, None, walk_stats):
                yield tuple(cmap.sole_origin(w) for w in found.vertices[1:])
    finally:
        if stats is not None and walk_stats is not None:
            stats.path_nodes += walk_stats.nodes


def _iter_supersets(
    g: Graph,
    terminals: int,
    stats: Optional[ConnectingStats],
    incremental: bool,
) -> Iterator[int]:
    anchor = (terminals & -terminals).bit_length() - 1

    def branch(connector: int, excluded: int) -> Iterator[int]:
        assert not excluded & terminals
        grown = terminals | connector
        if is_connected(g, grown):
            if stats is not None:
                stats.raw += 1
            yield grown
            return
        block = component_of(g, grown, anchor)
        unreached = terminals & ~block
        around = open_neighborhood(g, block)
        for seq in _attachment_paths(g, block, anchor, unreached, excluded, stats, incremental):
            added = 0
            for w in seq:
                added |= 1 << w
            below = around & ((1 << seq[0]) - 1)
            yield from branch(connector | added, excluded | below)

    return branch(0, 0)


def iter_connecting_supersets(
    g: Graph,
    terminals: int,
    stats: Optional[ConnectingStats] = None,
    incremental: bool = False,
) -> Iterator[int]:
    """Yield the raw branching family, which contains every minimal
    terminal-connecting set but may repeat sets and include non-minimal ones.

    Requires at least two terminals; a terminal set spread over several
    components of the graph yields nothing.
    """
    if terminals < 0 or terminals & ~g.full_mask:
        raise ValueError("terminal set outside the graph's vertex range")
    if terminals.bit_count() < 2:
        raise ValueError("raw enumeration needs at least two terminals")
    anchor = (terminals & -terminals).bit_length() - 1
    if terminals & ~component_of(g, g.full_mask, anchor):
        return iter(())
    return _iter_supersets(g, terminals, stats, incremental)


def enumerate_connecting_supersets(
    g: Graph,
    terminals: int,
    sink: Optional[Callable[[int], object]] = None,
    stats: Optional[ConnectingStats] = None,
    incremental: bool = False,
) -> int:
    """Drive the raw enumeration through a sink; returns the emission count.

    The sink receives each set as a vertex mask; returning a truthy value
    aborts the enumeration early.
    """
    count = 0
    for s in iter_connecting_supersets(g, terminals, stats, incremental):
        count += 1
        if sink is not None and sink(s):
            break
    return count


def _iter_brute(g: Graph, terminals: int) -> Iterator[int]:
    free = g.full_mask & ~terminals
    extra = 0
    while True:
        s = terminals | extra
        if is_minimal_connecting(g, terminals, s):
            yield s
        if extra == free:
            break
        extra = (extra - free) & free


def brute_force_connecting(
    g: Graph,
    terminals: int,
    sink: Optional[Callable[[int], object]] = None,
) -> int:
    """Enumerate minimal connecting sets by testing every superset of the terminals.

    Exhaustive over all 2^(n-|T|) candidate extensions; the production
    fallback when terminals make up more than a third of the graph.
    """
    if terminals < 0 or terminals & ~g.full_mask:
        raise ValueError("terminal set outside the graph's vertex range")
    count = 0
    for s in _iter_brute(g, terminals):
        count += 1
        if sink is not None and sink(s):
            break
    return count


def _iter_minimal(
    g: Graph,
    terminals: int,
    stats: Optional[ConnectingStats],
    incremental: bool,
) -> Iterator[int]:
    reduced, t2, cmap = contract_terminal_edges(g, terminals)
    if t2.bit_count() == 1:
        if stats is not None:
            stats.raw += 1
            stats.emitted += 1
        yield cmap.expand(t2)
        return
    if 3 * t2.bit_count() > reduced.n:
        for s in _iter_brute(reduced, t2):
            if stats is not None:
                stats.raw += 1
                stats.emitted += 1
            yield cmap.expand(s)
        return
    seen: set[int] = set()
    for s in _iter_supersets(reduced, t2, stats, incremental):
        if s in seen:
            continue
        seen.add(s)
        if is_minimal_connecting(reduced, t2, s):
            if stats is not None:
                stats.emitted += 1
            yield cmap.expand(s)


def iter_minimal_connecting(
    g: Graph,
    terminals: int,
    stats: Optional[ConnectingStats] = None,
    incremental: bool = False,
) -> Iterator[int]:
    """Yield every minimal terminal-connecting set exactly once, as masks of g.

    Pipeline: an empty terminal set yields nothing and a single terminal
    yields itself; terminals split across components yield nothing; adjacent
    terminals are contracted away first; then either the branching
    enumeration (filtered and deduplicated) or, when terminals exceed a
    third of the reduced instance, the brute-force sweep produces the sets,
    which are expanded back to original ids.
    """
    if terminals < 0 or terminals & ~g.full_mask:
        raise ValueError("terminal set outside the graph's vertex range")
    if terminals == 0:
        return iter(())
    if terminals.bit_count() == 1:
        if stats is not None:
            stats.raw += 1
            stats.emitted += 1
        return iter((terminals,))
    anchor = (terminals & -terminals).bit_length() - 1
    if terminals & ~component_of(g, g.full_mask, anchor):
        return iter(())
    return _iter_minimal(g, terminals, stats, incremental)


def enumerate_minimal_connecting(
    g: Graph,
    terminals: int,
    sink: Optional[Callable[[int], object]] = None,
    stats: Optional[ConnectingStats] = None,
    incremental: bool = False,
) -> int:
    """Drive the minimal-set enumeration through a sink; returns the count."""
    count = 0
    for s in iter_minimal_connecting(g, terminals, stats, incremental):
        count += 1
        if sink is not None and sink(s):
            break
    return count
