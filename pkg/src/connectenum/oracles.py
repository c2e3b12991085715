"""Brute-force reference implementations for validating the enumerators.

Everything here works from the definitions alone and never calls the main
enumerators. Instance sizes are capped and refused beyond the caps: these
exist for tests, not production.
"""

from __future__ import annotations

from .graph import Graph, is_connected, vertices_of
from .connecting import is_minimal_connecting


def oracle_max_leaves(t: int, cap: int = 200) -> int:
    """Leaf-count maximum by dynamic programming over the root's child count.

    f(0) = 1; f(t) maximizes c * f(t - c) over root child counts c in 1..t,
    never dropping below the single-leaf tree.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if t > cap:
        raise ValueError(f"refusing t={t} beyond the oracle cap {cap}")
    best = [1] * (t + 1)
    for k in range(1, t + 1):
        best[k] = max(1, max(c * best[k - c] for c in range(1, k + 1)))
    return best[t]


def minimal_by_definition(g: Graph, terminals: int, candidate: int) -> bool:
    """Literal minimality check: no strict subset containing the terminals
    induces a connected subgraph. Exponential in the candidate size."""
    if candidate < 0 or candidate & ~g.full_mask:
        raise ValueError("candidate set outside the graph's vertex range")
    if terminals & ~candidate or not is_connected(g, candidate):
        return False
    free = candidate & ~terminals
    sub = 0
    while sub != free:
        if is_connected(g, terminals | sub):
            return False
        sub = (sub - free) & free
    return True


def oracle_minimal_connecting(g: Graph, terminals: int, cap: int = 20) -> set[int]:
    """All minimal terminal-connecting sets by sweeping every superset."""
    if g.n > cap:
        raise ValueError(f"refusing n={g.n} beyond the oracle cap {cap}")
    if terminals < 0 or terminals & ~g.full_mask:
        raise ValueError("terminal set outside the graph's vertex range")
    free = g.full_mask & ~terminals
    found: set[int] = set()
    extra = 0
    while True:
        s = terminals | extra
        if is_minimal_connecting(g, terminals, s):
            found.add(s)
        if extra == free:
            break
        extra = (extra - free) & free
    return found


def oracle_induced_paths(g: Graph, start: int, targets: int, cap: int = 12) -> set[tuple[int, ...]]:
    """All induced paths from start to a neighbor of the target set, found by
    depth-first extension of simple paths with explicit pairwise checks.

    Keeps a path when its last vertex neighbors the target set and no earlier
    vertex touches the target set or its neighborhood. Every result is
    re-verified against those conditions before being returned.
    """
    if g.n > cap:
        raise ValueError(f"refusing n={g.n} beyond the oracle cap {cap}")
    g._check_vertex(start)
    if targets <= 0 or targets & ~g.full_mask:
        raise ValueError("target set must be a non-empty set of graph vertices")
    tgt = set(vertices_of(targets))
    if start in tgt or any(g.has_edge(start, t) for t in tgt):
        raise ValueError("start vertex must avoid the target set and its neighbors")
    fringe = {w for t in tgt for w in g.neighbors(t)} - tgt
    found: set[tuple[int, ...]] = set()

    def extend(path: list[int], members: set[int]) -> None:
        last = path[-1]
        for w in g.neighbors(last):
            if w in members:
                continue
            if any(g.has_edge(w, p) for p in path[:-1]):
                continue
            if w in fringe:
                found.add((*path, w))
            elif w in tgt:
                continue
            else:
                path.append(w)
                members.add(w)
                extend(path, members)
                path.pop()
                members.discard(w)

    extend([start], {start})
    for p in found:
        _recheck_path(g, p, tgt, fringe)
    return found


def _recheck_path(g: Graph, path: tuple[int, ...], tgt: set[int], fringe: set[int]) -> None:
    # Self-validation of oracle output against the stated path conditions.
    assert len(set(path)) == len(path)
    for a, b in zip(path, path[1:]):
        assert g.has_edge(a, b)
    for i, a in enumerate(path):
        for b in path[i + 2 :]:
            assert not g.has_edge(a, b)
    assert path[-1] in fringe
    assert all(v not in tgt and v not in fringe for v in path[:-1])


def oracle_2dcs(g: Graph, z1: int, z2: int, cap: int = 16) -> bool:
    """Decide the two-group split by trying every assignment of the free
    vertices to the first side, the second side, or neither.

    Connectivity checks are memoized per call and the search stops at the
    first satisfying assignment; the assignments tried are unchanged.
    """
    if g.n > cap:
        raise ValueError(f"refusing n={g.n} beyond the oracle cap {cap}")
    for name, z in (("z1", z1), ("z2", z2)):
        if z <= 0 or z & ~g.full_mask:
            raise ValueError(f"{name} must be a non-empty set of graph vertices")
    if z1 & z2:
        raise ValueError("groups must be disjoint")
    free = vertices_of(g.full_mask & ~z1 & ~z2)
    cache: dict[int, bool] = {}

    def connected(mask: int) -> bool:
        hit = cache.get(mask)
        if hit is None:
            hit = cache[mask] = is_connected(g, mask)
        return hit

    def assign(i: int, a: int, b: int) -> bool:
        if i == len(free):
            return connected(a) and connected(b)
        bit = 1 << free[i]
        return assign(i + 1, a | bit, b) or assign(i + 1, a, b | bit) or assign(i + 1, a, b)

    return assign(0, z1, z2)
