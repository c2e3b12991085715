"""Immutable undirected graphs over dense integer vertex ids.

Vertex sets throughout this package are plain Python ints used as bitmasks:
bit ``v`` is set when vertex ``v`` belongs to the set. Masks compose with
``| & ~`` and are hashable, which the enumerators rely on for deduplication.
Vertex labels are the ids themselves; construction order fixes the total
order the enumerators use, and contraction re-indexes densely while keeping
the relative order of surviving vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def vertex_mask(vertices: Iterable[int]) -> int:
    """Build a bitmask from vertex ids."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex id: {v}")
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> list[int]:
    """List the vertex ids in a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Simple undirected graph with vertices 0..n-1 and bitmask adjacency.

    Instances are immutable after construction and safe to share across
    threads. ``adj[v]`` is the neighbor mask of vertex ``v``. Self-loops and
    duplicate edges are rejected.
    """

    __slots__ = ("n", "adj", "full_mask", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            count += 1
        self.n = n
        self.adj = tuple(adj)
        self.full_mask = (1 << n) - 1
        self.edge_count = count

    @classmethod
    def _from_adj(cls, adj: Iterable[int]) -> "Graph":
        # Internal constructor for adjacency already known to be simple.
        g = object.__new__(cls)
        g.adj = tuple(adj)
        g.n = len(g.adj)
        g.full_mask = (1 << g.n) - 1
        g.edge_count = sum(a.bit_count() for a in g.adj) // 2
        return g

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex id out of range: {v}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return vertices_of(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, ascending."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in vertices_of(rest):
                yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class ContractionMap:
    """Maps vertices of a contracted graph back to the vertices they absorbed.

    ``blocks[w]`` is the mask of original vertices merged into new vertex
    ``w``. Blocks partition the original vertex range, and each block induces
    a connected subgraph of the original graph.
    """

    __slots__ = ("blocks", "_owner")

    def __init__(self, blocks: Iterable[int]) -> None:
        self.blocks = tuple(blocks)
        owner = {}
        for w, block in enumerate(self.blocks):
            for v in vertices_of(block):
                owner[v] = w
        self._owner = owner

    @classmethod
    def identity(cls, n: int) -> "ContractionMap":
        return cls(1 << v for v in range(n))

    def to_new(self, v: int) -> int:
        """New id of the block containing original vertex v."""
        return self._owner[v]

    def translate(self, orig_mask: int) -> int:
        """Image of an original-vertex mask in the contracted graph."""
        out = 0
        for v in vertices_of(orig_mask):
            out |= 1 << self._owner[v]
        return out

    def expand(self, new_mask: int) -> int:
        """Union of the original vertices behind a contracted-graph mask."""
        out = 0
        for w in vertices_of(new_mask):
            out |= self.blocks[w]
        return out

    def sole_origin(self, w: int) -> int:
        """Original id behind new vertex w; w's block must be a singleton."""
        block = self.blocks[w]
        if block.bit_count() != 1:
            raise ValueError(f"vertex {w} absorbed more than one vertex")
        return block.bit_length() - 1

    def then(self, later: "ContractionMap") -> "ContractionMap":
        """Compose with a contraction applied after this one."""
        return ContractionMap(self.expand(b) for b in later.blocks)

    def __repr__(self) -> str:
        return f"ContractionMap({len(self.blocks)} blocks)"


def _check_set(g: Graph, s: int) -> None:
    if s < 0 or s & ~g.full_mask:
        raise ValueError("vertex set outside the graph's vertex range")


def closed_neighborhood(g: Graph, s: int) -> int:
    """Mask of vertices in s or adjacent to s."""
    _check_set(g, s)
    out = s
    m = s
    while m:
        low = m & -m
        out |= g.adj[low.bit_length() - 1]
        m ^= low
    return out


def open_neighborhood(g: Graph, s: int) -> int:
    """Mask of vertices outside s with a neighbor in s."""
    return closed_neighborhood(g, s) & ~s


def component_of(g: Graph, s: int, v: int) -> int:
    """Connected component of the subgraph induced by s that contains v."""
    _check_set(g, s)
    if not s >> v & 1:
        raise ValueError(f"vertex {v} is not in the given set")
    comp = 1 << v
    frontier = comp
    adj = g.adj
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= adj[low.bit_length() - 1]
            m ^= low
        frontier = reach & s & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph, s: int) -> bool:
    """True when the subgraph induced by s is connected.

    Sets with at most one vertex count as connected.
    """
    _check_set(g, s)
    if s.bit_count() <= 1:
        return True
    start = (s & -s).bit_length() - 1
    return component_of(g, s, start) == s


def components(g: Graph, s: int) -> list[int]:
    """Partition s into the connected blocks of its induced subgraph.

    Blocks are ordered by their smallest contained vertex id.
    """
    _check_set(g, s)
    out = []
    rest = s
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, rest, v)
        out.append(comp)
        rest &= ~comp
    return out


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by s, re-indexed densely.

    New vertex i corresponds to the i-th smallest member of s (the list
    returned by ``vertices_of(s)``).
    """
    _check_set(g, s)
    olds = vertices_of(s)
    newbit = {old: 1 << i for i, old in enumerate(olds)}
    adj = []
    for old in olds:
        mask = 0
        for w in vertices_of(g.adj[old] & s):
            mask |= newbit[w]
        adj.append(mask)
    return Graph._from_adj(adj)


def contract_set(g: Graph, s: int, rep: int) -> tuple[Graph, ContractionMap]:
    """Merge the connected set s into its member rep.

    Equivalent to repeatedly contracting edges of the subgraph induced by s.
    In the result the survivor's neighborhood equals the open neighborhood
    of s in g. Vertices are re-indexed densely in ascending original order.
    """
    _check_set(g, s)
    if not s >> rep & 1:
        raise ValueError(f"representative {rep} is not in the contracted set")
    if not is_connected(g, s):
        raise ValueError("cannot contract a disconnected vertex set")
    keep = (g.full_mask & ~s) | (1 << rep)
    olds = vertices_of(keep)
    newbit = {old: 1 << i for i, old in enumerate(olds)}
    rep_bit = newbit[rep]
    outside = open_neighborhood(g, s)
    adj = []
    blocks = []
    for old in olds:
        if old == rep:
            mask = 0
            for w in vertices_of(outside):
                mask |= newbit[w]
            adj.append(mask)
            blocks.append(s)
        else:
            mask = 0
            for w in vertices_of(g.adj[old] & keep & ~(1 << rep)):
                mask |= newbit[w]
            if g.adj[old] & s:
                mask |= rep_bit
            adj.append(mask)
            blocks.append(1 << old)
    return Graph._from_adj(adj), ContractionMap(blocks)


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, ContractionMap]:
    """Contract the edge uv into v: v adopts u's other neighbors, u is removed."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return contract_set(g, (1 << u) | (1 << v), v)
