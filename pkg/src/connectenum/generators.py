"""Instance generators: the layered worst-case family, random graphs, and
standard named graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph

LAYERED_VARIANTS = ("base", "wide", "tail")
NAMED_KINDS = ("path", "cycle", "star", "complete")


@dataclass(frozen=True)
class LayeredSpec:
    """Shape of a layered instance: a source vertex, ``columns`` independent
    columns of width 3 chained by complete joins, and a connected target
    block behind the last column.

    Variants adjust the total branching budget: ``wide`` grows the first
    column to width 4, ``tail`` appends an extra column of width 2 next to
    the target block.
    """

    columns: int
    target_size: int = 1
    variant: str = "base"

    def widths(self) -> list[int]:
        if self.columns < 1:
            raise ValueError("need at least one column")
        if self.target_size < 1:
            raise ValueError("need at least one target vertex")
        if self.variant not in LAYERED_VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        widths = [3] * self.columns
        if self.variant == "wide":
            widths[0] = 4
        elif self.variant == "tail":
            widths.append(2)
        return widths


def gen_layered(spec: LayeredSpec) -> tuple[Graph, int, int]:
    """Build the layered instance; returns (graph, source vertex, target mask).

    The source joins the first column, consecutive columns are completely
    joined, the last column joins the first target vertex, and the targets
    form a path. On the ``base`` variant the induced paths from the source
    to the targets' fringe number exactly 3^columns, the enumerator's
    worst case; ``wide`` and ``tail`` realize the other two residues of the
    branching budget.
    """
    widths = spec.widths()
    edges: list[tuple[int, int]] = []
    source = 0
    nxt = 1
    layers: list[list[int]] = []
    for w in widths:
        layers.append(list(range(nxt, nxt + w)))
        nxt += w
    targets = list(range(nxt, nxt + spec.target_size))
    n = nxt + spec.target_size
    for v in layers[0]:
        edges.append((source, v))
    for a, b in zip(layers, layers[1:]):
        edges.extend((u, v) for u in a for v in b)
    for v in layers[-1]:
        edges.append((v, targets[0]))
    edges.extend((a, b) for a, b in zip(targets, targets[1:]))
    target_mask = 0
    for v in targets:
        target_mask |= 1 << v
    return Graph(n, edges), source, target_mask


def gen_random(n: int, edge_prob: float, seed: int) -> Graph:
    """Erdos-Renyi style random graph; identical output for identical arguments."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph(n, edges)


def gen_named(kind: str, n: int) -> Graph:
    """Standard graphs: path, cycle (n >= 3), star (center 0), complete."""
    if kind not in NAMED_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if n < 1:
        raise ValueError("need at least one vertex")
    if kind == "path":
        return Graph(n, ((v, v + 1) for v in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least three vertices")
        return Graph(n, [(v, (v + 1) % n) for v in range(n)])
    if kind == "star":
        return Graph(n, ((0, v) for v in range(1, n)))
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
