"""Text format for graph instances.

The format follows the DIMACS edge convention with 1-based vertex ids:

    c free-form comment
    c meta key=value ...
    c set <name> <id> <id> ...
    p edge <n> <m>
    e <u> <v>

``c set`` lines attach named vertex sets (terminal sets, source vertices and
the like) to the instance; ``c meta`` lines carry generator parameters.
Duplicate edges, self-loops, out-of-range ids and malformed lines are
rejected with the offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph, vertices_of


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class Instance:
    """A parsed graph plus its named vertex sets and metadata."""

    graph: Graph
    sets: dict[str, int] = field(default_factory=dict)
    meta: dict[str, str] = field(default_factory=dict)


def parse_instance(text: str) -> Instance:
    n = None
    m_expected = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    pending_sets: list[tuple[int, str, list[str]]] = []
    meta: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "c":
            if len(tokens) >= 2 and tokens[1] == "set":
                if len(tokens) < 3:
                    raise ParseError(line_no, "set line needs a name")
                pending_sets.append((line_no, tokens[2], tokens[3:]))
            elif len(tokens) >= 2 and tokens[1] == "meta":
                for item in tokens[2:]:
                    key, sep, value = item.partition("=")
                    if not sep:
                        raise ParseError(line_no, f"meta item {item!r} is not key=value")
                    meta[key] = value
            continue
        if kind == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(line_no, "problem line must be 'p edge <n> <m>'")
            try:
                n, m_expected = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(line_no, "problem line counts must be integers") from None
            if n < 0 or m_expected < 0:
                raise ParseError(line_no, "problem line counts must be non-negative")
            continue
        if kind == "e":
            if n is None:
                raise ParseError(line_no, "edge before problem line")
            if len(tokens) != 3:
                raise ParseError(line_no, "edge line must be 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(line_no, "edge endpoints must be integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"vertex id out of range 1..{n}")
            if u == v:
                raise ParseError(line_no, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(line_no, f"duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(line_no, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(len(text.splitlines()) + 1, "missing problem line")
    if len(edges) != m_expected:
        raise ParseError(
            len(text.splitlines()) + 1,
            f"problem line promises {m_expected} edges, found {len(edges)}",
        )
    sets: dict[str, int] = {}
    for line_no, name, raw_ids in pending_sets:
        mask = 0
        for token in raw_ids:
            try:
                v = int(token)
            except ValueError:
                raise ParseError(line_no, f"set id {token!r} is not an integer") from None
            if not 1 <= v <= n:
                raise ParseError(line_no, f"set id {v} out of range 1..{n}")
            mask |= 1 << (v - 1)
        sets[name] = mask
    return Instance(Graph(n, edges), sets, meta)


def format_vertex_set(mask: int) -> str:
    """Render a vertex mask as ascending 1-based ids."""
    return " ".join(str(v + 1) for v in vertices_of(mask))


def format_instance(
    graph: Graph,
    sets: dict[str, int] | None = None,
    meta: dict[str, str] | None = None,
) -> str:
    lines = []
    if meta:
        items = " ".join(f"{k}={v}" for k, v in meta.items())
        lines.append(f"c meta {items}")
    lines.append(f"p edge {graph.n} {graph.edge_count}")
    for name, mask in (sets or {}).items():
        lines.append(f"c set {name} {format_vertex_set(mask)}")
    for u, v in graph.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def load_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text())
