"""Decision procedure for the 2-disjoint-connected-subgraphs problem.

Given a connected graph and two disjoint terminal groups, decide whether two
disjoint vertex sets exist, each covering its group and inducing a connected
subgraph. The solver generates candidates for the side with the smaller
group: when that group is a small fraction of the graph it enumerates its
minimal connecting sets with the other group's vertices removed, otherwise
it loops over all supersets directly. Every candidate is then checked
against the remaining graph, where the second group must sit inside a
single connected component.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import exp, log
from typing import Iterator, Optional

from .connecting import iter_minimal_connecting
from .graph import (
    Graph,
    component_of,
    induced_subgraph,
    is_connected,
    vertices_of,
)

# Candidate-generation switchover: enumerate minimal connecting sets while
# |smaller group| / n <= 0.0839, compared exactly in integers.
_THRESHOLD_NUM = 839
_THRESHOLD_DEN = 10000


class Strategy(enum.Enum):
    ENUMERATE_MINIMAL = "enumerate-minimal"
    SUBSET_LOOP = "subset-loop"


@dataclass(frozen=True)
class DcsInstance:
    """A connected graph with two disjoint, non-empty terminal groups."""

    graph: Graph
    z1: int
    z2: int

    def __post_init__(self) -> None:
        g = self.graph
        for name, z in (("z1", self.z1), ("z2", self.z2)):
            if z <= 0 or z & ~g.full_mask:
                raise ValueError(f"{name} must be a non-empty set of graph vertices")
        if self.z1 & self.z2:
            raise ValueError("terminal groups must be disjoint")
        if not is_connected(g, g.full_mask):
            raise ValueError("input graph must be connected")


@dataclass(frozen=True)
class DcsWitness:
    """Disjoint vertex sets a1 and a2, each connected and covering its group."""

    a1: int
    a2: int


@dataclass
class SolveStats:
    """Counters for one solve: candidates that reached the component check."""

    candidates: int = 0


def select_strategy(n: int, smaller: int, larger: int) -> Strategy:
    """Pick the candidate-generation strategy from the group sizes.

    ``smaller``/``larger`` are the group sizes after swapping so the first
    is no bigger than the second.
    """
    if not (1 <= smaller <= larger and smaller + larger <= n):
        raise ValueError("need 1 <= smaller <= larger and smaller + larger <= n")
    if smaller * _THRESHOLD_DEN <= _THRESHOLD_NUM * n:
        return Strategy.ENUMERATE_MINIMAL
    return Strategy.SUBSET_LOOP


def stage2_check(g: Graph, group: int, chosen: int) -> Optional[int]:
    """Return the component of the graph minus ``chosen`` containing all of
    ``group``, or None when the group is split."""
    if group & chosen:
        raise ValueError("chosen set must avoid the group being checked")
    rest = g.full_mask & ~chosen
    start = (group & -group).bit_length() - 1
    comp = component_of(g, rest, start)
    return comp if not group & ~comp else None


def iter_2dcs_witnesses(
    inst: DcsInstance,
    strategy: Optional[Strategy] = None,
    stats: Optional[SolveStats] = None,
) -> Iterator[DcsWitness]:
    """Yield witnesses as candidates succeed, in deterministic order.

    One witness per successful first-side candidate. Forcing either strategy
    changes which candidates are tried, never the yes/no answer.
    """
    g = inst.graph
    swapped = inst.z1.bit_count() > inst.z2.bit_count()
    small, big = (inst.z2, inst.z1) if swapped else (inst.z1, inst.z2)
    if strategy is None:
        strategy = select_strategy(g.n, small.bit_count(), big.bit_count())

    def witness(a: int, comp: int) -> DcsWitness:
        return DcsWitness(comp, a) if swapped else DcsWitness(a, comp)

    if strategy is Strategy.ENUMERATE_MINIMAL:
        keep = g.full_mask & ~big
        sub = induced_subgraph(g, keep)
        olds = vertices_of(keep)
        to_sub = {v: i for i, v in enumerate(olds)}
        small_sub = 0
        for v in vertices_of(small):
            small_sub |= 1 << to_sub[v]
        for found in iter_minimal_connecting(sub, small_sub):
            a = 0
            for w in vertices_of(found):
                a |= 1 << olds[w]
            assert is_connected(g, a)
            if stats is not None:
                stats.candidates += 1
            comp = stage2_check(g, big, a)
            if comp is not None:
                yield witness(a, comp)
    else:
        free = g.full_mask & ~small & ~big
        extra = 0
        while True:
            a = small | extra
            if is_connected(g, a):
                if stats is not None:
                    stats.candidates += 1
                comp = stage2_check(g, big, a)
                if comp is not None:
                    yield witness(a, comp)
            if extra == free:
                break
            extra = (extra - free) & free


def solve_2dcs(
    inst: DcsInstance,
    strategy: Optional[Strategy] = None,
    stats: Optional[SolveStats] = None,
) -> Optional[DcsWitness]:
    """Return a witness partition, or None when no valid split exists."""
    return next(iter_2dcs_witnesses(inst, strategy, stats), None)


def count_witnesses(inst: DcsInstance, strategy: Optional[Strategy] = None) -> int:
    """Count the first-side candidates that extend to a full witness."""
    return sum(1 for _ in iter_2dcs_witnesses(inst, strategy))


def verify_witness(inst: DcsInstance, w: DcsWitness) -> bool:
    """Check all witness requirements against the instance."""
    g = inst.graph
    if w.a1 < 0 or w.a2 < 0 or (w.a1 | w.a2) & ~g.full_mask:
        return False
    if w.a1 & w.a2:
        return False
    if inst.z1 & ~w.a1 or inst.z2 & ~w.a2:
        return False
    return is_connected(g, w.a1) and is_connected(g, w.a2)


def growth_base(alpha: float) -> float:
    """Per-vertex growth base of the candidate enumeration when the smaller
    group holds an ``alpha`` fraction of the vertices.

    Stirling form of C((1-2a)n, an) * 3^((1-2a)n/3) to the 1/n power.
    Defined for 0 < alpha <= 1/3.
    """
    if not 0.0 < alpha <= 1.0 / 3.0:
        raise ValueError("alpha must lie in (0, 1/3]")
    beta = 1.0 - 2.0 * alpha
    rem = beta - alpha
    log_base = beta * log(beta) - alpha * log(alpha) + beta * log(3.0) / 3.0
    if rem > 0.0:
        log_base -= rem * log(rem)
    return exp(log_base)


def runtime_bound_curve(alpha_max: float, step: float) -> list[tuple[float, float]]:
    """Evaluate the growth base on a grid over (0, alpha_max].

    The grid is step, 2*step, ... with alpha_max appended when the last
    multiple falls short of it.
    """
    if not 0.0 < step < alpha_max:
        raise ValueError("need 0 < step < alpha_max")
    if alpha_max > 1.0 / 3.0:
        raise ValueError("alpha_max beyond 1/3 leaves the growth base undefined")
    points: list[tuple[float, float]] = []
    k = 1
    while True:
        alpha = k * step
        if alpha > alpha_max + 1e-12:
            break
        alpha = min(alpha, alpha_max)
        points.append((alpha, growth_base(alpha)))
        k += 1
    if points[-1][0] < alpha_max - 1e-12:
        points.append((alpha_max, growth_base(alpha_max)))
    return points
