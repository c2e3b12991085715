from math import comb, exp, isclose, log

import pytest

from connectenum.connecting import (
    ConnectingStats,
    brute_force_connecting,
    contract_terminal_edges,
    enumerate_connecting_supersets,
    enumerate_minimal_connecting,
    is_minimal_connecting,
    iter_connecting_supersets,
    iter_minimal_connecting,
    minimal_count_bound,
)
from connectenum.generators import LayeredSpec, gen_layered, gen_named, gen_random
from connectenum.graph import (
    Graph,
    closed_neighborhood,
    is_connected,
    open_neighborhood,
    vertex_mask,
    vertices_of,
)
from connectenum.oracles import minimal_by_definition, oracle_minimal_connecting


def mask(*ids):
    return vertex_mask(ids)


def collect(gen):
    return list(gen)


def test_is_minimal_examples():
    p3 = gen_named("path", 3)
    assert is_minimal_connecting(p3, mask(0, 2), mask(0, 1, 2))
    c4 = gen_named("cycle", 4)
    assert not is_minimal_connecting(c4, mask(0, 2), c4.full_mask)
    tri = gen_named("complete", 3)
    assert is_minimal_connecting(tri, mask(0, 1), mask(0, 1))
    assert not is_minimal_connecting(tri, mask(0, 1), mask(0, 1, 2))
    with pytest.raises(ValueError):
        is_minimal_connecting(p3, mask(0, 2), mask(0, 1))


def test_is_minimal_matches_literal_definition():
    # the removal characterization is derived, so it must earn trust empirically
    for seed in range(60):
        g = gen_random(8, 0.35, seed)
        terminals = mask(0, (seed % 6) + 2)
        free = g.full_mask & ~terminals
        sub = 0
        while True:
            s = terminals | sub
            assert is_minimal_connecting(g, terminals, s) == minimal_by_definition(
                g, terminals, s
            )
            if sub == free:
                break
            sub = (sub - free) & free


def test_contract_terminal_edges_examples():
    p4 = gen_named("path", 4)
    g2, t2, cm = contract_terminal_edges(p4, p4.full_mask)
    assert t2.bit_count() == 1 and g2.n == 1

    g2, t2, cm = contract_terminal_edges(p4, mask(0, 2))  # independent already
    assert g2 == p4 and t2 == mask(0, 2)

    g2, t2, cm = contract_terminal_edges(p4, mask(0, 1, 3))
    assert g2.n == 3 and t2.bit_count() == 2
    # one minimal set on both sides of the contraction
    assert len(oracle_minimal_connecting(g2, t2)) == 1
    assert len(oracle_minimal_connecting(p4, mask(0, 1, 3))) == 1
    assert cm.expand(g2.full_mask) == p4.full_mask
    # reduced terminals are independent
    for t in vertices_of(t2):
        assert g2.adj[t] & t2 == 0


def test_supersets_forced_connector():
    p3 = gen_named("path", 3)
    got = collect(iter_connecting_supersets(p3, mask(0, 2)))
    assert got == [mask(0, 1, 2)]


def test_supersets_contain_all_minimal_sets():
    c4 = gen_named("cycle", 4)
    family = set(iter_connecting_supersets(c4, mask(0, 2)))
    assert {mask(0, 1, 2), mask(0, 2, 3)} <= family

    star = gen_named("star", 4)
    family = collect(iter_connecting_supersets(star, mask(1, 2, 3)))
    assert star.full_mask in family
    assert len(family) >= 1


def test_supersets_precondition_and_split_terminals():
    p3 = gen_named("path", 3)
    with pytest.raises(ValueError):
        iter_connecting_supersets(p3, mask(0))
    split = Graph(4, [(0, 1), (2, 3)])
    assert collect(iter_connecting_supersets(split, mask(0, 2))) == []


def test_superset_family_completeness_property():
    for seed in range(40):
        g = gen_random(9, 0.35, seed)
        terminals = {
            0: mask(0, 4),
            1: mask(1, 5, 8),
            2: mask(0, 3, 6),
        }[seed % 3]
        family = set(iter_connecting_supersets(g, terminals))
        minimal = oracle_minimal_connecting(g, terminals)
        assert minimal <= family


def test_raw_emission_bound_property():
    # raw sets with small fringe obey the binomial-times-3^(r/3) ceiling
    for seed in range(25):
        g = gen_random(9, 0.4, seed)
        terminals = mask(0, 5) if seed % 2 else mask(0, 4, 8)
        t = terminals.bit_count()
        if 3 * t > g.n:
            continue
        fringe_sizes = []
        for s in iter_connecting_supersets(g, terminals):
            fringe_sizes.append((closed_neighborhood(g, s) & ~terminals).bit_count())
        free = g.n - t
        binom = comb(free, t - 2)
        for r in range(free + 1):
            hits = sum(1 for x in fringe_sizes if x <= r)
            assert hits**3 <= binom**3 * 3**r


def test_minimal_enumeration_examples():
    c4 = gen_named("cycle", 4)
    got = set(iter_minimal_connecting(c4, mask(0, 2)))
    assert got == {mask(0, 1, 2), mask(0, 2, 3)}

    g, v, targets = gen_layered(LayeredSpec(2))
    assert enumerate_minimal_connecting(g, (1 << v) | targets) == 9

    k4 = gen_named("complete", 4)
    assert collect(iter_minimal_connecting(k4, mask(1, 3))) == [mask(1, 3)]

    split = Graph(4, [(0, 1), (2, 3)])
    assert collect(iter_minimal_connecting(split, mask(0, 3))) == []


def test_minimal_enumeration_small_terminal_sets():
    p3 = gen_named("path", 3)
    assert collect(iter_minimal_connecting(p3, 0)) == []
    assert collect(iter_minimal_connecting(p3, mask(1))) == [mask(1)]


def test_brute_force_examples():
    p4 = gen_named("path", 4)
    assert collect_sink(brute_force_connecting, p4, mask(0, 3)) == [p4.full_mask]
    c5 = gen_named("cycle", 5)
    arcs = collect_sink(brute_force_connecting, c5, mask(0, 2))
    assert sorted(arcs) == sorted([mask(0, 1, 2), mask(0, 2, 3, 4)])
    k3 = gen_named("complete", 3)
    assert collect_sink(brute_force_connecting, k3, k3.full_mask) == [k3.full_mask]
    split = Graph(2, [])
    assert collect_sink(brute_force_connecting, split, split.full_mask) == []


def collect_sink(fn, g, terminals):
    out = []
    fn(g, terminals, sink=lambda s: out.append(s))
    return out


def test_every_emission_is_minimal():
    for seed in range(30):
        g = gen_random(10, 0.3, seed)
        terminals = mask(0, 2, 7)
        for s in iter_minimal_connecting(g, terminals):
            assert is_minimal_connecting(g, terminals, s)
            assert terminals & ~s == 0
            assert is_connected(g, s)


def test_matches_oracle_including_adjacent_terminals():
    for seed in range(30):
        g = gen_random(9, 0.4, seed)
        picks = [mask(0, 1), mask(0, 3), mask(0, 1, 5), mask(2, 4, 6, 8)]
        terminals = picks[seed % 4]
        got = set(iter_minimal_connecting(g, terminals))
        assert got == oracle_minimal_connecting(g, terminals)


def test_brute_and_branching_agree():
    for seed in range(20):
        g = gen_random(9, 0.35, seed)
        terminals = mask(1, 6) if seed % 2 else mask(0, 4, 7)
        assert set(iter_minimal_connecting(g, terminals)) == set(
            collect_sink(brute_force_connecting, g, terminals)
        )


def test_incremental_mode_matches_rebuild():
    for seed in range(25):
        g = gen_random(10, 0.35, seed)
        terminals = mask(0, 5, 9)
        default = collect(iter_minimal_connecting(g, terminals))
        fast = collect(iter_minimal_connecting(g, terminals, incremental=True))
        assert default == fast
        raw_a = collect(iter_connecting_supersets(g, terminals))
        raw_b = collect(iter_connecting_supersets(g, terminals, incremental=True))
        assert raw_a == raw_b


def test_count_invariant_under_terminal_contraction():
    for seed in range(15):
        g = gen_random(9, 0.45, seed)
        terminals = mask(0, 1, 4)
        g2, t2, cm = contract_terminal_edges(g, terminals)
        lhs = oracle_minimal_connecting(g, terminals)
        rhs = oracle_minimal_connecting(g2, t2)
        assert len(lhs) == len(rhs)
        expanded = {cm.expand(s) for s in rhs}
        assert len(expanded) == len(rhs)
        assert expanded == lhs


def test_stats_and_raw_counts():
    g, v, targets = gen_layered(LayeredSpec(2))
    stats = ConnectingStats()
    count = enumerate_minimal_connecting(g, (1 << v) | targets, stats=stats)
    assert count == stats.emitted == 9
    assert stats.raw >= stats.emitted
    assert stats.path_nodes > 0

    stats = ConnectingStats()
    raw = enumerate_connecting_supersets(g, (1 << v) | targets, stats=stats)
    assert raw == stats.raw


def test_sink_early_stop():
    c4 = gen_named("cycle", 4)
    seen = []
    count = enumerate_minimal_connecting(c4, mask(0, 2), sink=lambda s: seen.append(s) or True)
    assert count == 1 and len(seen) == 1


def test_minimal_count_bound_values():
    bound = minimal_count_bound(9, 3)
    assert bound.exact == 54
    assert isclose(bound.log, log(54), rel_tol=1e-12)

    bound = minimal_count_bound(6, 2)
    assert bound.exact is None
    assert isclose(exp(bound.log), 3 ** (4 / 3), rel_tol=1e-12)

    # binomial term collapses for two terminals
    for n in (8, 11, 20):
        assert isclose(minimal_count_bound(n, 2).log, (n - 2) / 3 * log(3), rel_tol=1e-12)

    with pytest.raises(ValueError):
        minimal_count_bound(9, 1)
    with pytest.raises(ValueError):
        minimal_count_bound(9, 4)


def test_total_count_obeys_bound():
    for seed in range(20):
        g = gen_random(10, 0.4, seed)
        terminals = mask(0, 6) if seed % 2 else mask(1, 4, 9)
        t = terminals.bit_count()
        count = enumerate_minimal_connecting(g, terminals)
        assert count**3 <= comb(g.n - t, t - 2) ** 3 * 3 ** (g.n - t)


def test_brute_fallback_triggers_for_dense_terminal_sets():
    # five terminals in nine vertices goes through the subset sweep
    for seed in range(10):
        g = gen_random(9, 0.5, seed)
        terminals = mask(0, 2, 4, 6, 8)
        got = set(iter_minimal_connecting(g, terminals))
        assert got == oracle_minimal_connecting(g, terminals)
