import pytest

from connectenum.generators import LayeredSpec, gen_layered, gen_named, gen_random
from connectenum.graph import closed_neighborhood, open_neighborhood, vertex_mask, vertices_of
from connectenum.oracles import oracle_induced_paths, oracle_max_leaves
from connectenum.paths import (
    EnumerationStats,
    branch_depth,
    enumerate_induced_paths,
    format_path,
    is_induced_path,
    iter_induced_paths,
    max_leaves,
)


def mask(*ids):
    return vertex_mask(ids)


def test_max_leaves_values():
    assert max_leaves(1) == 1
    assert max_leaves(6) == 9
    assert max_leaves(4) == 4
    assert max_leaves(0) == 1
    assert max_leaves(2) == 2
    assert max_leaves(5) == 6
    with pytest.raises(ValueError):
        max_leaves(-1)


def test_max_leaves_matches_dp():
    for t in range(61):
        assert max_leaves(t) == oracle_max_leaves(t)


def test_max_leaves_large_values_exact():
    # arbitrary precision: 3^100 has no float wobble
    assert max_leaves(300) == 3**100
    assert max_leaves(301) == 4 * 3**99
    assert max_leaves(302) == 2 * 3**100


def test_branch_depth_examples():
    p2 = gen_named("path", 2)
    assert branch_depth(p2, [0, 1]) == 1
    star = gen_named("star", 4)
    assert branch_depth(star, [1, 0]) == 1
    # layered family: every full source-to-fringe path consumes the whole budget
    for i in (1, 2, 3):
        g, v, targets = gen_layered(LayeredSpec(i))
        path = [v] + [1 + 3 * k for k in range(i)]
        assert branch_depth(g, path) == 3 * i == g.n - targets.bit_count() - 1


def test_branch_depth_degenerate_and_errors():
    p3 = gen_named("path", 3)
    assert branch_depth(p3, [1]) == -1
    with pytest.raises(ValueError):
        branch_depth(p3, [])
    with pytest.raises(ValueError):
        branch_depth(p3, [0, 2])
    with pytest.raises(ValueError):
        branch_depth(p3, [0, 1, 0])


def test_enumerate_unique_route():
    p3 = gen_named("path", 3)  # v-a-r
    got = [p.vertices for p in iter_induced_paths(p3, 0, mask(2))]
    assert got == [(0, 1)]


def test_enumerate_layered_count():
    g, v, targets = gen_layered(LayeredSpec(2))
    assert g.n == 8
    assert enumerate_induced_paths(g, v, targets) == 9


def test_enumerate_cycle_with_and_without_limit():
    c5 = gen_named("cycle", 5)  # (v,a,b,c,d) = 0..4
    got = [(p.vertices, p.branch_depth) for p in iter_induced_paths(c5, 0, mask(3))]
    assert got == [((0, 1, 2), 3), ((0, 4), 2)]
    limited = [p.vertices for p in iter_induced_paths(c5, 0, mask(3), t_limit=2)]
    assert limited == [(0, 4)]


def test_precondition_errors():
    p3 = gen_named("path", 3)
    with pytest.raises(ValueError):
        iter_induced_paths(p3, 0, 0)  # empty target set
    with pytest.raises(ValueError):
        iter_induced_paths(p3, 1, mask(1, 2))  # start inside targets
    with pytest.raises(ValueError):
        iter_induced_paths(p3, 0, mask(1))  # target adjacent to start
    with pytest.raises(ValueError):
        iter_induced_paths(p3, 5, mask(2))


def _query_choices(g, rng):
    # deterministic (start, targets) choices satisfying the preconditions
    for start in range(g.n):
        pool = g.full_mask & ~closed_neighborhood(g, 1 << start)
        if pool:
            ids = vertices_of(pool)
            size = rng % len(ids) + 1
            targets = vertex_mask(ids[:size])
            return start, targets
    return None


def test_count_bound_under_depth_limit():
    for seed in range(40):
        g = gen_random(9, 0.35, seed)
        q = _query_choices(g, seed)
        if q is None:
            continue
        start, targets = q
        for t in (0, 2, 4, 7, 11):
            count = enumerate_induced_paths(g, start, targets, t_limit=t)
            assert count <= max_leaves(t)


def test_unbounded_count_bound():
    for seed in range(40):
        g = gen_random(10, 0.4, seed)
        q = _query_choices(g, seed)
        if q is None:
            continue
        start, targets = q
        count = enumerate_induced_paths(g, start, targets)
        budget = g.n - targets.bit_count() - 1
        assert count <= max_leaves(budget)
        assert count**3 <= 3 ** (g.n - targets.bit_count())


def test_matches_oracle_on_small_graphs():
    for seed in range(25):
        g = gen_random(8, 0.4, seed)
        q = _query_choices(g, seed)
        if q is None:
            continue
        start, targets = q
        got = {p.vertices for p in iter_induced_paths(g, start, targets)}
        assert got == oracle_induced_paths(g, start, targets)


def test_emitted_paths_satisfy_invariants():
    for seed in range(15):
        g = gen_random(9, 0.45, seed)
        q = _query_choices(g, seed)
        if q is None:
            continue
        start, targets = q
        fringe = open_neighborhood(g, targets)
        halo = closed_neighborhood(g, targets)
        for p in iter_induced_paths(g, start, targets):
            assert is_induced_path(g, p.vertices)
            assert p.vertices[0] == start
            assert fringe >> p.vertices[-1] & 1
            assert all(not halo >> v & 1 for v in p.vertices[:-1])
            assert branch_depth(g, p.vertices) == p.branch_depth


def test_depth_limit_equals_posthoc_filter():
    for seed in range(15):
        g = gen_random(9, 0.4, seed)
        q = _query_choices(g, seed)
        if q is None:
            continue
        start, targets = q
        every = list(iter_induced_paths(g, start, targets))
        for t in (1, 3, 5, 8):
            direct = [p.vertices for p in iter_induced_paths(g, start, targets, t_limit=t)]
            filtered = [p.vertices for p in every if p.branch_depth <= t]
            assert direct == filtered


def test_deterministic_order():
    g, v, targets = gen_layered(LayeredSpec(3))
    first = [p.vertices for p in iter_induced_paths(g, v, targets)]
    second = [p.vertices for p in iter_induced_paths(g, v, targets)]
    assert first == second
    # ascending child order: the first path takes the lowest id in every column
    assert first[0] == (0, 1, 4, 7)


def test_sink_early_stop_and_stats():
    g, v, targets = gen_layered(LayeredSpec(3))
    seen = []

    def sink(p):
        seen.append(p)
        return len(seen) == 5

    stats = EnumerationStats()
    count = enumerate_induced_paths(g, v, targets, sink=sink, stats=stats)
    assert count == 5
    assert len(seen) == 5
    assert 0 < stats.nodes < 60

    full = EnumerationStats()
    total = enumerate_induced_paths(g, v, targets, stats=full)
    assert total == 27
    assert full.nodes >= 27


def test_is_induced_path_detects_chords():
    c4 = gen_named("cycle", 4)
    assert is_induced_path(c4, [0, 1, 2])
    assert not is_induced_path(c4, [0, 1, 2, 3])  # chord 3-0 closes the cycle
    assert not is_induced_path(c4, [0, 2])
    assert not is_induced_path(c4, [0, 1, 0])


def test_format_path():
    g, v, targets = gen_layered(LayeredSpec(1))
    line = format_path(next(iter(iter_induced_paths(g, v, targets))))
    assert line == "1 2 bd=3"
