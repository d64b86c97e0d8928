"""Oracle correctness: frozen small cases plus independent recounts."""

import random

import pytest

from _oracles import complement_cliques, subset_filter_masks, subset_filter_slow
from cactus_mis.graphs import (
    BAR_GADGETS,
    FAMILY_IDS,
    TILDE_GADGETS,
    Graph,
    build_graph,
    graph_order,
)
from cactus_mis.oracle import (
    SizeDistribution,
    VertexLimitExceeded,
    enumerate_mis,
    is_maximal_independent,
    mis_count,
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def small_generated_graphs(max_order):
    out = []
    for fam in FAMILY_IDS:
        for aux in (None, "bar", "tilde"):
            table = {"bar": BAR_GADGETS, "tilde": TILDE_GADGETS}.get(aux)
            if aux is not None and fam not in table:
                continue
            n = 0
            while graph_order(fam, n, aux) <= max_order:
                out.append((fam, aux, n))
                n += 1
    return out


def test_known_distributions():
    assert enumerate_mis(cycle(5)) == {2: 5}
    assert enumerate_mis(cycle(6)) == {2: 3, 3: 2}
    assert enumerate_mis(build_graph("triangular", 2)) == {1: 1, 2: 4}
    assert enumerate_mis(Graph(0, [])) == {0: 1}
    assert enumerate_mis(Graph(1, [])) == {1: 1}


def test_totals():
    assert mis_count(build_graph("diamond", 3)) == 7
    assert mis_count(build_graph("square", 4)) == 16
    assert mis_count(build_graph("ortho-hexagonal", 3)) == 72
    assert enumerate_mis(cycle(5)).total == 5


def test_is_maximal_independent():
    c4 = cycle(4)
    assert is_maximal_independent(c4, {0, 2})
    assert not is_maximal_independent(c4, {0})
    k2 = Graph(2, [(0, 1)])
    assert not is_maximal_independent(k2, {0, 1})
    with pytest.raises(ValueError):
        is_maximal_independent(k2, {5})


@pytest.mark.parametrize("fam,aux,n", small_generated_graphs(14))
def test_matches_slow_subset_filter(fam, aux, n):
    g = build_graph(fam, n, aux)
    assert enumerate_mis(g).as_dict() == subset_filter_slow(g)


@pytest.mark.parametrize("fam,aux,n", small_generated_graphs(14))
def test_mask_filter_agrees_with_slow_filter(fam, aux, n):
    # validates the faster all-masks oracle used by the acceptance suite
    g = build_graph(fam, n, aux)
    assert subset_filter_masks(g) == subset_filter_slow(g)


@pytest.mark.parametrize("fam,aux,n", small_generated_graphs(18))
def test_matches_complement_cliques(fam, aux, n):
    g = build_graph(fam, n, aux)
    assert enumerate_mis(g).as_dict() == complement_cliques(g)


def test_disjoint_union_convolution():
    rng = random.Random(20240817)
    pool = small_generated_graphs(12)
    for _ in range(10):
        fa, aa, na = rng.choice(pool)
        fb, ab, nb = rng.choice(pool)
        ga, gb = build_graph(fa, na, aa), build_graph(fb, nb, ab)
        edges = list(ga.edges()) + [(u + ga.vertex_count, v + ga.vertex_count) for u, v in gb.edges()]
        union = Graph(ga.vertex_count + gb.vertex_count, edges)
        assert enumerate_mis(union) == enumerate_mis(ga).convolve(enumerate_mis(gb))


def test_determinism():
    g = build_graph("meta-pentagonal", 4)
    assert enumerate_mis(g) == enumerate_mis(g)


def test_every_enumerated_set_is_maximal_independent():
    g = build_graph("para-hexagonal", 2)
    seen = []
    enumerate_mis(g, on_set=seen.append)
    assert len(seen) == len(set(seen)) == mis_count(g)
    for mask in seen:
        members = [v for v in range(g.vertex_count) if mask >> v & 1]
        assert is_maximal_independent(g, members)


def test_vertex_limit_guard():
    g = build_graph("triangular", 5)
    with pytest.raises(VertexLimitExceeded):
        enumerate_mis(g, vertex_limit=10)
    assert enumerate_mis(g, vertex_limit=11).total == 21


def test_size_distribution_arithmetic():
    d = SizeDistribution({1: 2, 2: 3})
    assert d.total == 5
    assert d.shifted(2) == {3: 2, 4: 3}
    assert d.scaled(3) == {1: 6, 2: 9}
    assert d + SizeDistribution({2: 1}) == {1: 2, 2: 4}
    assert d.convolve(SizeDistribution({0: 1})) == d
    with pytest.raises(ValueError):
        SizeDistribution({-1: 1})
