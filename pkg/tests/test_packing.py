import itertools
import random

import pytest

from rainbowlab.errors import ResourceExhausted
from rainbowlab.graph import (
    Graph,
    clique_join_turan,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    turan_graph,
)
from rainbowlab.packing import (
    common_neighborhood,
    enumerate_triangles,
    has_k_disjoint_triangles,
    i3,
    is_friendly,
    is_matching,
    is_triangle_packing,
    max_independent_triangles,
    max_independent_triangles_bruteforce,
    max_matching,
    max_matching_bruteforce,
)

from .conftest import random_graph

PETERSEN = Graph.from_edges(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


def _matching_by_subsets(g):
    edges = g.edges()
    for size in range(g.n // 2, 0, -1):
        for subset in itertools.combinations(edges, size):
            ends = [v for e in subset for v in e]
            if len(set(ends)) == len(ends):
                return size
    return 0


def test_triangle_examples():
    assert len(enumerate_triangles(complete_graph(4))) == 4
    assert enumerate_triangles(complete_bipartite(3, 3)) == []
    wheel = clique_join_turan(5, 1)
    tris = enumerate_triangles(wheel)
    brute = [t for t in itertools.combinations(range(5), 3)
             if all(wheel.has_edge(a, b) for a, b in itertools.combinations(t, 2))]
    assert tris == brute and len(tris) == 4


def test_triangles_are_lexicographic_and_complete():
    rng = random.Random(2)
    for _ in range(40):
        g = random_graph(rng.randint(0, 9), 0.5, rng)
        brute = [t for t in itertools.combinations(range(g.n), 3)
                 if all(g.has_edge(a, b) for a, b in itertools.combinations(t, 2))]
        assert enumerate_triangles(g) == brute


@pytest.mark.parametrize("g, size", [(complete_graph(4), 2), (complete_bipartite(1, 5), 1), (PETERSEN, 5)])
def test_max_matching_examples(g, size):
    m = max_matching(g)
    assert is_matching(g, m)
    assert len(m) == size == _matching_by_subsets(g)


@pytest.mark.parametrize("n, size", [(5, 2), (6, 3)])
def test_bruteforce_matching_on_cycles(n, size):
    assert max_matching_bruteforce(cycle_graph(n)) == size


def test_bruteforce_matching_rejects_large_graphs():
    with pytest.raises(ValueError):
        max_matching_bruteforce(complete_graph(10))


def test_matching_agrees_with_oracle_on_random_graphs():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(8, 0.5, rng)
        m = max_matching(g)
        assert is_matching(g, m)
        assert len(m) == max_matching_bruteforce(g)


def test_matching_needs_blossoms():
    # two triangles joined by a path: greedy BFS without shrinking misses the augmentation
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)])
    assert len(max_matching(g)) == 4 == max_matching_bruteforce(g)


def test_i3_examples():
    assert i3(complete_graph(6)) == 2
    for n in range(2, 15):
        assert i3(turan_graph(n, 2)) == 0


@pytest.mark.parametrize("n, t", [(3, 1), (5, 1), (8, 2), (12, 3), (9, 3), (20, 4)])
def test_i3_of_extremal_graph(n, t):
    assert n - t >= 2 * t >= 2
    packing = max_independent_triangles(clique_join_turan(n, t))
    assert len(packing) == t
    assert is_triangle_packing(clique_join_turan(n, t), packing)


def test_i3_agrees_with_exhaustive_enumeration():
    rng = random.Random(4)
    for _ in range(150):
        g = random_graph(rng.randint(3, 9), rng.uniform(0.3, 0.9), rng)
        packing = max_independent_triangles(g)
        assert is_triangle_packing(g, packing)
        assert len(packing) == max_independent_triangles_bruteforce(g)
        assert len(packing) <= g.n // 3
        assert len(packing) <= len(enumerate_triangles(g))


def test_i3_witness_is_deterministic():
    g = complete_graph(7)
    assert max_independent_triangles(g) == [(0, 1, 2), (3, 4, 5)]


def test_i3_budget_exhaustion_is_reported():
    with pytest.raises(ResourceExhausted):
        max_independent_triangles(complete_graph(12), node_budget=3)


def test_has_k_disjoint_triangles_examples():
    assert has_k_disjoint_triangles(complete_graph(6), 2)
    assert not has_k_disjoint_triangles(complete_graph(5), 2)
    g = clique_join_turan(12, 2)
    assert max_independent_triangles_bruteforce(g) == 2
    assert not has_k_disjoint_triangles(g, 3)
    assert has_k_disjoint_triangles(g, 0)


def test_has_k_matches_i3():
    rng = random.Random(9)
    for _ in range(80):
        g = random_graph(rng.randint(3, 9), 0.6, rng)
        value = i3(g)
        for k in range(0, 4):
            assert has_k_disjoint_triangles(g, k) == (value >= k)


def test_adding_edges_never_decreases_nu_or_i3():
    rng = random.Random(12)
    for _ in range(60):
        g = random_graph(8, 0.4, rng)
        missing = [e for e in itertools.combinations(range(8), 2) if not g.has_edge(*e)]
        if not missing:
            continue
        h = g.with_edge(*rng.choice(missing))
        assert len(max_matching(h)) >= len(max_matching(g))
        assert i3(h) >= i3(g)


def test_common_neighborhood_examples():
    k4 = complete_graph(4)
    assert common_neighborhood(k4, 0, 1) == {2, 3}
    k33 = complete_bipartite(3, 3)
    assert common_neighborhood(k33, 0, 1) == {3, 4, 5}
    assert common_neighborhood(cycle_graph(5), 0, 1) == set()
    with pytest.raises(ValueError):
        common_neighborhood(k4, 2, 2)


def test_is_friendly_examples():
    assert is_friendly(complete_graph(3), (0, 1), 2)
    assert not is_friendly(path_graph(3), (0, 1), 2)
    with pytest.raises(ValueError):
        is_friendly(complete_graph(3), (0, 1), 1)


def test_friendly_iff_common_neighbour():
    rng = random.Random(13)
    for _ in range(30):
        g = random_graph(7, 0.5, rng)
        for u, v in g.edges():
            common = common_neighborhood(g, u, v)
            for w in range(g.n):
                if w not in (u, v):
                    assert is_friendly(g, (u, v), w) == (w in common)
