import itertools
import random

import pytest

from rainbowlab import graph6
from rainbowlab.census import (
    generate_graphs,
    lemma_pairs_extract,
    random_dense_triangle_free,
    verify_gamma,
    verify_moon,
    verify_pairs,
    verify_perturbation,
)
from rainbowlab.graph import Graph, complete_bipartite, cycle_graph, turan_graph
from rainbowlab.isomorphism import are_isomorphic
from rainbowlab.packing import enumerate_triangles


def _labelled_classes(n):
    reps = []
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if not any(g.edge_count == h.edge_count and are_isomorphic(g, h) for h in reps):
            reps.append(g)
    return len(reps)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_generated_classes_match_labelled_dedupe(n):
    assert len(list(generate_graphs(n))) == _labelled_classes(n)


def test_known_class_counts():
    assert [len(list(generate_graphs(n))) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]


def test_generated_classes_pairwise_distinct():
    gs = list(generate_graphs(5))
    for a, b in itertools.combinations(gs, 2):
        assert not are_isomorphic(a, b)


def test_moon_small_extremal_graphs():
    res = verify_moon(5)
    assert res.passed
    top = [x for x in res.extremal if x["n"] == 5]
    assert top and all(x["t"] == 0 and x["edges"] == 6 and x["isomorphic"] for x in top)
    assert are_isomorphic(graph6.decode(top[0]["graph6"]), complete_bipartite(2, 3))


def test_moon_census_to_seven():
    res = verify_moon(7)
    assert res.passed and res.examined > 0
    at7 = [x for x in res.extremal if x["n"] == 7]
    assert [(x["t"], x["edges"]) for x in at7] == [(0, 12)]
    assert are_isomorphic(graph6.decode(at7[0]["graph6"]), complete_bipartite(3, 4))


def test_gamma_census_to_seven():
    res = verify_gamma(7)
    assert res.passed
    found = {graph6.encode(graph6.decode(x["graph6"])) for x in res.extremal if x["n"] == 7}
    assert any(are_isomorphic(graph6.decode(g), complete_bipartite(2, 5)) for g in found)
    assert any(are_isomorphic(graph6.decode(g), complete_bipartite(3, 4)) for g in found)
    assert all(x["isomorphic"] for x in res.extremal)


def test_gamma_examples():
    # C_7 is triangle-free with matching number 3: 7 edges against h(n-h)=12
    assert enumerate_triangles(cycle_graph(7)) == []
    res = verify_gamma(3)
    assert res.passed


def test_perturbation_at_t1():
    res = verify_perturbation(9, 1)
    assert res.passed and res.examined == 12


def test_census_result_json_shape():
    d = verify_perturbation(9, 1).to_dict()
    assert d["passed"] and d["violations"] == [] and d["examined"] == 12


def _without_perfect_matching(n):
    g = turan_graph(n, 2)
    h = n // 2
    for i in range(h):
        g = g.without_edge(i, h + i)
    return g


@pytest.mark.parametrize(
    "g, edges",
    [(turan_graph(60, 2), 900), (_without_perfect_matching(60), 870), (complete_bipartite(25, 35), 875)],
)
def test_pairs_examples(g, edges):
    assert g.edge_count == edges
    ext = lemma_pairs_extract(g, 0)
    assert ext.ok, ext.counterexamples
    assert len(ext.X) >= 28 and len(ext.S) <= 7 and len(ext.X_prime) >= 21


def test_pairs_max_degree_side():
    ext = lemma_pairs_extract(complete_bipartite(25, 35), 0)
    # vertices of the 25-side have degree 35, so u is there and X is the 35-side
    assert ext.u < 25 and len(ext.X) == 35 and ext.S == []


def test_pairs_rejects_preconditions():
    with pytest.raises(ValueError):
        lemma_pairs_extract(turan_graph(40, 2), 0)
    with pytest.raises(ValueError):
        lemma_pairs_extract(complete_bipartite(10, 50), 0)
    with pytest.raises(ValueError):
        lemma_pairs_extract(turan_graph(60, 2).with_edge(0, 1), 0)
    with pytest.raises(ValueError):
        lemma_pairs_extract(turan_graph(60, 2), -1)


def test_random_dense_triangle_free_instances():
    rng = random.Random(5)
    for _ in range(20):
        g = random_dense_triangle_free(60, rng)
        assert enumerate_triangles(g) == []
        assert g.edge_count >= 900 - 30


def test_pairs_suite_small():
    res = verify_pairs(count=100, seed=3)
    assert res.passed and res.examined == 100
