import itertools
import random
from collections import Counter

import pytest

from rainbowlab.coloring import (
    EdgeColoring,
    all_distinct,
    build_lower_bound_coloring,
    color_multiset,
    edge_index,
    extract_rainbow_subgraph,
    format_coloring,
    has_rainbow_packing,
    monochromatic,
    parse_coloring,
    read_coloring,
    write_coloring,
)
from rainbowlab.graph import ar_formula, clique_join_turan, complete_graph, moon_ex


def rainbow_bruteforce(coloring: EdgeColoring, k: int) -> bool:
    """Every k-family of disjoint triangles of K_n, tested for 3k distinct colours."""
    tris = list(itertools.combinations(range(coloring.n), 3))
    for family in itertools.combinations(tris, k):
        verts = [v for t in family for v in t]
        if len(set(verts)) != len(verts):
            continue
        cols = [coloring.color(x, y) for t in family for x, y in itertools.combinations(t, 2)]
        if len(set(cols)) == len(cols):
            return True
    return False


def random_coloring(n: int, r: int, rng: random.Random) -> EdgeColoring:
    m = n * (n - 1) // 2
    labels = list(range(r)) + [rng.randrange(r) for _ in range(m - r)]
    rng.shuffle(labels)
    return EdgeColoring.from_labels(n, labels)


def test_edge_index_is_lexicographic():
    n = 7
    assert [edge_index(n, u, v) for u, v in itertools.combinations(range(n), 2)] == list(range(21))
    assert edge_index(n, 3, 1) == edge_index(n, 1, 3)
    with pytest.raises(ValueError):
        edge_index(n, 2, 2)


def test_coloring_must_be_surjective_and_total():
    with pytest.raises(ValueError):
        EdgeColoring(3, (0, 2, 2))
    with pytest.raises(ValueError):
        EdgeColoring(3, (0, 1))
    assert EdgeColoring.from_labels(3, ["a", "b", "a"]).colors == (0, 1, 0)


@pytest.mark.parametrize("n, t, colors", [(10, 0, 26), (10, 1, 30), (20, 1, 110), (30, 3, 267)])
def test_construction_color_counts(n, t, colors):
    c = build_lower_bound_coloring(n, t)
    assert c.r == colors == moon_ex(n, t) + 1 == ar_formula(n, t).value - 1


def test_construction_zero_class_is_intra_part_pairs():
    c = build_lower_bound_coloring(10, 0)
    zero = c.classes()[0]
    assert len(zero) == 20
    assert all((u < 5) == (v < 5) for u, v in zero)


def test_construction_distinct_colours_in_lex_order():
    n, t = 13, 2
    c = build_lower_bound_coloring(n, t)
    host = clique_join_turan(n, t)
    assert [c.color(u, v) for u, v in host.edges()] == list(range(1, moon_ex(n, t) + 1))


@pytest.mark.parametrize("n, t", [(9, 1), (6, 0), (12, 2)])
def test_construction_rejects_small_n(n, t):
    with pytest.raises(ValueError):
        build_lower_bound_coloring(n, t)


def test_construction_avoids_t_plus_2_and_contains_t_plus_1():
    for t in range(0, 2):
        for n in range(3 * t + 7, 13):
            c = build_lower_bound_coloring(n, t)
            assert sorted(set(c.colors)) == list(range(moon_ex(n, t) + 1))
            assert has_rainbow_packing(c, t + 2) is None
            w = has_rainbow_packing(c, t + 1)
            assert w is not None and w.validate(c)
            if n <= 9:
                assert rainbow_bruteforce(c, t + 1) and not rainbow_bruteforce(c, t + 2)


def test_rainbow_examples():
    w = has_rainbow_packing(all_distinct(9), 3)
    assert w is not None and w.validate(all_distinct(9))
    assert w.packing == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    assert has_rainbow_packing(monochromatic(9), 1) is None
    assert has_rainbow_packing(build_lower_bound_coloring(20, 1), 3) is None
    assert has_rainbow_packing(monochromatic(4), 0) is not None


def test_rainbow_search_agrees_with_bruteforce():
    rng = random.Random(21)
    for _ in range(120):
        n = rng.randint(3, 9)
        m = n * (n - 1) // 2
        c = random_coloring(n, rng.randint(1, m), rng)
        for k in range(1, n // 3 + 1):
            w = has_rainbow_packing(c, k)
            assert (w is not None) == rainbow_bruteforce(c, k)
            if w is not None:
                assert w.validate(c) and len(w.packing) == k


def test_rainbow_witness_is_lexicographically_least():
    rng = random.Random(22)
    for _ in range(30):
        c = random_coloring(7, 15, rng)
        w = has_rainbow_packing(c, 2)
        if w is None:
            continue
        tris = list(itertools.combinations(range(7), 3))
        for fam in itertools.combinations(tris, 2):
            if set(fam[0]) & set(fam[1]):
                continue
            cols = [c.color(x, y) for t in fam for x, y in itertools.combinations(t, 2)]
            if len(set(cols)) == 6:
                assert fam == w.packing
                break


def test_extract_rainbow_subgraph_examples():
    assert extract_rainbow_subgraph(all_distinct(5)) == complete_graph(5)
    g = extract_rainbow_subgraph(monochromatic(5))
    assert g.edges() == [(0, 1)]
    for n, t in [(10, 0), (11, 1), (13, 2)]:
        g = extract_rainbow_subgraph(build_lower_bound_coloring(n, t))
        assert g == clique_join_turan(n, t).with_edge(t, t + 1)


def test_extract_rainbow_subgraph_is_rainbow_with_r_edges():
    rng = random.Random(23)
    for _ in range(50):
        n = rng.randint(2, 9)
        c = random_coloring(n, rng.randint(1, n * (n - 1) // 2), rng)
        g = extract_rainbow_subgraph(c)
        assert g.edge_count == c.r
        assert len({c.color(u, v) for u, v in g.edges()}) == c.r


def test_color_multiset_examples():
    mono = monochromatic(5)
    assert color_multiset(mono, [(0, 1), (0, 2), (1, 2)]) == Counter({0: 3})
    assert color_multiset(mono, []) == Counter()
    n, t = 11, 1
    c = build_lower_bound_coloring(n, t)
    counts = color_multiset(c, clique_join_turan(n, t).edges())
    assert set(counts) == set(range(1, moon_ex(n, t) + 1))
    assert set(counts.values()) == {1}


def test_text_format_round_trip(tmp_path):
    c = build_lower_bound_coloring(10, 1)
    text = format_coloring(c)
    lines = text.splitlines()
    assert lines[0] == "10 30" and lines[1] == "0 1 1" and len(lines) == 46
    assert parse_coloring(text) == c
    path = tmp_path / "c.txt"
    write_coloring(c, path)
    assert read_coloring(path) == c


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1 0\n0 2 1\n", "3 2\n0 1 0\n0 2 1\n1 2 5\n", "3 1\n0 1 0\n1 0 0\n1 2 0\n",
     "3 2\n0 1 0\n0 2 0\n1 2 0\n"],
)
def test_text_format_rejects_bad_files(text):
    with pytest.raises(ValueError):
        parse_coloring(text)
