"""Exhaustive and randomised checks of the extremal facts the anti-Ramsey bound relies on.

* Moon: a graph with I3(G) = t and n > 9t/2 + 4 has at most moon_ex(n, t)
  edges, with equality only for K_t joined to T_2(n - t).
* Matching bound: a triangle-free graph with matching number h has at most
  h(n - h) edges, with equality only for K_{h, n-h}.
* Pairs extraction: a dense triangle-free graph contains a large independent
  set whose vertices have pairwise large degree sums.
"""

from __future__ import annotations

import functools
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import graph6
from .graph import Graph, clique_join_turan, complete_bipartite, moon_ex, turan_graph
from .isomorphism import are_isomorphic, canonical_form, canonical_graph
from .packing import (
    enumerate_triangles,
    has_k_disjoint_triangles,
    max_independent_triangles,
    max_independent_triangles_bruteforce,
    max_matching,
    max_matching_bruteforce,
)

MAX_EXHAUSTIVE_N = 7


def generate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of n-vertex graphs.

    Classes on n vertices are grown from the classes on n - 1 vertices by
    adding a vertex with every possible neighbourhood; an extension is kept
    only if its canonical form is new.  Output is ordered by edge count,
    then canonical code.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}")
    yield from _classes(n)


@functools.lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    seen: dict[tuple[int, int], Graph] = {}
    for g in _classes(n - 1):
        for nbhd in range(1 << g.n):
            rows = tuple(row | ((nbhd >> v & 1) << g.n) for v, row in enumerate(g.rows))
            ext = Graph(n, rows + (nbhd,))
            key = canonical_form(ext)
            if key not in seen:
                seen[key] = ext
    return tuple(canonical_graph(seen[key]) for key in sorted(seen, key=lambda k: (_edges_in(k), k)))


def _edges_in(key: tuple[int, int]) -> int:
    return key[1].bit_count()


@dataclass
class CensusResult:
    name: str
    params: dict
    examined: int = 0
    violations: list[dict] = field(default_factory=list)
    extremal: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "examined": self.examined,
            "passed": self.passed,
            "violations": sorted(self.violations, key=lambda v: v["graph6"]),
            "extremal": self.extremal,
        }


def _g6(g: Graph) -> str:
    return graph6.encode(g).decode("ascii")


def _graphs_for(n: int, samples: int, rng: random.Random) -> list[Graph]:
    if n <= MAX_EXHAUSTIVE_N:
        return list(generate_graphs(n))
    out = []
    for _ in range(samples):
        p = rng.random()
        out.append(Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]))
    return out


def _moon_one(g: Graph) -> tuple[int, int, list[str]]:
    problems = []
    packing = max_independent_triangles(g)
    t = len(packing)
    if g.n <= 9 and t != max_independent_triangles_bruteforce(g):
        problems.append("I3 solver disagrees with the brute-force oracle")
    return t, g.edge_count, problems


def verify_moon(n_max: int, samples: int = 200, seed: int = 0, workers: int = 1) -> CensusResult:
    """Check Moon's bound and its unique extremal graph for every n <= n_max.

    Exhaustive for n <= 7; above that ``samples`` random graphs per n.
    """
    rng = random.Random(seed)
    result = CensusResult("moon", {"n_max": n_max, "samples": samples, "seed": seed})
    for n in range(1, n_max + 1):
        graphs = _graphs_for(n, samples, rng)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                stats = list(pool.map(_moon_one, graphs, chunksize=32))
        else:
            stats = [_moon_one(g) for g in graphs]
        for g, (t, e, problems) in zip(graphs, stats):
            for p in problems:
                result.violations.append({"graph6": _g6(g), "n": n, "reason": p})
            if 2 * n <= 9 * t + 8:
                continue
            result.examined += 1
            bound = moon_ex(n, t)
            if e > bound:
                result.violations.append(
                    {"graph6": _g6(g), "n": n, "t": t, "reason": f"e={e} exceeds bound {bound}"}
                )
            elif e == bound:
                iso = are_isomorphic(g, clique_join_turan(n, t))
                result.extremal.append({"n": n, "t": t, "edges": e, "graph6": _g6(g), "isomorphic": iso})
                if not iso:
                    result.violations.append(
                        {"graph6": _g6(g), "n": n, "t": t,
                         "reason": "extremal graph is not K_t + T_2(n-t)"}
                    )
    return result


def verify_gamma(n_max: int, samples: int = 200, seed: int = 0) -> CensusResult:
    """Triangle-free graphs with matching number h have e <= h(n-h), equality only for K_{h,n-h}."""
    rng = random.Random(seed)
    result = CensusResult("gamma", {"n_max": n_max, "samples": samples, "seed": seed})
    for n in range(1, n_max + 1):
        for g in _graphs_for(n, samples, rng):
            if enumerate_triangles(g):
                continue
            result.examined += 1
            h = len(max_matching(g))
            if g.edge_count <= 40 and h != max_matching_bruteforce(g):
                result.violations.append(
                    {"graph6": _g6(g), "n": n, "reason": "matching solver disagrees with the oracle"}
                )
            e = g.edge_count
            if e > h * (n - h):
                result.violations.append(
                    {"graph6": _g6(g), "n": n, "h": h, "reason": f"e={e} exceeds h(n-h)={h * (n - h)}"}
                )
            elif e == h * (n - h):
                iso = are_isomorphic(g, complete_bipartite(h, n - h))
                result.extremal.append({"n": n, "h": h, "edges": e, "graph6": _g6(g), "isomorphic": iso})
                if not iso:
                    result.violations.append(
                        {"graph6": _g6(g), "n": n, "h": h, "reason": "equality without K_{h,n-h}"}
                    )
    return result


def verify_perturbation(n: int = 9, t: int = 1) -> CensusResult:
    """Every missing edge added to K_t + T_2(n-t) creates t+1 disjoint triangles."""
    base = clique_join_turan(n, t)
    result = CensusResult("perturbation", {"n": n, "t": t})
    for u, v in itertools.combinations(range(n), 2):
        if base.has_edge(u, v):
            continue
        result.examined += 1
        g = base.with_edge(u, v)
        if not has_k_disjoint_triangles(g, t + 1):
            result.violations.append(
                {"graph6": _g6(g), "edge": [u, v], "reason": f"no {t + 1} disjoint triangles"}
            )
    return result


# --- pairs extraction ------------------------------------------------------


@dataclass
class PairsExtraction:
    u: int
    X: list[int]
    S: list[int]
    X_prime: list[int]
    counterexamples: list[str]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def lemma_pairs_extract(g: Graph, t: int) -> PairsExtraction:
    """Pick a max-degree vertex u, take X = N(u), drop its low-degree vertices.

    Every comparison is done in integers (the thresholds are multiples of
    n/8), and each conclusion that fails is recorded as a counterexample.
    """
    n = g.n
    if t < 0:
        raise ValueError("t must be non-negative")
    if n < 12 * t + 54:
        raise ValueError(f"needs n >= 12t + 54 (n={n}, t={t})")
    e = g.edge_count
    if 4 * e < n * n - 2 * n - 24 * t - 44:
        raise ValueError(f"needs e(G) >= n^2/4 - n/2 - 6t - 11 (e={e})")
    if enumerate_triangles(g):
        raise ValueError("graph must be triangle-free")

    degs = g.degrees()
    top = max(degs)
    u = degs.index(top)
    X = g.neighbors(u)
    S = [v for v in X if 8 * degs[v] < 3 * n]
    X_prime = [v for v in X if 8 * degs[v] >= 3 * n]

    bad = []
    xmask = g.rows[u]
    if any(g.rows[v] & xmask for v in X):
        bad.append("X is not independent")
    if 2 * len(X) < n - 4:
        bad.append(f"|X|={len(X)} < n/2 - 2")
    if len(S) > 7:
        bad.append(f"|S|={len(S)} > 7")
    if 2 * len(X_prime) < n - 18:
        bad.append(f"|X'|={len(X_prime)} < n/2 - 9")
    for x, y in itertools.combinations(X_prime, 2):
        if 4 * (degs[x] + degs[y]) < 3 * n:
            bad.append(f"d({x})+d({y})={degs[x] + degs[y]} < 3n/4")
            break
    return PairsExtraction(u, X, S, X_prime, bad)


def random_dense_triangle_free(n: int, rng: random.Random, max_delete: int = 30) -> Graph:
    """T_2(n) minus up to ``max_delete`` random edges, randomly relabelled."""
    g = turan_graph(n, 2)
    edges = g.edges()
    drop = set(rng.sample(range(len(edges)), rng.randint(0, max_delete)))
    perm = list(range(n))
    rng.shuffle(perm)
    kept = [edges[i] for i in range(len(edges)) if i not in drop]
    return Graph.from_edges(n, ((perm[a], perm[b]) for a, b in kept))


def verify_pairs(count: int = 1000, n: int = 60, t: int = 0, seed: int = 0) -> CensusResult:
    rng = random.Random(seed)
    result = CensusResult("pairs", {"count": count, "n": n, "t": t, "seed": seed})
    while result.examined < count:
        g = random_dense_triangle_free(n, rng)
        if 4 * g.edge_count < n * n - 2 * n - 24 * t - 44:
            continue
        result.examined += 1
        ext = lemma_pairs_extract(g, t)
        for reason in ext.counterexamples:
            result.violations.append({"graph6": _g6(g), "reason": reason})
    return result
