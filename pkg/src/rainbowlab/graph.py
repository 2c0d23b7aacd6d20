"""Simple undirected graphs on {0..n-1}, generators and closed-form counts.

Adjacency is stored as one bitmask per vertex; instances are immutable and
hashable, so they can be shared freely between workers or used as dict keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not self.rows[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def __len__(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def with_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex v renamed to perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep), ((index[u], index[v]) for u, v in self.edges() if u in index and v in index)
        )

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts occupy contiguous label blocks in the given order."""
    sizes = list(sizes)
    part_of: list[int] = []
    for p, size in enumerate(sizes):
        part_of.extend([p] * size)
    n = len(part_of)
    return Graph.from_edges(
        n, ((u, v) for u, v in itertools.combinations(range(n), 2) if part_of[u] != part_of[v])
    )


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def turan_part_sizes(n: int, p: int) -> list[int]:
    """Part sizes of T_p(n), largest first."""
    if p < 1:
        raise ValueError("the Turan graph needs p >= 1 parts")
    q, rem = divmod(n, p)
    return [q + 1] * rem + [q] * (p - rem)


def turan_graph(n: int, p: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    if p < 1:
        raise ValueError("the Turan graph needs p >= 1 parts")
    if n > 0 and p > n:
        raise ValueError(f"cannot split {n} vertices into {p} non-empty parts")
    return complete_multipartite(turan_part_sizes(n, p))


def turan_edges(n: int, p: int) -> int:
    """Number of edges of T_p(n), exact integer arithmetic."""
    if p < 1:
        raise ValueError("the Turan graph needs p >= 1 parts")
    sizes = turan_part_sizes(n, p)
    return (n * n - sum(s * s for s in sizes)) // 2


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every g-h edge; g keeps labels 0..|g|-1."""
    shift = g.n
    h_mask = ((1 << h.n) - 1) << shift
    g_mask = (1 << g.n) - 1
    rows = [row | h_mask for row in g.rows] + [(row << shift) | g_mask for row in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def clique_join_turan(n: int, t: int) -> Graph:
    """K_t joined with T_2(n - t): the extremal graph without t+1 disjoint triangles."""
    _check_t(n, t)
    rest = n - t
    return join(complete_graph(t), turan_graph(rest, 2) if rest >= 2 else Graph.empty(rest))


def moon_ex(n: int, t: int) -> int:
    """C(t,2) + t(n-t) + floor((n-t)^2 / 4)."""
    _check_t(n, t)
    return comb(t, 2) + t * (n - t) + (n - t) ** 2 // 4


@dataclass(frozen=True)
class FormulaValue:
    value: int
    in_proven_range: bool


def ar_formula(n: int, t: int) -> FormulaValue:
    """Closed-form anti-Ramsey value for (t+2) disjoint triangles.

    The value is returned for every 0 <= t <= n; ``in_proven_range`` tells
    whether n >= 15t + 57, where the formula is a theorem.
    """
    return FormulaValue(moon_ex(n, t) + 2, n >= 15 * t + 57)


def _check_t(n: int, t: int) -> None:
    if t < 0 or n < 0:
        raise ValueError("n and t must be non-negative")
    if t > n:
        raise ValueError(f"t={t} exceeds n={n}")
