"""Edge colourings of K_n, the extremal avoiding construction and rainbow packing tests."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, clique_join_turan, moon_ex
from .packing import DEFAULT_NODE_BUDGET, DisjointPacker, Triple


def edge_index(n: int, u: int, v: int) -> int:
    """Position of {u, v} in the lexicographic list of K_n's edges."""
    if u > v:
        u, v = v, u
    if u == v or v >= n or u < 0:
        raise ValueError(f"({u}, {v}) is not an edge of K_{n}")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def all_edges(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


@dataclass(frozen=True)
class EdgeColoring:
    """Surjective colouring of K_n; ``colors[i]`` belongs to the i-th edge in lex order."""

    n: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.n * (self.n - 1) // 2
        if len(self.colors) != m:
            raise ValueError(f"K_{self.n} has {m} edges, got {len(self.colors)} colours")
        used = set(self.colors)
        if used and used != set(range(len(used))):
            raise ValueError("colour ids must be exactly 0..r-1 (every colour used)")

    @property
    def r(self) -> int:
        return len(set(self.colors))

    @classmethod
    def from_labels(cls, n: int, labels: Sequence) -> EdgeColoring:
        """Densify arbitrary labels to 0..r-1 by order of first appearance."""
        ids: dict = {}
        return cls(n, tuple(ids.setdefault(c, len(ids)) for c in labels))

    @classmethod
    def from_map(cls, n: int, color_of: dict[tuple[int, int], int]) -> EdgeColoring:
        colors = [None] * (n * (n - 1) // 2)
        for (u, v), c in color_of.items():
            colors[edge_index(n, u, v)] = c
        if any(c is None for c in colors):
            raise ValueError("colouring is not total")
        return cls(n, tuple(colors))

    def color(self, u: int, v: int) -> int:
        return self.colors[edge_index(self.n, u, v)]

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        return zip(all_edges(self.n), self.colors)

    def classes(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for e, c in self.items():
            out.setdefault(c, []).append(e)
        return out

    def merge(self, a: int, b: int) -> EdgeColoring:
        """Recolour class b into class a and renumber densely."""
        return EdgeColoring.from_labels(self.n, [a if c == b else c for c in self.colors])


def monochromatic(n: int) -> EdgeColoring:
    return EdgeColoring(n, (0,) * (n * (n - 1) // 2))


def all_distinct(n: int) -> EdgeColoring:
    return EdgeColoring(n, tuple(range(n * (n - 1) // 2)))


def build_lower_bound_coloring(n: int, t: int) -> EdgeColoring:
    """Rainbow-(t+2)K3-free colouring with moon_ex(n, t) + 1 colours.

    K_t on vertices 0..t-1 is joined to T_2(n-t) on the rest (larger part
    first).  Its edges get colours 1..moon_ex(n, t) in lex order; the pairs
    inside a Turan part all share colour 0.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if n <= 3 * t + 6:
        raise ValueError(f"construction needs n > 3t + 6 (got n={n}, t={t})")
    host = clique_join_turan(n, t)
    colors = []
    nxt = 1
    for u, v in all_edges(n):
        if host.has_edge(u, v):
            colors.append(nxt)
            nxt += 1
        else:
            colors.append(0)
    assert nxt - 1 == moon_ex(n, t)
    return EdgeColoring(n, tuple(colors))


@dataclass(frozen=True)
class RainbowWitness:
    packing: tuple[Triple, ...]
    colors: tuple[int, ...]

    def validate(self, coloring: EdgeColoring) -> bool:
        verts = [v for tri in self.packing for v in tri]
        if len(set(verts)) != len(verts):
            return False
        cols = [coloring.color(x, y) for a, b, c in self.packing for x, y in ((a, b), (a, c), (b, c))]
        return len(set(cols)) == len(cols) and sorted(cols) == sorted(self.colors)


def rainbow_triangles(coloring: EdgeColoring) -> list[tuple[Triple, tuple[int, int, int]]]:
    out = []
    col = coloring.color
    for a, b, c in itertools.combinations(range(coloring.n), 3):
        cs = (col(a, b), col(a, c), col(b, c))
        if cs[0] != cs[1] and cs[0] != cs[2] and cs[1] != cs[2]:
            out.append(((a, b, c), cs))
    return out


def has_rainbow_packing(
    coloring: EdgeColoring, k: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> RainbowWitness | None:
    """Lexicographically least k vertex-disjoint triangles with 3k distinct colours, if any."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return RainbowWitness((), ())
    if 3 * k > coloring.n or 3 * k > coloring.r:
        return None
    tris = rainbow_triangles(coloring)
    items = [(("v", a), ("v", b), ("v", c), ("c", x), ("c", y), ("c", z)) for (a, b, c), (x, y, z) in tris]
    found = DisjointPacker(items, node_budget).find(k)
    if found is None:
        return None
    return RainbowWitness(
        tuple(tris[i][0] for i in found), tuple(c for i in found for c in tris[i][1])
    )


def extract_rainbow_subgraph(coloring: EdgeColoring) -> Graph:
    """One edge per colour class, the lexicographically least edge of each."""
    first: dict[int, tuple[int, int]] = {}
    for e, c in coloring.items():
        first.setdefault(c, e)
    return Graph.from_edges(coloring.n, first.values())


def color_multiset(coloring: EdgeColoring, edges: Iterable[tuple[int, int]]) -> Counter:
    """Colours appearing on ``edges`` with multiplicities; ``set(result)`` is c(Q)."""
    return Counter(coloring.color(u, v) for u, v in edges)


# --- text format: "n r" header, then "u v colour" per edge in lex order ---


def format_coloring(coloring: EdgeColoring) -> str:
    lines = [f"{coloring.n} {coloring.r}"]
    lines += [f"{u} {v} {c}" for (u, v), c in coloring.items()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("coloring file must start with a 'n r' header")
    n, r = int(rows[0][0]), int(rows[0][1])
    color_of = {}
    for row in rows[1:]:
        if len(row) != 3:
            raise ValueError(f"bad coloring line: {' '.join(row)!r}")
        u, v, c = map(int, row)
        key = (min(u, v), max(u, v))
        if key in color_of:
            raise ValueError(f"edge {key} coloured twice")
        color_of[key] = c
    coloring = EdgeColoring.from_map(n, color_of)
    if coloring.r != r:
        raise ValueError(f"header declares {r} colours but {coloring.r} are used")
    return coloring


def write_coloring(coloring: EdgeColoring, path: str | Path) -> None:
    Path(path).write_text(format_coloring(coloring))


def read_coloring(path: str | Path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())
