"""Matchings, triangle packings and the neighbourhood predicates built on them."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

from .errors import ResourceExhausted
from .graph import Graph, iter_bits

Triple = tuple[int, int, int]
Edge = tuple[int, int]

DEFAULT_NODE_BUDGET = 10_000_000


def enumerate_triangles(g: Graph) -> list[Triple]:
    """All vertex triples spanning a triangle, lexicographically ordered."""
    out = []
    for a in range(g.n):
        higher = g.rows[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            for c in iter_bits(higher & g.rows[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def common_neighborhood(g: Graph, x: int, y: int) -> set[int]:
    if x == y:
        raise ValueError("common neighbourhood needs two distinct vertices")
    return set(iter_bits(g.rows[x] & g.rows[y]))


def is_friendly(g: Graph, edge: Edge, w: int) -> bool:
    """True when w is adjacent to both ends of the edge."""
    u, v = edge
    if w in (u, v):
        raise ValueError("the vertex must not be an endpoint of the edge")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return g.has_edge(u, w) and g.has_edge(v, w)


# --- matchings -------------------------------------------------------------


def max_matching(g: Graph) -> set[Edge]:
    """Maximum cardinality matching via Edmonds' blossom algorithm.

    Augmenting paths are grown by BFS from each exposed vertex; odd cycles
    are shrunk by pointing every vertex of the blossom at a common base.
    """
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n

    def find_augmenting(root: int) -> bool:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending at `to`
                        x = to
                        while x != -1:
                            px = parent[x]
                            nxt = match[px]
                            match[x] = px
                            match[px] = x
                            x = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return {(v, match[v]) for v in range(n) if match[v] > v}


def max_matching_bruteforce(g: Graph, max_edges: int = 40) -> int:
    """Matching number by include/exclude branching over the edge list."""
    edges = g.edges()
    if len(edges) > max_edges:
        raise ValueError(f"brute-force matching is limited to {max_edges} edges")
    best = 0

    def go(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == len(edges) or size + (len(edges) - i) <= best:
            return
        free = g.n - used.bit_count()
        if size + free // 2 <= best:
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            go(i + 1, used | 1 << u | 1 << v, size + 1)
        go(i + 1, used, size)

    go(0, 0, 0)
    return best


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


# --- disjoint packings -----------------------------------------------------


class DisjointPacker:
    """Exact search for families of pairwise resource-disjoint items.

    Each item is a tuple of hashable resources (vertices, colours, ...).
    Items are tried in the order given, so the first family found is the
    lexicographically least one in that order.  Pruning uses a greedy
    hitting set of the remaining candidates: k disjoint items need k
    distinct hitting elements.
    """

    def __init__(self, items: Sequence[tuple], node_budget: int = DEFAULT_NODE_BUDGET):
        self.items = list(items)
        self.node_budget = node_budget
        self.nodes = 0
        index: dict = {}
        for i, item in enumerate(self.items):
            for res in item:
                index[res] = index.get(res, 0) | 1 << i
        self._by_resource = index
        self._conflicts_cache: dict[int, int] = {}

    def _conflicts(self, i: int) -> int:
        mask = self._conflicts_cache.get(i)
        if mask is None:
            mask = 0
            for res in self.items[i]:
                mask |= self._by_resource[res]
            if len(self._conflicts_cache) < 8192:
                self._conflicts_cache[i] = mask
        return mask

    def hitting_bound(self, cand: int, cap: int) -> int:
        """Size of a greedy hitting set for ``cand``, or ``cap`` once that is exceeded."""
        size = 0
        while cand:
            if size >= cap:
                return cap
            best_res, best_cover = None, 0
            for res, mask in self._by_resource.items():
                cover = (cand & mask).bit_count()
                if cover > best_cover:
                    best_res, best_cover = res, cover
            cand &= ~self._by_resource[best_res]
            size += 1
        return size

    def _tick(self, best: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise ResourceExhausted(
                f"packing search exceeded {self.node_budget} nodes", self.nodes, partial=list(best)
            )

    def find(self, k: int) -> list[int] | None:
        """Indices of k pairwise disjoint items, or None when none exist."""
        if k <= 0:
            return []
        chosen: list[int] = []

        def go(cand: int, need: int) -> bool:
            self._tick(chosen)
            if need == 0:
                return True
            if cand.bit_count() < need:
                return False
            if need > 1 and self.hitting_bound(cand, need) < need:
                return False
            while cand:
                if cand.bit_count() < need:
                    return False
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                chosen.append(i)
                if go(cand & ~self._conflicts(i), need - 1):
                    return True
                chosen.pop()
            return False

        full = (1 << len(self.items)) - 1
        return list(chosen) if go(full, k) else None

    def maximum(self) -> list[int]:
        """Indices of a maximum disjoint family (lexicographically least among maxima)."""
        best: list[int] = []
        chosen: list[int] = []

        def go(cand: int) -> None:
            nonlocal best
            self._tick(best)
            if len(chosen) > len(best):
                best = list(chosen)
            if not cand:
                return
            room = len(best) - len(chosen)
            if cand.bit_count() <= room:
                return
            if self.hitting_bound(cand, room + 1) <= room:
                return
            while cand:
                room = len(best) - len(chosen)
                if cand.bit_count() <= room:
                    return
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                chosen.append(i)
                go(cand & ~self._conflicts(i))
                chosen.pop()

        go((1 << len(self.items)) - 1)
        return best


def max_independent_triangles(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> list[Triple]:
    """A maximum family of vertex-disjoint triangles.

    Raises ResourceExhausted rather than returning an uncertified packing.
    """
    triangles = enumerate_triangles(g)
    packer = DisjointPacker(triangles, node_budget)
    return [triangles[i] for i in packer.maximum()]


def has_k_disjoint_triangles(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    if 3 * k > g.n:
        return False
    triangles = enumerate_triangles(g)
    return DisjointPacker(triangles, node_budget).find(k) is not None


def i3(g: Graph) -> int:
    return len(max_independent_triangles(g))


def max_independent_triangles_bruteforce(g: Graph) -> int:
    """I3 by trying every family of triangles, largest first (tiny graphs only)."""
    triangles = enumerate_triangles(g)
    for size in range(min(g.n // 3, len(triangles)), 0, -1):
        for family in itertools.combinations(triangles, size):
            verts = [v for tri in family for v in tri]
            if len(set(verts)) == len(verts):
                return size
    return 0


def is_triangle_packing(g: Graph, triples: Iterable[Triple]) -> bool:
    seen: set[int] = set()
    for a, b, c in triples:
        if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
            return False
        if seen & {a, b, c} or len({a, b, c}) != 3:
            return False
        seen.update((a, b, c))
    return True
