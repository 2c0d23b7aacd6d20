"""Brute-force isomorphism and canonical forms for small graphs.

Both routines start from colour refinement (iterated degree signatures) and
then permute vertices only inside refined cells.  Good enough for the
n <= 10 graphs this package ever compares.
"""

from __future__ import annotations

import itertools

from .graph import Graph, iter_bits

MAX_ISO_VERTICES = 10


def refine_colors(g: Graph, initial: list[int] | None = None) -> list[int]:
    """Stable colouring from iterated neighbour-colour multisets.

    Colour ids are derived from sorted signatures only, so they are
    invariant under relabelling and comparable across graphs when the
    signatures are computed jointly (see ``_joint_refine``).
    """
    colors = list(initial) if initial is not None else [0] * g.n
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(g.rows[v]))))
            for v in range(g.n)
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _joint_refine(g: Graph, h: Graph) -> tuple[list[int], list[int]] | None:
    cg = [0] * g.n
    ch = [0] * h.n
    while True:
        sg = [(cg[v], tuple(sorted(cg[w] for w in iter_bits(g.rows[v])))) for v in range(g.n)]
        sh = [(ch[v], tuple(sorted(ch[w] for w in iter_bits(h.rows[v])))) for v in range(h.n)]
        if sorted(sg) != sorted(sh):
            return None
        index = {s: i for i, s in enumerate(sorted(set(sg)))}
        new_g = [index[s] for s in sg]
        new_h = [index[s] for s in sh]
        if len(index) == len(set(cg)):
            return new_g, new_h
        cg, ch = new_g, new_h


def are_isomorphic(g: Graph, h: Graph, max_vertices: int = MAX_ISO_VERTICES) -> bool:
    if g.n > max_vertices or h.n > max_vertices:
        raise ValueError(f"isomorphism test is limited to {max_vertices} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    joint = _joint_refine(g, h)
    if joint is None:
        return False
    cg, ch = joint

    order = sorted(range(g.n), key=lambda v: (cg[v], -g.degree(v), v))
    mapping: dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if used >> w & 1 or ch[w] != cg[v]:
                continue
            if any(g.has_edge(v, x) != h.has_edge(w, y) for x, y in mapping.items()):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    return extend(0)


def _adjacency_code(g: Graph, order: tuple[int, ...]) -> int:
    # upper triangle of the relabelled adjacency matrix, column-major
    code = 0
    for j in range(1, len(order)):
        row = g.rows[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: (n, maximal adjacency code over cell-respecting orders)."""
    colors = refine_colors(g)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    blocks = [cells[c] for c in sorted(cells)]
    best = -1
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = tuple(v for part in choice for v in part)
        code = _adjacency_code(g, order)
        if code > best:
            best = code
    return g.n, best


def canonical_graph(g: Graph) -> Graph:
    n, code = canonical_form(g)
    edges = []
    bit = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> bit & 1:
                edges.append((i, j))
            bit -= 1
    return Graph.from_edges(n, edges)
