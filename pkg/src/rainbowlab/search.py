"""Exact anti-Ramsey numbers ar(n, kK3) for tiny n.

Colourings are enumerated as restricted-growth strings over the edges of
K_n, which quotients out colour permutations.  Edges are visited in colex
order ((0,1), (0,2), (1,2), (0,3), ...) so triangles close as early as
possible; every family of k disjoint triangles is checked at the moment
its last edge gets a colour, and the branch dies if that family is
rainbow.  Recolouring the remaining edges cannot undo a rainbow family,
so the pruning is exact.
"""

from __future__ import annotations

import functools
import itertools
import logging
import os
import struct
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from .coloring import EdgeColoring, build_lower_bound_coloring, edge_index, has_rainbow_packing
from .errors import ResourceExhausted
from .graph import ar_formula, moon_ex

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
CHECKPOINT_MAGIC = b"RBLC"
CHECKPOINT_VERSION = 1
_HEADER = struct.Struct("<4sHHHHHQHI")


def colex_edges(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


@functools.lru_cache(maxsize=32)
def triangle_systems(n: int, k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Families of k disjoint triangles, as colex edge positions, bucketed by their last edge."""
    pos = {e: i for i, e in enumerate(colex_edges(n))}
    tris = [
        (pos[(a, b)], pos[(a, c)], pos[(b, c)]) for a, b, c in itertools.combinations(range(n), 3)
    ]
    verts = list(itertools.combinations(range(n), 3))
    buckets: list[list[tuple[int, ...]]] = [[] for _ in pos]
    for family in itertools.combinations(range(len(tris)), k):
        used = [v for i in family for v in verts[i]]
        if len(set(used)) != len(used):
            continue
        edges = tuple(e for i in family for e in tris[i])
        buckets[max(edges)].append(edges)
    return tuple(tuple(b) for b in buckets)


class _Searcher:
    """DFS over restricted-growth strings with exactly r blocks."""

    def __init__(self, n: int, r: int, k: int, budget: int):
        self.n, self.r, self.k = n, r, k
        self.m = comb(n, 2)
        self.width = 3 * k
        self.systems = triangle_systems(n, k)
        self.budget = budget
        self.nodes = 0

    def _ok(self, colors: list[int], i: int) -> bool:
        width = self.width
        for system in self.systems[i]:
            if len({colors[e] for e in system}) == width:
                return False
        return True

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """Every consistent RGS prefix of the given length, lexicographically."""
        out: list[tuple[int, ...]] = []
        colors = [0] * self.m

        def go(i: int, blocks: int) -> None:
            if i == depth:
                out.append(tuple(colors[:depth]))
                return
            for b in range(min(blocks + 1, self.r)):
                nb = max(blocks, b + 1)
                if self.m - 1 - i < self.r - nb:
                    continue
                colors[i] = b
                if self._ok(colors, i):
                    go(i + 1, nb)

        go(0, 0)
        return out

    def run(self, prefix: tuple[int, ...] = ()) -> list[int] | None:
        m, r = self.m, self.r
        colors = [0] * m
        colors[: len(prefix)] = prefix
        blocks0 = max(prefix) + 1 if prefix else 0
        systems = self.systems
        width = self.width
        budget = self.budget

        def go(i: int, blocks: int) -> bool:
            if i == m:
                return blocks == r
            top = blocks + 1 if blocks < r else r
            left = m - 1 - i
            for b in range(top):
                nb = blocks + 1 if b == blocks else blocks
                if left < r - nb:
                    continue
                self.nodes += 1
                if self.nodes > budget:
                    raise ResourceExhausted("colouring search exceeded its node budget", self.nodes)
                colors[i] = b
                for system in systems[i]:
                    if len({colors[e] for e in system}) == width:
                        break
                else:
                    if go(i + 1, nb):
                        return True
            return False

        return colors if go(len(prefix), blocks0) else None


def iter_restricted_growth(m: int, r: int):
    """Every restricted-growth string of length m using exactly r blocks."""
    word = [0] * m

    def go(i: int, blocks: int):
        if i == m:
            if blocks == r:
                yield tuple(word)
            return
        for b in range(min(blocks + 1, r)):
            nb = max(blocks, b + 1)
            if m - 1 - i < r - nb:
                continue
            word[i] = b
            yield from go(i + 1, nb)

    if m == 0:
        if r == 0:
            yield ()
        return
    yield from go(0, 0)


def _coloring_from_rgs(n: int, rgs: list[int]) -> EdgeColoring:
    colors = [0] * comb(n, 2)
    for (u, v), c in zip(colex_edges(n), rgs):
        colors[edge_index(n, u, v)] = c
    return EdgeColoring.from_labels(n, colors)


def canonical_rgs(coloring: EdgeColoring) -> list[int]:
    """The colouring's restricted-growth string in colex edge order."""
    ids: dict[int, int] = {}
    return [ids.setdefault(coloring.color(u, v), len(ids)) for u, v in colex_edges(coloring.n)]


def _trivial_coloring(n: int, r: int) -> EdgeColoring:
    m = comb(n, 2)
    rgs = list(range(r - 1)) + [r - 1] * (m - r + 1)
    return _coloring_from_rgs(n, rgs)


# --- checkpoints -----------------------------------------------------------


@dataclass
class Checkpoint:
    n: int
    k: int
    r: int
    depth: int
    nodes: int
    absent_floor: int
    frontier: list[tuple[int, ...]]

    def dump(self, path: str | Path) -> None:
        body = bytearray(
            _HEADER.pack(
                CHECKPOINT_MAGIC, CHECKPOINT_VERSION, self.n, self.k, self.r, self.depth,
                self.nodes, self.absent_floor, len(self.frontier),
            )
        )
        for prefix in self.frontier:
            if len(prefix) != self.depth:
                raise ValueError("frontier prefixes must all have the split depth")
            body.extend(prefix)
        tmp = Path(str(path) + ".tmp")
        tmp.write_bytes(bytes(body))
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | Path) -> Checkpoint:
        data = Path(path).read_bytes()
        if len(data) < _HEADER.size:
            raise ValueError("checkpoint file is truncated")
        magic, version, n, k, r, depth, nodes, floor, count = _HEADER.unpack_from(data)
        if magic != CHECKPOINT_MAGIC:
            raise ValueError("not a rainbowlab checkpoint")
        if version != CHECKPOINT_VERSION:
            raise ValueError(f"unsupported checkpoint version {version}")
        body = data[_HEADER.size:]
        if len(body) != count * depth:
            raise ValueError("checkpoint frontier length does not match header")
        frontier = [tuple(body[i * depth:(i + 1) * depth]) for i in range(count)]
        return cls(n, k, r, depth, nodes, floor, frontier)


# --- public operations -----------------------------------------------------


def _run_prefix(args: tuple[int, int, int, int, tuple[int, ...]]) -> tuple[list[int] | None, int, bool]:
    n, r, k, budget, prefix = args
    s = _Searcher(n, r, k, budget)
    try:
        return s.run(prefix), s.nodes, False
    except ResourceExhausted:
        return None, s.nodes, True


@dataclass
class AvoidResult:
    coloring: EdgeColoring | None
    nodes: int


def exists_avoiding_coloring(
    n: int,
    r: int,
    k: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    split_depth: int | None = None,
    checkpoint: str | Path | None = None,
    hint: EdgeColoring | None = None,
    _floor: int = 0,
) -> AvoidResult:
    """Surjective r-colouring of K_n with no rainbow kK3, or None once the tree is exhausted.

    The returned witness is the lexicographically least restricted-growth
    string that avoids.  A ``hint`` that is verified to avoid short-circuits
    the search.  Raises ResourceExhausted when ``budget`` nodes are spent.
    """
    m = comb(n, 2)
    if not 1 <= r <= m:
        raise ValueError(f"r must lie in 1..{m}")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return AvoidResult(None, 0)
    if 3 * k > n or 3 * k > r:
        return AvoidResult(_trivial_coloring(n, r), 0)
    if hint is not None and hint.n == n and hint.r == r and has_rainbow_packing(hint, k) is None:
        return AvoidResult(hint, 0)

    searcher = _Searcher(n, r, k, budget)
    if split_depth is None:
        split_depth = min(m, 6) if (workers > 1 or checkpoint) else 0
    nodes = 0
    frontier: list[tuple[int, ...]]
    ckpt_path = Path(checkpoint) if checkpoint else None
    if ckpt_path and ckpt_path.exists():
        saved = Checkpoint.load(ckpt_path)
        if (saved.n, saved.k, saved.r) == (n, k, r):
            frontier, nodes, split_depth = list(saved.frontier), saved.nodes, saved.depth
            log.info("resuming n=%d r=%d k=%d with %d open subtrees", n, r, k, len(frontier))
        else:
            frontier = searcher.prefixes(split_depth)
    else:
        frontier = searcher.prefixes(split_depth)

    def save() -> None:
        if ckpt_path:
            Checkpoint(n, k, r, split_depth, nodes, _floor, frontier).dump(ckpt_path)

    save()
    if workers <= 1:
        while frontier:
            remaining = budget - nodes
            witness, used, exhausted = _run_prefix((n, r, k, remaining, frontier[0]))
            nodes += used
            if exhausted:
                save()
                raise ResourceExhausted(
                    f"search for r={r} exceeded {budget} nodes", nodes, partial=r
                )
            if witness is not None:
                return AvoidResult(_coloring_from_rgs(n, witness), nodes)
            frontier.pop(0)
            save()
        return AvoidResult(None, nodes)

    with ProcessPoolExecutor(max_workers=workers) as pool:
        while frontier:
            batch = frontier[: workers * 4]
            share = max(1, (budget - nodes) // len(batch))
            results = list(pool.map(_run_prefix, [(n, r, k, share, p) for p in batch]))
            for witness, used, _ in results:
                nodes += used
            # earliest prefix wins, so the witness does not depend on scheduling
            for (witness, _, exhausted) in results:
                if exhausted:
                    save()
                    raise ResourceExhausted(
                        f"search for r={r} exceeded {budget} nodes", nodes, partial=r
                    )
                if witness is not None:
                    return AvoidResult(_coloring_from_rgs(n, witness), nodes)
                frontier.pop(0)
            save()
    return AvoidResult(None, nodes)


@dataclass
class SearchReport:
    n: int
    k: int
    status: str
    ar: int | None
    lower: int
    upper: int
    witness: EdgeColoring | None
    nodes: int
    wall_time: float
    nodes_by_r: dict[int, int] = field(default_factory=dict)
    seeded: bool = False

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def to_dict(self) -> dict:
        t = self.k - 2
        formula = None
        if t >= 0 and t <= self.n:
            f = ar_formula(self.n, t)
            formula = {"t": t, "value": f.value, "in_proven_range": f.in_proven_range}
        return {
            "n": self.n,
            "k": self.k,
            "status": self.status,
            "ar": self.ar,
            "interval": [self.lower, self.upper],
            "witness": None
            if self.witness is None
            else {"r": self.witness.r, "colors": list(self.witness.colors)},
            "nodes": self.nodes,
            "nodes_by_r": {str(r): c for r, c in sorted(self.nodes_by_r.items(), reverse=True)},
            "wall_time": round(self.wall_time, 4),
            "seeded": self.seeded,
            "formula_reference": formula,
        }


def ar_exact(
    n: int,
    k: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    checkpoint: str | Path | None = None,
    use_seed: bool = True,
) -> SearchReport:
    """ar(n, kK3) by descending r from C(n,2) until an avoiding colouring shows up.

    Merging two colour classes never creates a rainbow family, so the
    first r that admits an avoiding colouring is the largest one and the
    answer is r + 1.  When the (t+2)K3 construction applies it is used as
    the witness at r = moon_ex(n, t) + 1 instead of searching there.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 3 * k:
        raise ValueError(f"kK3 does not fit in K_{n}; need n >= 3k")
    start = time.perf_counter()
    m = comb(n, 2)
    lower = 3 * k
    seed = None
    if use_seed and k >= 2 and n > 3 * (k - 2) + 6:
        seed = build_lower_bound_coloring(n, k - 2)
        lower = max(lower, moon_ex(n, k - 2) + 2)

    r_start, floor, total = m, 0, 0
    ckpt_path = Path(checkpoint) if checkpoint else None
    if ckpt_path and ckpt_path.exists():
        saved = Checkpoint.load(ckpt_path)
        if (saved.n, saved.k) == (n, k):
            r_start, floor = saved.r, saved.absent_floor
    upper = floor if floor else m + 1
    nodes_by_r: dict[int, int] = {}

    for r in range(r_start, 0, -1):
        if seed is not None and r == seed.r:
            return SearchReport(n, k, "exact", r + 1, r + 1, r + 1, seed, total,
                                time.perf_counter() - start, nodes_by_r, seeded=True)
        try:
            res = exists_avoiding_coloring(
                n, r, k, budget=budget - total, workers=workers, checkpoint=ckpt_path, _floor=floor
            )
        except ResourceExhausted as exc:
            nodes_by_r[r] = exc.nodes
            return SearchReport(n, k, "resource-exhausted", None, lower, upper, None,
                                total + exc.nodes, time.perf_counter() - start, nodes_by_r,
                                seeded=seed is not None)
        total += res.nodes
        nodes_by_r[r] = res.nodes
        if res.coloring is not None:
            if ckpt_path and ckpt_path.exists():
                ckpt_path.unlink()
            return SearchReport(n, k, "exact", r + 1, r + 1, r + 1, res.coloring, total,
                                time.perf_counter() - start, nodes_by_r)
        floor = upper = r
        if ckpt_path and r > 1:
            # depth-0 frontier: the next call rebuilds the split itself
            Checkpoint(n, k, r - 1, 0, 0, floor, [()]).dump(ckpt_path)
    raise AssertionError("a single colour always avoids a rainbow kK3")
