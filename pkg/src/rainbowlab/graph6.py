"""graph6 short form (n <= 62).

Layout: one byte n+63, then the upper triangle read column by column
((0,1), (0,2), (1,2), (0,3), ...), packed big-endian into 6-bit groups,
zero padded, each group offset by 63.
"""

from __future__ import annotations

from .graph import Graph

MAX_SHORT_N = 62


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> bytes:
    if g.n > MAX_SHORT_N:
        raise Graph6Error(f"short graph6 form holds at most {MAX_SHORT_N} vertices, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(value + 63)
    return bytes(out)


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error("graph6 bytes must lie in 63..126")
    n = data[0] - 63
    if n > MAX_SHORT_N:
        raise Graph6Error("long-form graph6 headers are not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(f"graph6 for n={n} needs {expected} bytes, got {len(data)}")
    bits = []
    for b in data[1:]:
        value = b - 63
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
