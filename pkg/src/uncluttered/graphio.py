"""graph6 and edge-list codecs.

graph6 is the usual one-line ASCII encoding: a size header, then the upper
triangle of the adjacency matrix read column by column ((0,1), (0,2), (1,2),
(0,3), ...), packed six bits per byte MSB-first with zero padding, each byte
offset by 63.  Sizes up to 62 use the single-byte header; 63 and 64 use the
'~' + 3 byte long header.  Decoding is strict: padding bits must be zero, the
header form must be the canonical one for the size, and no bytes may trail,
so decode(encode(g)) and encode(decode(s)) are both identities.
"""

from __future__ import annotations

from .errors import InputError
from .graph import MAX_VERTICES, Graph


def to_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = [g.n + 63]
    else:
        head = [126, 63 + (g.n >> 12 & 63), 63 + (g.n >> 6 & 63), 63 + (g.n & 63)]
    bits = []
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            bits.append(col >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        byte = 0
        for b in bits[i:i + 6]:
            byte = byte << 1 | b
        body.append(byte + 63)
    return bytes(head + body).decode("ascii")


def from_graph6(line: str) -> Graph:
    s = line.rstrip("\n")
    if not s:
        raise InputError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for byte in data:
        if not 63 <= byte <= 126:
            raise InputError(f"graph6 byte {byte} out of printable range")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise InputError("unsupported graph6 size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise InputError("noncanonical graph6: long header for a small graph")
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise InputError(f"graph of {n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise InputError(f"graph6 body has {len(body)} bytes, expected {expect}")
    rows = [0] * n
    idx = 0
    for byte in body:
        group = byte - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if idx >= nbits:
                if bit:
                    raise InputError("noncanonical graph6: nonzero padding bits")
                continue
            if bit:
                u, v = _EDGE_ORDER_CACHE.setdefault(n, _edge_order(n))[idx]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph.from_rows(tuple(rows))


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


_EDGE_ORDER_CACHE: dict[int, list[tuple[int, int]]] = {}


def to_edge_list(g: Graph) -> str:
    """Multi-line text form: first line n, then one "u v" per edge."""
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    tokens = text.split()
    if not tokens:
        raise InputError("empty edge list")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"edge list is not whitespace-separated integers: {exc}") from None
    n = numbers[0]
    rest = numbers[1:]
    if len(rest) % 2:
        raise InputError("edge list has a dangling endpoint")
    edges = list(zip(rest[0::2], rest[1::2]))
    return Graph(n, edges)
