"""graph6 and edge-list serialisation."""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        digits, rest = data[2:8], data[8:]
    else:
        digits, rest = data[1:4], data[4:]
    n = 0
    for c in digits:
        n = (n << 6) | (c - 63)
    return n, rest


def upper_bits(g: Graph) -> list[int]:
    """Upper-triangle adjacency bits in graph6 order (column by column)."""
    adj = g.masks
    return [adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]


def pack_bits(n: int, bits: list[int]) -> bytes:
    bits = list(bits) + [0] * (-len(bits) % 6)
    out = bytearray(_encode_n(n))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def to_graph6(g: Graph, header: bool = False) -> str:
    body = pack_bits(g.n, upper_bits(g)).decode("ascii")
    return GRAPH6_HEADER + body if header else body


def from_graph6(text) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise GraphError(f"invalid graph6 character in {data!r}")
    n, rest = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise GraphError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    bits = []
    for c in rest:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or len(parts) != 2:
                raise GraphError(f"line {lineno}: bad header {raw!r}")
            n = int(parts[1])
            continue
        if n is None:
            raise GraphError("edge list must start with 'n <count>'")
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("missing 'n <count>' header")
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either a graph6 string or an edge list."""
    stripped = text.strip()
    if stripped.startswith("n ") or "\n" in stripped:
        return from_edge_list(text)
    return from_graph6(stripped)
