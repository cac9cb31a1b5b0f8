"""graph6 and edge-list codecs."""

from __future__ import annotations

from .graph import Graph, GraphError, build

GRAPH6_MAX_N = 62


class DecodeError(ValueError):
    """Malformed input; ``position`` is a byte offset (graph6) or line number (edge list)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at {position})")
        self.position = position


def encode_graph6(G: Graph) -> bytes:
    if G.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 encoding here supports n <= {GRAPH6_MAX_N}")
    bits = [G.has_edge(i, j) for j in range(1, G.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    out = bytearray([G.n + 63])
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = (group << 1) | b
        out.append(group + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if not data:
        raise DecodeError("empty graph6 string", 0)
    n = data[0] - 63
    if not 0 <= n <= GRAPH6_MAX_N:
        raise DecodeError(f"size byte {data[0]!r} outside the supported range", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise DecodeError(f"expected {expected} bytes for n={n}, got {len(data)}", min(len(data), expected))
    bits = []
    for pos in range(1, expected):
        group = data[pos] - 63
        if not 0 <= group < 64:
            raise DecodeError(f"byte {data[pos]!r} is not a graph6 character", pos)
        bits.extend((group >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise DecodeError("nonzero padding bits", expected - 1)
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build(n, edges)


def encode_edgelist(G: Graph) -> bytes:
    lines = [f"n {G.n}"] + [f"e {u} {v}" for u, v in G.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")


def decode_edgelist(data: bytes | str) -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii")
    n = None
    seen = set()
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise DecodeError("first line must be 'n <N>'", lineno)
            n = int(fields[1])
            continue
        if len(fields) != 3 or fields[0] != "e" or not (fields[1].isdigit() and fields[2].isdigit()):
            raise DecodeError(f"expected 'e <u> <v>', got {line!r}", lineno)
        u, v = int(fields[1]), int(fields[2])
        if u == v:
            raise DecodeError(f"self-loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise DecodeError(f"endpoint outside 0..{n - 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DecodeError(f"duplicate edge {key}", lineno)
        seen.add(key)
    if n is None:
        raise DecodeError("missing 'n <N>' header", 0)
    return build(n, seen)


def encode(G: Graph, fmt: str = "graph6") -> bytes:
    if fmt == "graph6":
        return encode_graph6(G)
    if fmt == "edgelist":
        return encode_edgelist(G)
    raise ValueError(f"unknown format {fmt!r}")


def decode(data: bytes | str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return decode_graph6(data)
    if fmt == "edgelist":
        return decode_edgelist(data)
    raise ValueError(f"unknown format {fmt!r}")


def sniff_decode(data: bytes | str) -> Graph:
    """Decode either format, choosing edge list when the text starts with 'n' or '#'."""
    text = data.decode("ascii") if isinstance(data, bytes) else data
    head = text.lstrip()
    if head.startswith(("n ", "n\t", "#")):
        return decode_edgelist(text)
    return decode_graph6(text)
