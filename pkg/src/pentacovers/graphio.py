"""graph6 and sparse6 encoders/decoders (standard nauty formats)."""
from __future__ import annotations

from pathlib import Path

from .graph import Graph


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise ValueError("empty graph string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        chunk = data[2:8]
        if len(chunk) < 6:
            raise ValueError("truncated size header")
        n = 0
        for c in chunk:
            n = (n << 6) | (c - 63)
        return n, data[8:]
    chunk = data[1:4]
    if len(chunk) < 3:
        raise ValueError("truncated size header")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, data[4:]


def _pack(bits: list[int]) -> bytes:
    bits = bits + [0] * (-len(bits) % 6)
    out = bytearray()
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def _unpack(data: bytes) -> list[int]:
    bits = []
    for c in data:
        v = c - 63
        if not 0 <= v < 64:
            raise ValueError(f"invalid byte {c!r} in graph string")
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    return bits


def to_graph6(g: Graph) -> bytes:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    return _encode_n(g.n) + _pack(bits)


def from_graph6(line: bytes | str) -> Graph:
    data = line.encode() if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, rest = _decode_n(data)
    need = n * (n - 1) // 2
    bits = _unpack(rest)
    if len(bits) < need or len(rest) != (need + 5) // 6:
        raise ValueError("graph6 body has the wrong length")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _width(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def to_sparse6(g: Graph) -> bytes:
    n = g.n
    k = _width(n)

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    bits: list[int] = []
    cur = 0
    for v, u in sorted((max(a, b), min(a, b)) for a, b in g.edges()):
        if v == cur:
            bits += [0] + enc(u)
        elif v == cur + 1:
            cur = v
            bits += [1] + enc(u)
        else:
            cur = v
            bits += [1] + enc(v) + [0] + enc(u)
    pad = -len(bits) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        bits.append(0)
        pad = -len(bits) % 6
    bits += [1] * pad
    return b":" + _encode_n(n) + _pack(bits)


def from_sparse6(line: bytes | str) -> Graph:
    data = line.encode() if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(b">>sparse6<<"):
        data = data[11:]
    if not data.startswith(b":"):
        raise ValueError("sparse6 strings start with ':'")
    n, rest = _decode_n(data[1:])
    k = _width(n)
    bits = _unpack(rest)
    edges = set()
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in bits[i + 1:i + 1 + k]:
            x = (x << 1) | t
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise ValueError("loops are not supported")
            edges.add((x, v))
    return Graph.from_edges(n, sorted(edges))


def parse_graph(line: bytes | str) -> Graph:
    data = line.encode() if isinstance(line, str) else line
    data = data.strip()
    if data.startswith(b":") or data.startswith(b">>sparse6<<"):
        return from_sparse6(data)
    return from_graph6(data)


def read_graph(path: str | Path) -> Graph:
    lines = [ln for ln in Path(path).read_bytes().splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ValueError(f"{path}: expected exactly one graph, found {len(lines)}")
    return parse_graph(lines[0])


def write_graph(g: Graph, path: str | Path, fmt: str = "graph6") -> bytes:
    if fmt == "graph6":
        data = to_graph6(g)
    elif fmt == "sparse6":
        data = to_sparse6(g)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    Path(path).write_bytes(data + b"\n")
    return data
