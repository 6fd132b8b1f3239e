"""Bit-exact graph6 reading and writing."""

from __future__ import annotations

from .graph import Graph

HEADER = b">>graph6<<"
MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= MAX_N:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 cannot encode {n} vertices")


def _decode_n(data: bytes, start: int) -> tuple[int, int]:
    if start >= len(data):
        raise Graph6Error("missing length prefix", start)
    first = data[start]
    if first < 63 or first > 126:
        raise Graph6Error(f"invalid length byte {first!r}", start)
    if first != 126:
        return first - 63, start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        raise Graph6Error("graphs beyond 258047 vertices are not supported", start + 1)
    if start + 4 > len(data):
        raise Graph6Error("truncated long length prefix", len(data))
    n = 0
    for i in range(start + 1, start + 4):
        b = data[i]
        if b < 63 or b > 126:
            raise Graph6Error(f"invalid length byte {b!r}", i)
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise Graph6Error("long length prefix used for n <= 62", start)
    return n, start + 4


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header, optional
    trailing newline)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    pos = len(HEADER) if data.startswith(HEADER) else 0
    n, pos = _decode_n(data, pos)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(f"expected {nbytes} edge bytes, found {len(data) - pos}", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after edge data", pos + nbytes)

    adj = [0] * n
    i, j = 0, 1
    for offset in range(pos, pos + nbytes):
        byte = data[offset]
        if byte < 63 or byte > 126:
            raise Graph6Error(f"invalid edge byte {byte!r}", offset)
        value = byte - 63
        for shift in range(5, -1, -1):
            if j >= n:
                if (value >> shift) & 1:
                    raise Graph6Error("nonzero padding bit", offset)
                continue
            if (value >> shift) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, adj)


def write_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding, without header or newline."""
    n = g.n
    out = bytearray(_encode_n(n))
    adj = g.adj
    value = 0
    filled = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            value = (value << 1) | ((row >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(value + 63)
                value = filled = 0
    if filled:
        out.append((value << (6 - filled)) + 63)
    return bytes(out)


def read_graph6_lines(lines):
    """Yield ``(line_number, graph6_text, Graph | Graph6Error)`` for each
    non-blank line of an iterable of bytes or str lines."""
    for number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        text = line.decode("ascii", "replace") if isinstance(line, bytes) else line
        try:
            yield number, text, parse_graph6(line)
        except Graph6Error as exc:
            yield number, text, exc
