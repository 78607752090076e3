"""graph6 and edge-list text formats.

graph6 follows the standard sparse-graph ASCII encoding without a header
line: N(n) then the upper triangle of the adjacency matrix in column-major
order, six bits per printable byte (offset 63). The edge-list format is a
first line ``n m`` followed by m lines ``u v`` with 0-based indices.
Duplicate edges collapse silently; loops are errors.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import Graph

_HEADER = ">>graph6<<"


def _decode_number(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise FormatError("empty graph6 payload")
    c = data[pos]
    if c == 126:
        if pos + 3 >= len(data):
            raise FormatError("truncated graph6 long-form order")
        if data[pos + 1] == 126:
            raise FormatError("graph6 orders above 258047 are not supported")
        n = 0
        for b in data[pos + 1:pos + 4]:
            if not 63 <= b <= 126:
                raise FormatError(f"invalid graph6 byte {b}")
            n = (n << 6) | (b - 63)
        return n, pos + 4
    if not 63 <= c <= 125:
        raise FormatError(f"invalid graph6 order byte {c}")
    return c - 63, pos + 1


def _encode_number(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    n, pos = _decode_number(data, 0)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for b in body:
        if not 63 <= b <= 126:
            raise FormatError(f"invalid graph6 byte {b}")
        x = b - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits in graph6 body")
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return Graph(n, edges)


def serialize_graph6(G: Graph) -> bytes:
    out = bytearray(_encode_number(G.n))
    bits = []
    for col in range(1, G.n):
        for row in range(col):
            bits.append(1 if G.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(x + 63)
    return bytes(out)


def graph6_str(G: Graph) -> str:
    return serialize_graph6(G).decode("ascii")


def parse_edgelist(text: bytes | str) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"malformed header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"malformed header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"malformed edge line {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) index out of range for n={n}")
        if u == v:
            raise FormatError(f"loop edge at vertex {u}")
        edges.append((u, v))
    return Graph(n, edges)


def serialize_edgelist(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: bytes | str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_graph(G: Graph, fmt: str) -> bytes:
    if fmt == "graph6":
        return serialize_graph6(G)
    if fmt == "edgelist":
        return serialize_edgelist(G).encode("ascii")
    raise ValueError(f"unknown format {fmt!r}")


def sniff_and_parse(text: bytes | str) -> Graph:
    """Parse either supported format: a leading 'n m' integer pair means
    edge list, anything else is treated as graph6."""
    if isinstance(text, bytes):
        probe = text.decode("ascii", errors="replace")
    else:
        probe = text
    first = next((ln for ln in probe.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.isdigit() for p in parts):
        return parse_edgelist(probe)
    return parse_graph6(probe)
