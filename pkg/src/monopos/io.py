"""graph6 and edge-list reading/writing.

graph6 follows the format shipped with nauty: a size header N(n) followed by
the upper triangle of the adjacency matrix in column-major order, six bits
per printable byte (value + 63), zero-padded.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import ParseError, ValidationError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        body.append(chr(v + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str, name: str | None = None) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", base + i)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = vals[1] << 12 | vals[2] << 6 | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        raise ParseError("truncated graph6 size header", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(vals) - pos}",
                         base + min(len(vals), pos + need))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need:
        pad = 6 * need - nbits
        if vals[-1] & ((1 << pad) - 1):
            raise ParseError("non-zero padding bits", base + len(vals) - 1)
    if n == 0:
        raise ValidationError("graph6 string encodes the empty graph")
    return Graph(n, adj, name)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, name: str | None = None) -> Graph:
    """First non-comment line is the order, then one ``u v`` pair per line."""
    n = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            parts = body.split()
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise ParseError(f"non-integer token in {body!r}", offset) from None
            if n is None:
                if len(nums) != 1 or nums[0] < 1:
                    raise ParseError("first line must be a positive vertex count", offset)
                n = nums[0]
            else:
                if len(nums) != 2:
                    raise ParseError(f"expected 'u v', got {body!r}", offset)
                edges.append((nums[0], nums[1]))
        offset += len(line.encode())
    if n is None:
        raise ParseError("missing vertex count", 0)
    return Graph.from_edges(n, edges, name)


def parse_graph(text: str, format: str = "graph6", name: str | None = None) -> Graph:
    if format == "graph6":
        return from_graph6(text, name)
    if format in ("edge-list", "edgelist", "edges"):
        return from_edge_list(text, name)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "graph6") -> str:
    if format == "graph6":
        return to_graph6(g)
    if format in ("edge-list", "edgelist", "edges"):
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph6_stream(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    """One graph per non-blank line, as produced by ``geng``."""
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line == HEADER:
            continue
        try:
            yield from_graph6(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc


def guess_format(text: str) -> str:
    first = text.lstrip().split("\n", 1)[0].strip()
    return "edge-list" if first.isdigit() or " " in first else "graph6"

