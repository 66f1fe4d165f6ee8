"""graph6 codec for the Graph type.

One graph per text line.  A line is the vertex count (one byte for
n <= 62, a '~' prefixed three-byte form above that) followed by the
upper triangle of the adjacency matrix in colexicographic pair order,
packed six bits per printable byte (offset 63).  The optional
'>>graph6<<' header is tolerated and stripped.  Encoding is canonical:
shortest count form, zero padding bits, no header.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"

# Error codes, one per distinguishable malformation.
BAD_BYTE = "bad_byte"
BAD_LENGTH = "bad_length"
TRAILING = "trailing_data"
TOO_LARGE = "too_large"
ZERO_VERTICES = "zero_vertices"


class Graph6Error(ValueError):
    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


def _body_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def decode(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error(BAD_LENGTH, "empty graph6 line")
    data = []
    for ch in text:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise Graph6Error(BAD_BYTE, f"byte {ord(ch)} outside the printable graph6 range")
        data.append(value)

    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            # The eight-byte count form only starts at n = 258048.
            raise Graph6Error(TOO_LARGE, f"vertex count beyond the cap {MAX_VERTICES}")
        if len(data) < 4:
            raise Graph6Error(BAD_LENGTH, "truncated vertex count")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]

    if n == 0:
        raise Graph6Error(ZERO_VERTICES, "zero-vertex graphs are not representable")
    if n > MAX_VERTICES:
        raise Graph6Error(TOO_LARGE, f"vertex count {n} beyond the cap {MAX_VERTICES}")
    need = _body_len(n)
    if len(body) < need:
        raise Graph6Error(BAD_LENGTH, f"adjacency data truncated: {len(body)} of {need} bytes")
    if len(body) > need:
        raise Graph6Error(TRAILING, f"{len(body) - need} trailing bytes after adjacency data")

    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> 5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))


def encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    chunks = [0] * _body_len(n)
    k = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            if (row >> u) & 1:
                chunks[k // 6] |= 1 << 5 - k % 6
            k += 1
    return "".join(chr(c) for c in head) + "".join(chr(c + 63) for c in chunks)


def iter_stream(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Decode a stream, yielding (line number, Graph or the parse error).

    Blank lines are skipped; malformed lines surface as Graph6Error
    values so callers can report and continue.
    """
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, decode(line)
        except Graph6Error as err:
            yield lineno, err
