"""graph6 encoding and decoding.

Standard format: a size prefix followed by the upper triangle of the
adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
packed six bits per byte, big-endian, each byte offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import FormatError, ParameterError
from .graph import Graph

HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    if not 1 <= g.n <= 62:
        raise ParameterError(f"graph6 short form supports 1 <= n <= 62, got n={g.n}")
    bits = [1 if g.has_edge(i + 1, j + 1) else 0
            for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise FormatError("empty graph6 string")
    data = []
    for ch in text:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise FormatError(f"invalid graph6 character {ch!r}")
        data.append(val)

    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        raise FormatError("unsupported graph6 size prefix")
    if n == 0:
        raise FormatError("graph6 string encodes the empty graph; n >= 1 required")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(rest) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, got {len(rest)}")
    bits = []
    for val in rest:
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph.from_edges(n, edges)


def read_file(path: str | Path) -> list[Graph]:
    """Read one graph per nonblank line."""
    lines = Path(path).read_text(encoding="ascii").splitlines()
    return [decode(line) for line in lines if line.strip()]


def write_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    Path(path).write_text("".join(encode(g) + "\n" for g in graphs), encoding="ascii")
