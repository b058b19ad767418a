"""graph6 short-form codec (n <= 62)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from ..errors import MalformedGraph6, UnsupportedLength
from .graph import Graph, validate

MAX_N = 62


def decode_neighbors(text: str) -> list[list[int]]:
    """Decode a graph6 line into neighbour lists without validating regularity."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise MalformedGraph6(f"character out of range in {s!r}")
    n = data[0]
    if n == 63:
        raise UnsupportedLength("graph6 long form (n > 62) is not supported")
    body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                nbrs[i].append(j)
                nbrs[j].append(i)
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("non-zero padding bits")
    return [sorted(nb) for nb in nbrs]


def graph6_decode(text: str, d: int | None = None) -> Graph:
    return validate(decode_neighbors(text), d)


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > MAX_N:
        raise UnsupportedLength(f"n={n} needs the graph6 long form")
    bits = []
    for j in range(1, n):
        nb = g.neighbors[j]
        bits.extend(1 if i in nb else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def read_graph6(path: str | Path, d: int | None = None) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                yield graph6_decode(line, d)


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
