"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual individualisation-refinement tree: refine the
colouring to an equitable one, pick the first non-singleton cell, and branch
on every vertex of that cell.  Children whose refined colouring has a smaller
cell-size signature than their best sibling are cut (the signature is
isomorphism invariant, so this does not break canonicity).  The canonical form
is the largest adjacency code over the surviving leaves.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from typing import Sequence

from .graph import Graph


def refine(neighbors: Sequence[Sequence[int]], colors: Sequence[int]) -> list[int]:
    """Colour refinement to the coarsest equitable colouring finer than ``colors``.

    Colours are re-ranked by sorted signature after every round, so the output
    is equivariant: relabelling the input relabels the output identically.
    """
    cur = list(colors)
    ncolors = len(set(cur))
    while True:
        sigs = [(cur[v], tuple(sorted(cur[w] for w in nb))) for v, nb in enumerate(neighbors)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [rank[s] for s in sigs]
        k = len(rank)
        if k == ncolors:
            return nxt
        cur, ncolors = nxt, k


def _individualize(colors: Sequence[int], v: int) -> list[int]:
    c = colors[v]
    key = [2 * x + (1 if x == c and w != v else 0) for w, x in enumerate(colors)]
    rank = {s: i for i, s in enumerate(sorted(set(key)))}
    return [rank[s] for s in key]


def _signature(colors: Sequence[int]) -> tuple[int, ...]:
    sizes = [0] * (max(colors) + 1)
    for c in colors:
        sizes[c] += 1
    return tuple(sizes)


def _code(neighbors: Sequence[Sequence[int]], perm: Sequence[int]) -> bytes:
    n = len(neighbors)
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    bits = 0
    for i in range(n):
        nb = neighbors[inv[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (inv[j] in nb)
    nbits = n * (n - 1) // 2
    return n.to_bytes(2, "big") + bits.to_bytes((nbits + 7) // 8, "big")


def canonical_labeling(neighbors: Sequence[Sequence[int]]) -> tuple[bytes, list[int]]:
    """Return ``(code, perm)`` with ``perm[v]`` the canonical label of ``v``."""
    nbsets = [frozenset(nb) for nb in neighbors]
    n = len(neighbors)
    start = refine(neighbors, [len(nb) for nb in neighbors])
    best: list = [None, None]

    def visit(colors: list[int]) -> None:
        if len(set(colors)) == n:
            code = _code(nbsets, colors)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, list(colors)
            return
        counts = _signature(colors)
        target = next(c for c, size in enumerate(counts) if size > 1)
        children = []
        for v in range(n):
            if colors[v] == target:
                child = refine(neighbors, _individualize(colors, v))
                children.append((_signature(child), child))
        top = max(sig for sig, _ in children)
        for sig, child in children:
            if sig == top:
                visit(child)

    visit(start)
    return best[0], best[1]


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return _canonical_cached(g.neighbors)


@lru_cache(maxsize=65536)
def _canonical_cached(neighbors: tuple[tuple[int, ...], ...]) -> bytes:
    return canonical_labeling(neighbors)[0]


def canonical_graph(g: Graph) -> Graph:
    _, perm = canonical_labeling(g.neighbors)
    return g.relabel(perm)


def graph_id(g: Graph) -> str:
    """Short stable identifier: hex SHA-256 prefix of the canonical form."""
    return hashlib.sha256(canonical_form(g)).hexdigest()[:16]
