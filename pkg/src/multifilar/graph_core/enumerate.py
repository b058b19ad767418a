"""Orderly generation of connected d-regular graphs.

Graphs are built row by row on their upper-triangular adjacency code.  The
code of a labelling is the sequence of rows, row ``i`` being the bit string
of adjacencies ``(i, j)`` for ``j > i`` (most significant bit = smallest
``j``).  Among all labellings of a connected graph the lexicographically
largest code is always produced by a breadth-first labelling in which the
not-yet-labelled neighbours of the vertex being processed receive the next
consecutive labels.  The generator therefore only emits breadth-first codes,
and after each row it rejects the partial structure if some other
breadth-first relabelling, computable from the fully determined vertices
alone, already yields a larger prefix.  At the last row this test is the full
canonicity test, so every isomorphism class is emitted exactly once.
"""

from __future__ import annotations

import logging
from itertools import combinations, permutations
from typing import Iterator

from ..errors import InfeasibleParameters, SizeLimitExceeded
from .canonical import canonical_form
from .graph import Graph, GraphFamily, Provenance, validate

log = logging.getLogger(__name__)

# (d, largest n allowed without the long-run flag, largest n allowed with it)
DESK_LIMITS = {3: (14, 16)}
DEFAULT_LIMITS = (10, 12)


def check_parameters(n: int, d: int, allow_long_runs: bool = False) -> None:
    if d < 1 or n < d + 1 or (n * d) % 2:
        raise InfeasibleParameters(f"no connected {d}-regular graph on {n} vertices")
    short, long_ = DESK_LIMITS.get(d, DEFAULT_LIMITS)
    if n > long_ or (n > short and not allow_long_runs):
        hint = "" if n > long_ else " (pass allow_long_runs=True)"
        raise SizeLimitExceeded(f"n={n}, d={d} is beyond the desk-scale limit{hint}")


class _Orderly:
    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.rows = [0] * n
        self.m = 1
        self.nodes = 0
        # bit for column j
        self.bit = [1 << (n - 1 - j) for j in range(n)]
        # scratch for the canonicity search
        self._lab = [-1] * n
        self._inv = [0] * n

    def run(self) -> Iterator[list[list[int]]]:
        yield from self._extend(0)

    def _extend(self, k: int) -> Iterator[list[list[int]]]:
        n, d, adj = self.n, self.d, self.adj
        if k == n:
            yield [sorted(nb) for nb in adj]
            return
        m = self.m
        if k >= m:
            return  # breadth-first queue ran dry: disconnected
        need = d - len(adj[k])
        cands = [j for j in range(k + 1, m) if len(adj[j]) < d]
        # larger rows first keeps output order stable and finds the
        # canonical code early
        for s in range(min(need, len(cands)), -1, -1):
            c = need - s
            if m + c > n:
                continue
            for chosen in combinations(cands, s):
                new = list(range(m, m + c))
                row = 0
                for j in chosen:
                    row |= self.bit[j]
                for j in new:
                    row |= self.bit[j]
                for j in chosen:
                    adj[k].append(j)
                    adj[j].append(k)
                for j in new:
                    adj[k].append(j)
                    adj[j].append(k)
                self.rows[k] = row
                self.m = m + c
                self.nodes += 1
                if self._feasible(k) and self._semicanonical(k):
                    yield from self._extend(k + 1)
                for j in new:
                    adj[j].pop()
                for j in chosen:
                    adj[j].pop()
                del adj[k][len(adj[k]) - need:]
                self.m = m

    def _feasible(self, k: int) -> bool:
        n, d, adj, m = self.n, self.d, self.adj, self.m
        if m == k + 1 and m < n:
            return False
        # remaining degree sequence on vertices > k must be graphical
        rest = n - k - 1
        deficits = [d - len(adj[j]) for j in range(k + 1, m)]
        deficits.extend([d] * (n - m))
        total = sum(deficits)
        if total % 2:
            return False
        if any(x > rest - 1 for x in deficits):
            return False
        deficits.sort(reverse=True)
        # Erdos-Gallai
        prefix = 0
        for r in range(1, len(deficits) + 1):
            prefix += deficits[r - 1]
            tail = sum(min(x, r) for x in deficits[r:])
            if prefix > r * (r - 1) + tail:
                return False
        return True

    def _semicanonical(self, k: int) -> bool:
        lab = self._lab
        for r in range(k + 1):
            for i in range(self.n):
                lab[i] = -1
            lab[r] = 0
            self._inv[0] = r
            if self._search(0, 1, k) > 0:
                return False
        return True

    def _search(self, j: int, mm: int, k: int) -> int:
        """Return 1 if some completion of the relabelling beats the code."""
        if j > k:
            return 0
        u = self._inv[j]
        if u > k:
            return 0
        lab, bit = self._lab, self.bit
        row = 0
        fresh = []
        for w in self.adj[u]:
            lw = lab[w]
            if lw < 0:
                fresh.append(w)
            elif lw > j:
                row |= bit[lw]
        for i in range(len(fresh)):
            row |= bit[mm + i]
        cur = self.rows[j]
        if row != cur:
            return 1 if row > cur else -1
        if not fresh:
            return self._search(j + 1, mm, k)
        inv = self._inv
        for order in permutations(fresh):
            for i, w in enumerate(order):
                lab[w] = mm + i
                inv[mm + i] = w
            res = self._search(j + 1, mm + len(order), k)
            if res > 0:
                for w in fresh:
                    lab[w] = -1
                return 1
        for w in fresh:
            lab[w] = -1
        return 0


def generate_regular(n: int, d: int) -> Iterator[list[list[int]]]:
    """Yield neighbour lists of the canonical representatives, unsorted."""
    yield from _Orderly(n, d).run()


def enumerate_regular(n: int, d: int = 3, allow_long_runs: bool = False) -> GraphFamily:
    """All connected d-regular graphs on n vertices, one per isomorphism class.

    Members are sorted by :func:`canonical_form`.
    """
    check_parameters(n, d, allow_long_runs)
    graphs = [validate(nb, d) for nb in generate_regular(n, d)]
    graphs.sort(key=canonical_form)
    log.info("enumerated %d connected %d-regular graphs on %d vertices", len(graphs), d, n)
    return GraphFamily(d=d, n=n, graphs=tuple(graphs), provenance=Provenance.ENUMERATED)
