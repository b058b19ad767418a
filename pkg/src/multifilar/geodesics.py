"""Length spectrum of a regular graph.

Three independent routes to the number of primitive closed geodesics:
traces of the non-backtracking edge matrix inverted over divisors, closed
formulas in the eigenvalue power sums, and explicit cycle enumeration.  All
counting is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InversionInconsistency, NonIntegral, OverflowGuard
from .graph_core import Graph
from .spectral import SpectralSummary

MAX_CUTOFF = 60
_INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True)
class NonBacktrackingMatrix:
    """Hashimoto matrix on the ``n*d`` directed edges."""

    arcs: tuple[tuple[int, int], ...]
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.arcs)


def nb_matrix(g: Graph) -> NonBacktrackingMatrix:
    arcs = tuple((u, v) for u in range(g.n) for v in g.neighbors[u])
    index = {a: i for i, a in enumerate(arcs)}
    b = np.zeros((len(arcs), len(arcs)), dtype=np.int64)
    for i, (u, v) in enumerate(arcs):
        for w in g.neighbors[v]:
            if w != u:
                b[i, index[(v, w)]] = 1
    return NonBacktrackingMatrix(arcs, b)


def _check_width(g: Graph, length: int) -> None:
    # tr(B^l) <= (#arcs) * q^(l-1), and every entry of B^l is at most q^(l-1)
    if g.n * g.d * max(g.q, 1) ** max(length - 1, 0) > _INT64_MAX:
        raise OverflowGuard(f"tr(B^{length}) may exceed 64-bit integers for n={g.n}, d={g.d}")


def nb_traces(g: Graph, max_length: int) -> list[int]:
    """``[tr(B^1), ..., tr(B^max_length)]`` in exact arithmetic."""
    _check_width(g, max_length)
    b = nb_matrix(g).matrix
    out = []
    p = b.copy()
    for length in range(1, max_length + 1):
        if length > 1:
            p = p @ b
        out.append(int(np.trace(p)))
    return out


def nb_trace(g: Graph, length: int) -> int:
    if length < 1:
        raise ValueError("length must be >= 1")
    return nb_traces(g, length)[-1]


@dataclass(frozen=True)
class GeodesicSpectrum:
    """Multiplicities ``m_l`` of unoriented primitive closed geodesics, 3 <= l <= cutoff."""

    multiplicities: dict[int, int]
    cutoff: int

    def __getitem__(self, length: int) -> int:
        if length < 3:
            return 0
        if length > self.cutoff:
            raise KeyError(f"length {length} beyond cutoff {self.cutoff}")
        return self.multiplicities[length]

    def girth(self) -> int | None:
        for length in range(3, self.cutoff + 1):
            if self.multiplicities[length]:
                return length
        return None

    def oriented_counts(self) -> dict[int, int]:
        return {k: 2 * v for k, v in self.multiplicities.items()}


def primitive_counts(traces: list[int]) -> list[int]:
    """Invert ``tr(B^l) = sum_{e | l} e * c_e`` for oriented primitive classes ``c_e``.

    ``traces[l-1]`` holds ``tr(B^l)``; the result is indexed the same way.
    """
    c = [0] * len(traces)
    for length in range(1, len(traces) + 1):
        rest = traces[length - 1] - sum(
            e * c[e - 1] for e in range(1, length) if length % e == 0
        )
        if rest % length:
            raise InversionInconsistency(f"length {length}: remainder {rest} not divisible")
        ce = rest // length
        if ce < 0 or ce % 2:
            raise InversionInconsistency(f"length {length}: oriented count {ce} is negative or odd")
        c[length - 1] = ce
    return c


def length_spectrum(g: Graph, cutoff: int) -> GeodesicSpectrum:
    if not 3 <= cutoff <= MAX_CUTOFF:
        raise ValueError(f"cutoff must lie in [3, {MAX_CUTOFF}]")
    c = primitive_counts(nb_traces(g, cutoff))
    return GeodesicSpectrum({k: c[k - 1] // 2 for k in range(3, cutoff + 1)}, cutoff)


class SpectralCounts(NamedTuple):
    m3: int
    m4: int
    residual: float


def multiplicities_from_spectrum(s: SpectralSummary, n: int | None = None, q: int | None = None,
                                 tol: float = 1e-6) -> SpectralCounts:
    """Triangle and quadrangle counts from the power sums ``p3`` and ``p4``."""
    n = s.n if n is None else n
    q = s.d - 1 if q is None else q
    raw3 = s.power_sum(3) / 6.0
    raw4 = (s.power_sum(4) - n * (q + 1) * (2 * q + 1)) / 8.0
    m3, m4 = round(raw3), round(raw4)
    residual = max(abs(raw3 - m3), abs(raw4 - m4))
    if residual > tol:
        raise NonIntegral(f"power-sum counts ({raw3}, {raw4}) are not integral")
    return SpectralCounts(int(m3), int(m4), residual)


def simple_cycles(g: Graph, length: int) -> set[tuple[int, ...]]:
    """All simple cycles of the given length, each in canonical rotation.

    The canonical representative starts at the smallest vertex and follows
    the direction in which the second vertex is the smaller neighbour.
    """
    found: set[tuple[int, ...]] = set()
    nb = g.neighbors
    path: list[int] = []
    on_path = [False] * g.n

    def extend(v: int) -> None:
        path.append(v)
        on_path[v] = True
        if len(path) == length:
            if path[0] in nb[v]:
                found.add(_canonical_rotation(path))
        else:
            for w in nb[v]:
                if not on_path[w]:
                    extend(w)
        on_path[v] = False
        path.pop()

    for s in range(g.n):
        extend(s)
    return found


def _canonical_rotation(cycle: list[int]) -> tuple[int, ...]:
    k = len(cycle)
    i = cycle.index(min(cycle))
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    bwd = tuple(cycle[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def count_short_cycles_bruteforce(g: Graph, length: int) -> int:
    if not 3 <= length <= 6:
        raise ValueError("brute-force cycle counting supports lengths 3..6")
    return len(simple_cycles(g, length))
