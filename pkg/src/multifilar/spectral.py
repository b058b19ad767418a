"""Adjacency spectra and exponential-eigenvalue statistics.

Eigenvalues are computed with a Householder reduction to tridiagonal form
followed by the implicit-shift QL iteration.  The matrices are small and
dense (n <= 62), so both stages are written directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure
from .graph_core import Graph

MAX_QL_ITERATIONS = 50


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a real symmetric matrix.

    Returns ``(diag, offdiag)`` of a tridiagonal matrix similar to ``a``;
    ``offdiag[i]`` couples rows ``i`` and ``i+1``.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    off = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = a[k + 1:, k]
        norm = math.sqrt(float(x @ x))
        if norm == 0.0:
            continue
        alpha = -norm if x[0] >= 0 else norm
        v = x.copy()
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            off[k] = x[0]
            continue
        v /= vnorm
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = p - float(v @ p) * v
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
        off[k] = alpha
    if n >= 2:
        off[n - 2] = a[n - 1, n - 2]
    return np.diag(a).copy(), off


def tridiagonal_eigenvalues(diag, offdiag, max_iter: int = MAX_QL_ITERATIONS) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit QL with Wilkinson-type shifts."""
    d = [float(x) for x in diag]
    n = len(d)
    e = [float(x) for x in offdiag] + [0.0]
    eps = np.finfo(float).eps
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                raise ConvergenceFailure(f"QL iteration did not converge for eigenvalue {l}")
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(d)


def symmetric_eigenvalues(a: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, sorted in decreasing order."""
    diag, off = tridiagonalize(a)
    return np.sort(tridiagonal_eigenvalues(diag, off))[::-1]


def eigenvalues(g: Graph) -> np.ndarray:
    return symmetric_eigenvalues(g.adjacency(dtype=float))


def inverse_iteration(a: np.ndarray, lam: float, steps: int = 3, seed: int = 0) -> np.ndarray:
    """Unit eigenvector estimate for eigenvalue ``lam`` (residual spot checks only)."""
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    shift = lam + 1e-10 * max(1.0, abs(lam))
    m = a - shift * np.eye(n)
    for _ in range(steps):
        v = np.linalg.solve(m, v)
        v /= np.linalg.norm(v)
    return v


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: np.ndarray
    power_sums: tuple[float, ...]
    mu: float
    sigma_biased: float
    sigma_unbiased: float
    d: int

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def power_sum(self, k: int) -> float:
        """``sum(lambda_i ** k)``; ``k`` counts from 1."""
        return self.power_sums[k - 1]

    def sigma(self, convention: str = "unbiased") -> float:
        if convention == "unbiased":
            return self.sigma_unbiased
        if convention == "biased":
            return self.sigma_biased
        raise ValueError(f"unknown variance convention {convention!r}")


def summarize_eigenvalues(lam: np.ndarray, d: int, max_power: int = 4) -> SpectralSummary:
    lam = np.asarray(lam, dtype=float)
    n = len(lam)
    x = np.exp(lam / d)
    mu = float(x.mean())
    ss = float(((x - mu) ** 2).sum())
    sums = tuple(float((lam ** k).sum()) for k in range(1, max_power + 1))
    return SpectralSummary(
        eigenvalues=lam,
        power_sums=sums,
        mu=mu,
        sigma_biased=ss / n,
        sigma_unbiased=ss / (n - 1),
        d=d,
    )


def summarize(g: Graph, max_power: int = 4) -> SpectralSummary:
    return summarize_eigenvalues(eigenvalues(g), g.d, max_power)
