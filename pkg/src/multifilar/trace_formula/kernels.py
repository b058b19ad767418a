"""The integral term J(t) and the geodesic kernels F_l(t).

``J(t)`` is the moment generating function of the Kesten-McKay density of a
(q+1)-regular tree.  Substituting ``s = 2 sqrt(q) cos(theta)`` removes the
square-root endpoint singularity; the integrand in ``theta`` is analytic, so
fixed-order Gauss-Legendre converges geometrically.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from ..errors import DomainError
from .bessel import MAX_ORDER, bessel_I

QUADRATURE_TOL = 1e-13
_KERNEL_STOP = 1e-18


@lru_cache(maxsize=None)
def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    # map [-1, 1] -> [0, pi]
    return 0.5 * math.pi * (x + 1.0), 0.5 * math.pi * w


def _j_integrand(theta: np.ndarray, t: float, q: int) -> np.ndarray:
    root = 2.0 * math.sqrt(q)
    c = np.cos(theta)
    s2 = np.sin(theta) ** 2
    return np.exp(root * t * c) * (root * root * s2) / ((q + 1) ** 2 - root * root * c * c)


@lru_cache(maxsize=4096)
def kesten_integral_J(t: float, q: int = 2) -> float:
    """``(q+1)/(2 pi) * int_{-2 sqrt q}^{2 sqrt q} e^{st} sqrt(4q - s^2) / ((q+1)^2 - s^2) ds``."""
    if q < 2 or int(q) != q:
        raise DomainError(f"q must be an integer >= 2, got {q}")
    if abs(t) > 2.0:
        raise DomainError(f"|t| must be <= 2, got {t}")
    prev = None
    order = 16
    while order <= 4096:
        x, w = _gauss_legendre(order)
        val = (q + 1) / (2.0 * math.pi) * float(w @ _j_integrand(x, t, q))
        if prev is not None and abs(val - prev) <= QUADRATURE_TOL:
            return val
        prev = val
        order *= 2
    raise DomainError(f"J({t}) quadrature failed to converge")  # pragma: no cover


@lru_cache(maxsize=65536)
def geodesic_kernel_F(length: int, t: float, q: int = 2) -> float:
    """``F_l(t) = sum_{k>=1} I_{kl}(2 sqrt(q) t) / q^(kl/2)``."""
    if length < 3 or int(length) != length:
        raise DomainError(f"geodesic length must be an integer >= 3, got {length}")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    z = 2.0 * math.sqrt(q) * t
    total = 0.0
    k = 1
    while k * length <= MAX_ORDER:
        order = k * length
        term = bessel_I(order, z) / q ** (order / 2.0)
        total += term
        if term < _KERNEL_STOP:
            break
        k += 1
    return total


def kernel_bound(length: int, t: float, q: int) -> float:
    """Rigorous upper bound on ``F_l(t)`` for 0 <= t < l + 1.

    Uses ``I_m(z) <= (z/2)^m / m! * exp((z/2)^2 / (m+1))``.
    """
    if t == 0.0:
        return 0.0
    lead = math.exp(length * math.log(t) - math.lgamma(length + 1))
    return math.exp(q * t * t / (length + 1)) * lead / (1.0 - t / (length + 1))


def tail_bound(cutoff: int, t: float, q: int) -> float:
    """Bound on ``(2/n) sum_{l > cutoff} l m_l F_l(t)`` valid for every (q+1)-regular graph.

    With ``m_l <= n (q+1) q^(l-1) / (2l)`` the summand is at most
    ``(q+1) q^(l-1) F_l(t)``; the ratio of consecutive bounds is below
    ``q t / (l+1)``, which closes the sum geometrically.
    """
    if t == 0.0:
        return 0.0
    d = q + 1
    total = 0.0
    length = cutoff + 1
    while True:
        term = d * q ** (length - 1) * kernel_bound(length, t, q)
        ratio = q * t / (length + 1)
        if ratio < 0.5:
            return total + term / (1.0 - ratio)
        total += term
        length += 1
