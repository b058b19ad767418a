"""Closed-form geometry of the filar structure in the (mean, variance) plane.

A graph with multiplicities ``m_l`` sits at
``x = J(t1) + (2/n) sum l m_l F_l(t1)`` and, to first order in the kernels,
``y = J(t2) - J(t1)^2 + (2/n) sum l m_l G_l`` with ``t1 = 1/d``, ``t2 = 2/d``
and ``G_l = F_l(t2) - 2 J(t1) F_l(t1)``.  Varying ``m_l`` alone moves the
point along a line of slope ``G_l / F_l(t1)``; graphs sharing
``m_3..m_level`` therefore line up with the slope of the next length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from ..errors import DomainError
from ..geodesics import GeodesicSpectrum
from .kernels import geodesic_kernel_F, kesten_integral_J


@dataclass(frozen=True)
class FilarModel:
    q: int
    n: int

    @property
    def d(self) -> int:
        return self.q + 1

    @property
    def t1(self) -> float:
        return 1.0 / self.d

    @property
    def t2(self) -> float:
        return 2.0 / self.d

    def J(self, t: float) -> float:
        return kesten_integral_J(t, self.q)

    def F(self, length: int, t: float) -> float:
        return geodesic_kernel_F(length, t, self.q)

    @property
    def base_point(self) -> tuple[float, float]:
        j1 = self.J(self.t1)
        return j1, self.J(self.t2) - j1 * j1

    def variance_weight(self, length: int) -> float:
        """``F_l(t2) - 2 J(t1) F_l(t1)``: first-order variance shift per unit of ``l m_l`` (times n/2)."""
        return self.F(length, self.t2) - 2.0 * self.J(self.t1) * self.F(length, self.t1)

    def variation_slope(self, length: int) -> float:
        """Slope traced out when only ``m_length`` varies."""
        return self.F(length, self.t2) / self.F(length, self.t1) - 2.0 * self.J(self.t1)

    @property
    def top_slope(self) -> float:
        return self.variation_slope(3)

    def slope(self, level: int) -> float:
        """Slope of the clusters sharing ``m_3..m_level`` (level 3: filars, 4: subfilars)."""
        _check_level(level)
        return self.variation_slope(level + 1)

    def anchor_shift(self, length: int) -> tuple[float, float]:
        """Displacement of the point per unit increase of ``m_length``."""
        c = 2.0 * length / self.n
        return c * self.F(length, self.t1), c * self.variance_weight(length)

    def anchor(self, counts: Mapping[int, int]) -> tuple[float, float]:
        x, y = self.base_point
        for length, m in counts.items():
            if length >= 3 and m:
                dx, dy = self.anchor_shift(length)
                x += m * dx
                y += m * dy
        return x, y

    def spacing(self, level: int) -> float:
        """Horizontal gap between neighbouring level-``level`` clusters.

        Neighbours differ by one in ``m_level``; the gap is measured along a
        horizontal line after projecting along the slope of the clusters.
        """
        _check_level(level)
        ell = level
        ratio = self.variance_weight(ell) / self.variance_weight(ell + 1)
        return 2.0 * ell / self.n * (self.F(ell, self.t1) - self.F(ell + 1, self.t1) * ratio)


def _check_level(level: int) -> None:
    if level < 3:
        raise DomainError(f"filar level must be >= 3, got {level}")


class FilarGeometry(NamedTuple):
    q: int
    level: int
    n: int
    base_point: tuple[float, float]
    slope: float
    anchor_shift: tuple[float, float]
    spacing: float


def filar_geometry(q: int, level: int, n: int) -> FilarGeometry:
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if n < q + 2:
        raise DomainError(f"n={n} too small for degree {q + 1}")
    model = FilarModel(q, n)
    return FilarGeometry(
        q=q,
        level=level,
        n=n,
        base_point=model.base_point,
        slope=model.slope(level),
        anchor_shift=model.anchor_shift(level),
        spacing=model.spacing(level),
    )


class PredictedPoint(NamedTuple):
    mu: float
    sigma_exact: float
    sigma_approx: float


def predict_point(spectrum: GeodesicSpectrum | Mapping[int, int], n: int, q: int = 2,
                  cutoff: int | None = None) -> PredictedPoint:
    """Predicted mean and biased variance of ``exp(lambda_i / d)`` from the length spectrum.

    ``sigma_exact`` keeps the square of the mean; ``sigma_approx`` drops the
    terms quadratic in the kernels.
    """
    model = FilarModel(q, n)
    if cutoff is None:
        cutoff = spectrum.cutoff if isinstance(spectrum, GeodesicSpectrum) else max(spectrum, default=2)
    j1, j2 = model.J(model.t1), model.J(model.t2)
    s1 = s2 = sg = 0.0
    for length in range(3, cutoff + 1):
        m = spectrum[length] if isinstance(spectrum, GeodesicSpectrum) else spectrum.get(length, 0)
        if not m:
            continue
        s1 += length * m * model.F(length, model.t1)
        s2 += length * m * model.F(length, model.t2)
        sg += length * m * model.variance_weight(length)
    mu = j1 + 2.0 * s1 / n
    sigma_exact = j2 + 2.0 * s2 / n - mu * mu
    sigma_approx = (j2 - j1 * j1) + 2.0 * sg / n
    return PredictedPoint(mu, sigma_exact, sigma_approx)
