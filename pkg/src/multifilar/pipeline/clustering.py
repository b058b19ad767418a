"""Grouping of records into filars and line fits inside each group."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..trace_formula import FilarModel

MIN_FIT_SIZE = 3


@dataclass(frozen=True)
class FilarGroup:
    key: tuple[int, ...]
    level: int
    members: tuple  # FilarRecord, sorted as given
    centroid: tuple[float, float]
    fitted_slope: float | None
    fitted_intercept: float | None
    predicted_slope: float

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def fits(self) -> bool:
        return self.fitted_slope is not None


def _predicted_slope(records, level: int) -> float:
    r0 = records[0]
    slope = FilarModel(r0.d - 1, r0.n).slope(level)
    # the closed form is for the 1/n variance; s^2_{n-1} is n/(n-1) times larger
    if r0.variance == "unbiased":
        slope *= r0.n / (r0.n - 1)
    return slope


def cluster_filars(records: Sequence, level: int = 3) -> list[FilarGroup]:
    """Group by ``m3`` (level 3) or ``(m3, m4)`` (level 4) and fit sigma on mu.

    Groups with fewer than three members are kept but get no fitted line.
    """
    if level not in (3, 4, 5):
        raise ValueError("level must be 3, 4 or 5")
    if not records:
        return []
    if len({(r.n, r.d, r.variance) for r in records}) != 1:
        raise ValueError("records must share n, d and variance convention")
    predicted = _predicted_slope(records, level)
    buckets: dict[tuple[int, ...], list] = {}
    for r in records:
        buckets.setdefault(r.key(level), []).append(r)
    groups = []
    for key in sorted(buckets):
        members = buckets[key]
        mu = np.array([r.mu for r in members])
        sigma = np.array([r.sigma for r in members])
        slope = intercept = None
        if len(members) >= MIN_FIT_SIZE and np.ptp(mu) > 0:
            slope, intercept = (float(c) for c in np.polyfit(mu, sigma, 1))
        groups.append(
            FilarGroup(
                key=key,
                level=level,
                members=tuple(members),
                centroid=(float(mu.mean()), float(sigma.mean())),
                fitted_slope=slope,
                fitted_intercept=intercept,
                predicted_slope=predicted,
            )
        )
    return groups


def centroid_gaps(groups: Sequence[FilarGroup], slope: float | None = None) -> list[float]:
    """Horizontal distances between consecutive group centroids.

    Each centroid is slid along a line of the filar slope to a common
    variance level, so the result is the gap between parallel filars rather
    than the raw difference of mean values.
    """
    out = []
    for a, b in zip(groups, groups[1:]):
        s = slope if slope is not None else a.predicted_slope
        out.append((b.centroid[0] - a.centroid[0]) - (b.centroid[1] - a.centroid[1]) / s)
    return out
