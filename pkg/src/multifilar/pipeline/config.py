"""Run configuration for the experiment pipeline."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

CACHE_ENV = "MULTIFILAR_CACHE"

SOURCES = ("enumerate", "graph6", "construction")
VARIANCES = ("unbiased", "biased")


def default_cache_root() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "multifilar"


@dataclass(frozen=True)
class RunConfig:
    degree: int = 3
    vertices: tuple[int, ...] = (10,)
    source: str = "enumerate"
    input_graph6: Path | None = None
    construction: str | None = None
    cutoff: int | str = "auto"
    t_values: tuple[float, ...] = (1 / 3, 2 / 3)
    variance: str = "unbiased"
    out_dir: Path = Path("out")
    jobs: int = 1
    allow_long_runs: bool = False
    residual_tol: float = 1e-9
    cache_root: Path | None = None
    use_cache: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")
        if self.source == "graph6" and self.input_graph6 is None:
            raise ValueError("graph6 source needs input_graph6")
        if self.source == "construction" and not self.construction:
            raise ValueError("construction source needs a construction name")
        if self.variance not in VARIANCES:
            raise ValueError(f"variance must be one of {VARIANCES}")
        if self.degree < 2:
            raise ValueError("degree must be >= 2")
        if self.source == "enumerate":
            for n in self.vertices:
                if (n * self.degree) % 2 or n < self.degree + 1:
                    raise ValueError(f"no {self.degree}-regular graph on {n} vertices")
        for t in self.t_values:
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"t values must lie in [0, 1], got {t}")
        if self.cutoff != "auto" and not (isinstance(self.cutoff, int) and 3 <= self.cutoff <= 60):
            raise ValueError("cutoff must be 'auto' or an integer in [3, 60]")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    @property
    def cache_dir(self) -> Path:
        return self.cache_root if self.cache_root is not None else default_cache_root()
