"""Modified Bessel functions of the first kind, integer order, by power series."""

from __future__ import annotations

from ..errors import DomainError

MAX_ORDER = 200
MAX_ARG = 10.0
_REL_STOP = 1e-18


def bessel_I(m: int, z: float) -> float:
    """``I_m(z) = sum_r (z/2)^(m+2r) / (r! (m+r)!)`` for 0 <= z <= 10, 0 <= m <= 200."""
    if not (isinstance(m, int) or float(m).is_integer()) or not 0 <= m <= MAX_ORDER:
        raise DomainError(f"order {m} outside 0..{MAX_ORDER}")
    m = int(m)
    if not 0.0 <= z <= MAX_ARG:
        raise DomainError(f"argument {z} outside [0, {MAX_ARG}]")
    if z == 0.0:
        return 1.0 if m == 0 else 0.0
    half = 0.5 * z
    # leading term (z/2)^m / m! as a running product: no overflow for m <= 200
    term = 1.0
    for k in range(1, m + 1):
        term *= half / k
    if term == 0.0:
        return 0.0
    quarter = half * half
    total = term
    r = 0
    while True:
        r += 1
        term *= quarter / (r * (m + r))
        if term < _REL_STOP * total:
            return total
        total += term
