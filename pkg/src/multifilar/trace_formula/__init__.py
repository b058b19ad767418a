from .bessel import bessel_I
from .filars import FilarGeometry, FilarModel, PredictedPoint, filar_geometry, predict_point
from .identity import (
    TraceReport,
    auto_cutoff,
    bessel_sequence,
    contour_term,
    even_sequence,
    general_trace_formula,
    geodesic_side,
    transform,
    verify_trace_formula,
)
from .kernels import geodesic_kernel_F, kernel_bound, kesten_integral_J, tail_bound

__all__ = [
    "FilarGeometry",
    "FilarModel",
    "PredictedPoint",
    "TraceReport",
    "auto_cutoff",
    "bessel_I",
    "bessel_sequence",
    "contour_term",
    "even_sequence",
    "filar_geometry",
    "general_trace_formula",
    "geodesic_kernel_F",
    "geodesic_side",
    "kernel_bound",
    "kesten_integral_J",
    "predict_point",
    "tail_bound",
    "transform",
    "verify_trace_formula",
]
