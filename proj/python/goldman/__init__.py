"""Goldman brackets, intersection angles and twist flows on hyperbolic surfaces."""

from ._core import (
    GoldmanError,
    Surface,
    bracket,
    conj_class,
    free_reduce,
    holed_torus,
    intersection_number,
    is_conjugate,
    lift_svg,
    load_surface,
    pants,
    sample_metric,
    twist_sweep,
)

__all__ = [
    "GoldmanError",
    "Surface",
    "bracket",
    "conj_class",
    "free_reduce",
    "holed_torus",
    "intersection_number",
    "is_conjugate",
    "lift_svg",
    "load_surface",
    "pants",
    "sample_metric",
    "twist_sweep",
]
