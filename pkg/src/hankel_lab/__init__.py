"""Exact rational experiments with Hankel determinants, continued fractions and lattice paths."""

from .exact_core import CapExceeded, binom, closed_form, fmt
from .hankel import det_exact, hankel_det
from .series import TruncatedSeries, build_series

__version__ = "0.1.0"

__all__ = ["CapExceeded", "TruncatedSeries", "binom", "build_series", "closed_form", "det_exact", "fmt",
           "hankel_det"]
