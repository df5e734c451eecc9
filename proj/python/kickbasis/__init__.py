"""Kicking basis toolkit: fillings, basis polynomials, and certificates."""

from ._core import (
    CapExceeded,
    QTPoly,
    Shape,
    basis,
    certify,
    fillings,
    harmonic_hilbert,
    hilbert,
    j_enumerated,
    j_recurrence_first,
    j_recurrence_second,
    j_reduced,
    phi,
    symmetric,
    verify_all,
)

__all__ = [
    "CapExceeded",
    "QTPoly",
    "Shape",
    "basis",
    "certify",
    "fillings",
    "harmonic_hilbert",
    "hilbert",
    "j_enumerated",
    "j_recurrence_first",
    "j_recurrence_second",
    "j_reduced",
    "phi",
    "symmetric",
    "verify_all",
]
