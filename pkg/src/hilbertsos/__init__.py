"""Exact and numerical tools for psd forms that are not sums of squares."""

from .polycore import Poly, QuadForm, variables
from .pointideal import PointSet, vanishing_basis, forced_zeros, gap_element
from .hilbert import construct_not_sos, max_perturbation, not_sos_certificate, psd_audit

__all__ = [
    "Poly",
    "QuadForm",
    "variables",
    "PointSet",
    "vanishing_basis",
    "forced_zeros",
    "gap_element",
    "construct_not_sos",
    "max_perturbation",
    "not_sos_certificate",
    "psd_audit",
]

__version__ = "0.1.0"
