"""p-ary functions on GF(q): tables, quadratic forms, Walsh spectra and classification."""

from .pfunction import PFunction, QuadraticSpec, quad_eval, kernel_dim, coeff_label
from .walsh import WalshProfile, WrpClass, walsh_transform, classify, analyse, homogeneity_exponent
from .solutions import count_solutions, expected_solutions

__all__ = [
    "PFunction",
    "QuadraticSpec",
    "quad_eval",
    "kernel_dim",
    "coeff_label",
    "WalshProfile",
    "WrpClass",
    "walsh_transform",
    "classify",
    "analyse",
    "homogeneity_exponent",
    "count_solutions",
    "expected_solutions",
]
