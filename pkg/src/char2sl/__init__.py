"""Involutions of SL(n, k) over fields of characteristic 2.

Exact arithmetic over GF(2^r) and F_q(x), canonical forms for inner and
outer involutions, isomorphy tests with verified witnesses, fixed-point
groups, symmetric-variety elements, and a brute-force oracle for small
finite fields.
"""
from .bilinear import are_congruent_proj, classify_outer
from .fields import parse_field
from .involutions import Automorphism, apply, are_isomorphic, classify_inner, is_involution
from .matrix import Matrix
from .poly import Poly

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "Matrix",
    "Poly",
    "apply",
    "are_congruent_proj",
    "are_isomorphic",
    "classify_inner",
    "classify_outer",
    "is_involution",
    "parse_field",
]
