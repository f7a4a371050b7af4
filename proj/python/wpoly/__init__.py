"""Colored-graph brackets, twist polynomials and surgery families."""

from ._core import (
    WpolyError,
    bracket,
    builtin_families,
    certify,
    family_bracket,
    family_form,
    jones,
    mahler,
    roots,
    specialize_twist,
    twist_polynomial,
)

__all__ = [
    "WpolyError",
    "bracket",
    "builtin_families",
    "certify",
    "family_bracket",
    "family_form",
    "jones",
    "mahler",
    "roots",
    "specialize_twist",
    "twist_polynomial",
]
