"""Symbolic q-characters of finite-dimensional representations of quantum affine algebras."""

from qchar.cartan import CartanData, QLaurent, build_cartan, q_cartan_matrix
from qchar.ypoly import (
    YMonomial,
    YPolynomial,
    a_monomial,
    beta_restrict,
    classical_character,
    is_dominant,
    weight_of,
)

__all__ = [
    "CartanData",
    "QLaurent",
    "YMonomial",
    "YPolynomial",
    "a_monomial",
    "beta_restrict",
    "build_cartan",
    "classical_character",
    "is_dominant",
    "q_cartan_matrix",
    "weight_of",
]

__version__ = "0.1.0"
