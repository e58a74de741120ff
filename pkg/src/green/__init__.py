"""Kostka-Foulkes data, orders and the X-basis inner products of a block."""

from src.green.kostka import (
    charge,
    hall_littlewood_monomial,
    kostka,
    kostka_number,
    kostka_oracle,
    reading_word,
)
from src.green.omega import (
    GramCheck,
    GramConsistency,
    bp_polynomial,
    gram_consistency,
    gram_matrix,
    member_index,
    omega,
    p_matrix,
    p_polynomial,
    p_value,
    x_inner,
    y_gram_oracle,
)
from src.green.orders import group_order, torus_order
from src.green.polynomials import IntPolynomial, LaurentFraction, divide_exact

__all__ = [
    # Polynomial types
    "IntPolynomial",
    "LaurentFraction",
    "divide_exact",
    # Kostka polynomials
    "kostka",
    "kostka_number",
    "kostka_oracle",
    "hall_littlewood_monomial",
    "charge",
    "reading_word",
    # Orders
    "group_order",
    "torus_order",
    # Block data
    "p_polynomial",
    "bp_polynomial",
    "p_value",
    "p_matrix",
    "omega",
    "x_inner",
    "gram_matrix",
    "y_gram_oracle",
    "gram_consistency",
    "GramCheck",
    "GramConsistency",
    "member_index",
]
