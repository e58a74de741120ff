"""Orders of SL_n(F_q) and of the F-fixed points of twisted central tori."""

from fractions import Fraction

import sympy

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.partitions import Partition

Q = sympy.Symbol("q")


def group_order_poly(n: int) -> sympy.Poly:
    if n < 1:
        raise LabelError(f"n must be positive: {n}")
    expr = Q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        expr *= Q**i - 1
    return sympy.Poly(expr, Q)


def torus_order_poly(rho: Partition) -> sympy.Poly:
    """prod (q^rho_i - 1) / (q - 1)."""
    numerator = sympy.Poly(1, Q)
    for part in rho.parts:
        numerator *= sympy.Poly(Q**part - 1, Q)
    quotient, remainder = sympy.div(numerator, sympy.Poly(Q - 1, Q))
    if not remainder.is_zero:
        raise LabelError(f"torus order for {rho} is not a polynomial")
    return quotient


def q_poly_to_laurent(poly: sympy.Poly) -> CycLaurent:
    """A polynomial in q as a CycLaurent in u (q = u^2)."""
    value = CycLaurent.zero()
    for (degree,), coeff in poly.terms():
        rational = sympy.Rational(coeff)
        value = value + CycLaurent.rational(
            Fraction(int(rational.p), int(rational.q)), 2 * int(degree)
        )
    return value


def group_order(n: int) -> CycLaurent:
    return q_poly_to_laurent(group_order_poly(n))


def torus_order(d: int, rho: Partition) -> CycLaurent:
    """|Z^0_{L_w}^F| for L of type A_{d-1} x ... x A_{d-1} and w of cycle type rho.

    The value does not depend on d beyond the requirement that rho is a
    partition of the number of Levi factors.
    """
    if d < 1:
        raise LabelError(f"d must be positive: {d}")
    return q_poly_to_laurent(torus_order_poly(rho))
