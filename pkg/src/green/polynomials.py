"""Integer polynomials in t and reduced fractions of u-Laurent polynomials."""

from fractions import Fraction
from typing import Any, Sequence, Union

import sympy

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent

T = sympy.Symbol("t")
U = sympy.Symbol("u")


class IntPolynomial:
    """A polynomial in t with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, coeffs: Sequence[int] = ()):
        trimmed = [int(c) for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        self.coeffs: tuple[int, ...] = tuple(trimmed)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def t_power(cls, k: int) -> "IntPolynomial":
        if k < 0:
            raise LabelError(f"negative power t^{k} is not a polynomial")
        return cls((0,) * k + (1,))

    @classmethod
    def from_sympy(cls, expr: sympy.Expr) -> "IntPolynomial":
        poly = sympy.Poly(sympy.expand(expr), T)
        coeffs = list(reversed(poly.all_coeffs()))
        if any(not sympy.Integer(c) == c for c in coeffs):
            raise LabelError(f"not an integer polynomial: {expr}")
        return cls([int(c) for c in coeffs])

    def to_sympy(self) -> sympy.Expr:
        return sum((c * T**k for k, c in enumerate(self.coeffs)), sympy.Integer(0))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        width = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (width - len(self.coeffs))
        b = other.coeffs + (0,) * (width - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        value: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_divisible_by_t(self) -> bool:
        return not self.coeffs or self.coeffs[0] == 0

    def reversed_by(self, shift: int) -> "IntPolynomial":
        """t^shift * f(t^-1); shift must be at least the degree."""
        if self.is_zero():
            return self
        if shift < self.degree:
            raise LabelError(f"t^{shift} f(1/t) is not a polynomial for degree {self.degree}")
        return IntPolynomial((0,) * (shift - self.degree) + tuple(reversed(self.coeffs)))

    def in_q(self, u_scale: int = 2) -> CycLaurent:
        """The value at t = u^u_scale as a CycLaurent (t = q by default)."""
        value = CycLaurent.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                value = value + CycLaurent.rational(c, u_scale * k)
        return value

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return str(self.to_sympy()) if self.coeffs else "0"


def _as_rational_expr(value: CycLaurent) -> sympy.Expr:
    if not all(value.coefficient(k).is_rational() for k in value.u_powers()):
        raise LabelError(f"only rational u-Laurent values form fractions: {value}")
    return sum(
        (
            sympy.Rational(c.numerator, c.denominator) * U**k
            for k in value.u_powers()
            for c in [value.coefficient(k).to_fraction()]
        ),
        sympy.Integer(0),
    )


def _from_expr(expr: sympy.Expr) -> CycLaurent:
    expr = sympy.expand(expr)
    result = CycLaurent.zero()
    for term in sympy.Add.make_args(expr):
        coeff, power = term.as_coeff_exponent(U)
        if coeff != 0:
            rational = sympy.Rational(coeff)
            result = result + CycLaurent.rational(
                Fraction(int(rational.p), int(rational.q)), int(power)
            )
    return result


class LaurentFraction:
    """numerator / denominator with rational u-Laurent polynomials, in lowest terms."""

    __slots__ = ("numerator", "denominator")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, numerator: CycLaurent, denominator: CycLaurent = CycLaurent.one()):
        if denominator.is_zero():
            raise ZeroDivisionError("LaurentFraction with zero denominator")
        expr = sympy.cancel(
            sympy.together(_as_rational_expr(numerator) / _as_rational_expr(denominator))
        )
        num, den = sympy.fraction(expr)
        lead = sympy.Poly(den, U).LC()
        self.numerator = _from_expr(num / lead)
        self.denominator = _from_expr(den / lead)

    @classmethod
    def zero(cls) -> "LaurentFraction":
        return cls(CycLaurent.zero())

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def to_sympy(self) -> sympy.Expr:
        return _as_rational_expr(self.numerator) / _as_rational_expr(self.denominator)

    def __add__(self, other: "LaurentFraction") -> "LaurentFraction":
        return LaurentFraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(
        self, other: Union["LaurentFraction", CycLaurent, int, Fraction]
    ) -> "LaurentFraction":
        if isinstance(other, LaurentFraction):
            return LaurentFraction(
                self.numerator * other.numerator, self.denominator * other.denominator
            )
        return LaurentFraction(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (CycLaurent, int, Fraction)):
            other = LaurentFraction(CycLaurent.coerce(other))
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def evaluate(self, q: int) -> Fraction:
        """Exact value at u = sqrt(q); raises when the value is irrational."""
        value = sympy.nsimplify(self.to_sympy().subs(U, sympy.sqrt(q)))
        value = sympy.simplify(value)
        if not value.is_Rational:
            raise LabelError(f"value at q = {q} is not rational: {value}")
        return Fraction(int(value.p), int(value.q))

    def to_dict(self) -> dict[str, Any]:
        return {"numerator": self.numerator.to_dict(), "denominator": self.denominator.to_dict()}

    def __repr__(self) -> str:
        return f"LaurentFraction({self})"

    def __str__(self) -> str:
        return str(self.to_sympy())


def divide_exact(value: CycLaurent, divisor: CycLaurent) -> CycLaurent:
    """value / divisor for a rational u-Laurent divisor that divides every zeta-coordinate."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if value.is_zero():
        return value
    low = min(divisor.u_powers())
    den = sympy.Poly(_as_rational_expr(divisor * CycLaurent.u_power(-low)), U)
    width = len(next(iter(value.terms.values())))
    shift = min(value.u_powers())
    result = CycLaurent.zero()
    for j in range(width):
        expr = sum(
            (
                sympy.Rational(v[j].numerator, v[j].denominator) * U ** (k - shift)
                for k, v in value.terms.items()
                if v[j]
            ),
            sympy.Integer(0),
        )
        if expr == 0:
            continue
        quotient, remainder = sympy.div(sympy.Poly(expr, U), den)
        if not remainder.is_zero:
            raise LabelError(f"{divisor} does not divide {value}")
        coordinate = _from_expr(quotient.as_expr()) * CycLaurent.u_power(shift - low)
        result = result + coordinate * CycLaurent.root_of_unity(value.conductor, j)
    return result
