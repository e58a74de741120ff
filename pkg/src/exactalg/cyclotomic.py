"""Exact values in Q(zeta_N)[u, u^-1] with u^2 = q."""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Optional, Union

import sympy

from src.errors import LabelError
from src.exactalg.numbers import euler_phi

Scalar = Union[int, Fraction]
Vector = tuple[Fraction, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(n, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _width(n: int) -> int:
    """phi(n), the dimension of Q(zeta_n)."""
    return euler_phi(n)


def _reduce(coeffs: list[Fraction], n: int) -> Vector:
    """Reduce a coefficient list in zeta_n modulo Phi_n (monic)."""
    phi = _cyclotomic_coeffs(n)
    degree = len(phi) - 1
    work = list(coeffs)
    for top in range(len(work) - 1, degree - 1, -1):
        lead = work[top]
        if lead == 0:
            continue
        shift = top - degree
        for i, c in enumerate(phi):
            work[shift + i] -= lead * c
    work = work[:degree] + [Fraction(0)] * max(0, degree - len(work))
    return tuple(Fraction(c) for c in work)


def _lift(vec: Vector, old: int, new: int) -> Vector:
    """Re-express an element of Q(zeta_old) in the power basis of zeta_new."""
    if old == new:
        return vec
    step = new // old
    spread = [Fraction(0)] * (step * len(vec) + 1)
    for j, c in enumerate(vec):
        spread[j * step] = c
    return _reduce(spread, new)


class CycLaurent:
    """
    Exact element of Q(zeta_N)[u, u^-1].

    Coefficients are stored per u-power as rational vectors in the power basis
    1, zeta_N, ..., zeta_N^{phi(N)-1}. Zero coefficients are never stored.
    """

    __slots__ = ("conductor", "terms")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, conductor: int = 1, terms: Optional[dict[int, Vector]] = None):
        if conductor < 1:
            raise LabelError(f"conductor must be positive: {conductor}")
        self.conductor = conductor
        width = _width(conductor)
        clean: dict[int, Vector] = {}
        for power, vec in (terms or {}).items():
            vec = tuple(Fraction(c) for c in vec)
            if len(vec) != width:
                vec = _reduce(list(vec), conductor)
            if any(vec):
                clean[int(power)] = vec
        self.terms = clean

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "CycLaurent":
        return cls(1, {})

    @classmethod
    def one(cls) -> "CycLaurent":
        return cls.rational(1)

    @classmethod
    def rational(cls, value: Scalar, u_power: int = 0) -> "CycLaurent":
        """value * u^u_power."""
        return cls(1, {u_power: (Fraction(value),)})

    @classmethod
    def u_power(cls, k: int) -> "CycLaurent":
        return cls.rational(1, k)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "CycLaurent":
        return cls.rational(value)

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1) -> "CycLaurent":
        """zeta_order^k."""
        if order < 1:
            raise LabelError(f"root of unity order must be positive: {order}")
        k %= order
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return cls(order, {0: _reduce(coeffs, order)})

    @classmethod
    def coerce(cls, value: Union["CycLaurent", Scalar]) -> "CycLaurent":
        if isinstance(value, CycLaurent):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to CycLaurent")

    # ------------------------------------------------------------------
    # Conductor management
    # ------------------------------------------------------------------

    def lifted(self, conductor: int) -> "CycLaurent":
        """The same value with coefficients expressed over a multiple of the conductor."""
        if conductor % self.conductor:
            raise LabelError(f"{conductor} is not a multiple of {self.conductor}")
        return CycLaurent(
            conductor, {k: _lift(v, self.conductor, conductor) for k, v in self.terms.items()}
        )

    def _aligned(self, other: "CycLaurent") -> tuple["CycLaurent", "CycLaurent"]:
        n = _lcm(self.conductor, other.conductor)
        return self.lifted(n), other.lifted(n)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: Union["CycLaurent", Scalar]) -> "CycLaurent":
        try:
            a, b = self._aligned(CycLaurent.coerce(other))
        except TypeError:
            return NotImplemented
        terms = dict(a.terms)
        for k, v in b.terms.items():
            if k in terms:
                terms[k] = tuple(x + y for x, y in zip(terms[k], v))
            else:
                terms[k] = v
        return CycLaurent(a.conductor, terms)

    __radd__ = __add__

    def __neg__(self) -> "CycLaurent":
        return CycLaurent(self.conductor, {k: tuple(-c for c in v) for k, v in self.terms.items()})

    def __sub__(self, other: Union["CycLaurent", Scalar]) -> "CycLaurent":
        try:
            return self + (-CycLaurent.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Scalar) -> "CycLaurent":
        return CycLaurent.coerce(other) - self

    def __mul__(self, other: Union["CycLaurent", Scalar]) -> "CycLaurent":
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            return CycLaurent(
                self.conductor, {k: tuple(c * scale for c in v) for k, v in self.terms.items()}
            )
        if not isinstance(other, CycLaurent):
            return NotImplemented
        a, b = self._aligned(other)
        n = a.conductor
        products: dict[int, list[Fraction]] = {}
        for ka, va in a.terms.items():
            for kb, vb in b.terms.items():
                acc = products.setdefault(ka + kb, [Fraction(0)] * (len(va) + len(vb) - 1))
                for i, x in enumerate(va):
                    if x == 0:
                        continue
                    for j, y in enumerate(vb):
                        if y:
                            acc[i + j] += x * y
        return CycLaurent(n, {k: _reduce(v, n) for k, v in products.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CycLaurent":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycLaurent.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "CycLaurent":
        """Complex conjugation: zeta -> zeta^-1, u fixed."""
        n = self.conductor
        terms = {}
        for k, v in self.terms.items():
            coeffs = [Fraction(0)] * n
            for j, c in enumerate(v):
                coeffs[(-j) % n] += c
            terms[k] = _reduce(coeffs, n)
        return CycLaurent(n, terms)

    def abs_squared(self) -> "CycLaurent":
        return self * self.conj()

    def inverse(self) -> "CycLaurent":
        """
        Inverse of a single-term element c * u^k whose coefficient has rational norm c * conj(c).

        Raises:
            LabelError: if the element is not of that form
        """
        if len(self.terms) != 1:
            raise LabelError(f"only single-term values are invertible here: {self}")
        (power, _), = self.terms.items()
        coefficient = CycLaurent(self.conductor, {0: self.terms[power]})
        norm = coefficient.abs_squared()
        if not norm.is_rational():
            raise LabelError(f"coefficient norm is not rational: {self}")
        return coefficient.conj() * (1 / norm.to_fraction()) * CycLaurent.u_power(-power)

    def __truediv__(self, other: Union["CycLaurent", Scalar]) -> "CycLaurent":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of CycLaurent by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycLaurent):
            return NotImplemented
        return self * other.inverse()

    # ------------------------------------------------------------------
    # Comparison and inspection
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycLaurent.rational(other)
        if not isinstance(other, CycLaurent):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def is_zero(self) -> bool:
        return not self.terms

    def u_powers(self) -> list[int]:
        return sorted(self.terms)

    def coefficient(self, u_power: int) -> "CycLaurent":
        """The coefficient of u^u_power as a constant."""
        if u_power not in self.terms:
            return CycLaurent.zero()
        return CycLaurent(self.conductor, {0: self.terms[u_power]})

    def is_rational(self) -> bool:
        """True for a constant rational number (u-power 0, no zeta part)."""
        if not self.terms:
            return True
        if set(self.terms) != {0}:
            return False
        return not any(self.terms[0][1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise LabelError(f"not a rational constant: {self}")
        return self.terms[0][0] if self.terms else Fraction(0)

    def has_unit_modulus(self) -> bool:
        """x * conj(x) == 1 exactly, i.e. modulus 1 under every complex embedding."""
        return self.abs_squared() == 1

    def is_root_of_unity(self) -> bool:
        """An integral constant (u-power 0 only) of modulus 1, hence a root of unity."""
        return set(self.terms) == {0} and self.is_integral() and self.has_unit_modulus()

    def is_integral(self) -> bool:
        """All coordinates are integers (sufficient for algebraic integrality)."""
        return all(c.denominator == 1 for v in self.terms.values() for c in v)

    def evaluate(self, q: int, embedding: int = 1) -> sympy.Expr:
        """
        Exact sympy value at a numeric q with u the positive square root.

        Args:
            q: Value substituted for u^2
            embedding: zeta_N is sent to exp(2 pi i embedding / N)

        Returns:
            Simplified sympy expression
        """
        if gcd(embedding, self.conductor) != 1:
            raise LabelError(f"embedding {embedding} is not coprime to {self.conductor}")
        root = sympy.sqrt(q)
        zeta = sympy.exp(2 * sympy.pi * sympy.I * embedding / self.conductor)
        total = sympy.Integer(0)
        for k, v in self.terms.items():
            for j, c in enumerate(v):
                if c:
                    total += sympy.Rational(c.numerator, c.denominator) * root**k * zeta**j
        return sympy.simplify(total)

    def substitute_q(self, q: int) -> "CycLaurent":
        """Evaluate u^2 = q on even u-powers; odd powers keep one factor of u."""
        result = CycLaurent.zero()
        for k, v in self.terms.items():
            scale = Fraction(q) ** (k // 2)
            result = result + CycLaurent(self.conductor, {k % 2: tuple(c * scale for c in v)})
        return result

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "conductor": self.conductor,
            "terms": [[k, [str(c) for c in self.terms[k]]] for k in sorted(self.terms)],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CycLaurent":
        return cls(
            int(data["conductor"]),
            {int(k): tuple(Fraction(c) for c in v) for k, v in data["terms"]},
        )

    def __repr__(self) -> str:
        return f"CycLaurent({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms):
            coeff = " + ".join(
                f"{c}" if j == 0 else f"{c}*z{self.conductor}^{j}"
                for j, c in enumerate(self.terms[k])
                if c
            )
            pieces.append(f"({coeff})" + (f"*u^{k}" if k else ""))
        return " + ".join(pieces)


ZERO = CycLaurent.zero()
ONE = CycLaurent.one()
