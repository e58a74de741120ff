"""Table-driven finite fields F_q, q = p^k <= 64.

An element is an int in [0, q): its base-p digits are the coefficients of
a polynomial in the Conway root x, lowest degree first.
"""

from functools import lru_cache

from sympy import primitive_root

from src.errors import LabelError
from src.exactalg.numbers import prime_power_decompose
from src.fforacle.conway_data import CONWAY_POLYNOMIALS, MAX_FIELD_ORDER
from src.logging_config import get_logger

logger = get_logger("fforacle.field")

FqElement = int


class FiniteField:
    """F_q with precomputed addition, multiplication and log tables."""

    def __init__(self, q: int):
        p, k = prime_power_decompose(q)
        if q > MAX_FIELD_ORDER:
            raise LabelError(f"field order {q} exceeds the oracle table limit {MAX_FIELD_ORDER}")
        if k > 1 and (p, k) not in CONWAY_POLYNOMIALS:
            raise LabelError(f"no Conway polynomial stored for F_{p}^{k}")
        self.q = q
        self.p = p
        self.k = k
        self.modulus = CONWAY_POLYNOMIALS.get((p, k), ())
        self._add = [[self._poly_add(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._poly_mul(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._add_inverse(a) for a in range(q)]
        self.generator = int(primitive_root(p)) if k == 1 else p
        self._exp: list[int] = []
        self._log: dict[int, int] = {}
        x = 1
        for e in range(q - 1):
            self._exp.append(x)
            self._log[x] = e
            x = self._mul[x][self.generator]
        if len(self._log) != q - 1:
            raise LabelError(f"generator {self.generator} is not primitive in F_{q}")
        logger.debug(f"Built F_{q} (p={p}, k={k}, generator={self.generator})")

    # -- digit arithmetic used to fill the tables

    def _digits(self, a: int) -> list[int]:
        digits = []
        for _ in range(self.k):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def _from_digits(self, digits: list[int]) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d % self.p
        return value

    def _poly_add(self, a: int, b: int) -> int:
        return self._from_digits([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def _add_inverse(self, a: int) -> int:
        return self._from_digits([-x for x in self._digits(a)])

    def _poly_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        for top in range(len(prod) - 1, self.k - 1, -1):
            c = prod[top] % self.p
            if c:
                for i, m in enumerate(self.modulus):
                    prod[top - self.k + i] -= c * m
        return self._from_digits(prod[: self.k])

    # -- field operations

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def add(self, a: FqElement, b: FqElement) -> FqElement:
        return self._add[a][b]

    def sub(self, a: FqElement, b: FqElement) -> FqElement:
        return self._add[a][self._neg[b]]

    def neg(self, a: FqElement) -> FqElement:
        return self._neg[a]

    def mul(self, a: FqElement, b: FqElement) -> FqElement:
        return self._mul[a][b]

    def inv(self, a: FqElement) -> FqElement:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: FqElement, b: FqElement) -> FqElement:
        return self.mul(a, self.inv(b))

    def power(self, a: FqElement, e: int) -> FqElement:
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: FqElement) -> int:
        """Discrete log to the base of the field generator."""
        if a == 0:
            raise ZeroDivisionError("log of 0")
        return self._log[a]

    def exp(self, e: int) -> FqElement:
        return self._exp[e % (self.q - 1)]

    def frobenius(self, a: FqElement) -> FqElement:
        return self.power(a, self.p)

    def from_int(self, value: int) -> FqElement:
        """Image of an integer in the prime field."""
        return value % self.p

    def additive_basis(self) -> list[FqElement]:
        """The powers 1, x, ..., x^{k-1} as elements."""
        return [self.p**e for e in range(self.k)]

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"


@lru_cache(maxsize=None)
def get_field(q: int) -> FiniteField:
    return FiniteField(q)
