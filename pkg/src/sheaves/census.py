"""Cuspidal character-sheaf labels, endomorphism-algebra data and family parameters."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from src.errors import DivisibilityError, LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import check_power_of, characteristic, prime_to_part
from src.exactalg.symmetric import SnCharLabel
from src.logging_config import get_logger
from src.orbits.cyclic import CyclicF

logger = get_logger("sheaves.census")


@dataclass(frozen=True)
class CuspidalLabel:
    """E' x A_{z,eps}: z in Z_G/Z_G^0, eps a faithful character of A_G(z u_1)."""

    z: int
    eps: int
    order: int
    local_system: str = "trivial"

    def to_dict(self) -> dict[str, object]:
        return {
            "z": self.z,
            "eps": self.eps,
            "order": self.order,
            "local_system": self.local_system,
        }


@dataclass(frozen=True)
class CuspidalCensus:
    n: int
    q: int
    labels: tuple[CuspidalLabel, ...]

    @property
    def count(self) -> int:
        return len(self.labels)

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "q": self.q,
            "count": self.count,
            "labels": [label.to_dict() for label in self.labels],
        }


def cuspidal_census(n: int, q: int, p: int) -> CuspidalCensus:
    """F-stable cuspidal labels of SL_n: F-fixed z times F-stable faithful eps.

    eps must have order exactly n, so the census is empty unless p does not
    divide n. In particular it is empty when 1 < n' < n.
    """
    check_power_of(q, p)
    n_prime = prime_to_part(n, p)
    if n < 2 or n_prime != n:
        logger.debug(f"SL_{n} in characteristic {p} has no cuspidal character sheaf")
        return CuspidalCensus(n=n, q=q, labels=())
    center = CyclicF(n_prime, q)
    faithful = [e for e in center.fixed_characters() if center.is_faithful(e)]
    labels = tuple(
        CuspidalLabel(z=z, eps=e, order=n_prime)
        for z, e in product(center.fixed_points(), faithful)
    )
    return CuspidalCensus(n=n, q=q, labels=labels)


@dataclass(frozen=True)
class EndoData:
    """
    W_theta1 = W0 semidirect Omega_theta1 inside S_{n/d}.

    W0 is (S_{n/t})^{t/d}; Omega_theta1 = Z/(t/d) permutes its factors
    cyclically, with generator y0 = 1. F'' acts on Omega_theta1 by q.
    """

    n: int
    t: int
    d: int
    q: int

    @property
    def factor_size(self) -> int:
        return self.n // self.t

    @property
    def repeats(self) -> int:
        return self.t // self.d

    @property
    def w0_shape(self) -> tuple[int, ...]:
        return (self.factor_size,) * self.repeats

    @property
    def omega(self) -> CyclicF:
        return CyclicF(self.repeats, self.q)

    @property
    def generator(self) -> int:
        return 1 % self.repeats

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "t": self.t,
            "d": self.d,
            "q": self.q,
            "w0_shape": list(self.w0_shape),
            "omega": self.omega.to_dict(),
        }


def endomorphism_data(n: int, t: int, d: int, q: int) -> EndoData:
    p = characteristic(q)
    if d < 1 or t % d or n % t:
        raise DivisibilityError(f"need d | t | n, got d={d}, t={t}, n={n}")
    if t % p == 0:
        raise DivisibilityError(f"t = {t} must be prime to p = {p}")
    return EndoData(n=n, t=t, d=d, q=q)


def xm_group(t: int, d: int, q: int) -> CyclicF:
    """X_M = Z/(t/d) with F'' acting by q."""
    if d < 1 or t % d:
        raise DivisibilityError(f"d = {d} must divide t = {t}")
    return CyclicF(t // d, q)


@dataclass
class FamilyParam:
    """M_{L,E} = Omega_{L,E} x Omega_{L,E}^ with the multiplicity pairing between its members."""

    stabilizer_order: int
    members: list[tuple[int, int]]
    matrix: list[list[CycLaurent]]

    def row_norms(self) -> list[CycLaurent]:
        norms = []
        for row in self.matrix:
            total = CycLaurent.zero()
            for entry in row:
                total = total + entry.abs_squared()
            norms.append(total)
        return norms

    def to_dict(self) -> dict[str, object]:
        return {
            "stabilizer_order": self.stabilizer_order,
            "members": [list(m) for m in self.members],
            "matrix": [[entry.to_dict() for entry in row] for row in self.matrix],
        }


def family_param(components: Sequence[SnCharLabel]) -> FamilyParam:
    """
    The family of E = E_1 x ... x E_k on W0_L = prod S_{m_i}, Omega_L = Z/k rotating factors.

    Omega_{L,E} is the rotation stabilizer of the tuple. The entry for members
    A = (x, eps) and (x', theta) is |Omega_{L,E}|^-1 eps(x') theta(x)^-1.
    """
    k = len(components)
    if k == 0:
        raise LabelError("family needs at least one factor")
    sizes = {E.n for E in components}
    if len(sizes) > 1:
        raise LabelError(f"factors of W0_L must have equal size: {sorted(sizes)}")
    period = next(
        r
        for r in range(1, k + 1)
        if k % r == 0 and all(components[i] == components[(i + r) % k] for i in range(k))
    )
    order = k // period
    members = list(product(range(order), range(order)))
    weight = Fraction(1, order)
    matrix = [
        [CycLaurent.root_of_unity(order, eps * x2 - theta * x) * weight for x2, theta in members]
        for x, eps in members
    ]
    return FamilyParam(stabilizer_order=order, members=members, matrix=matrix)
