"""The twisting class c0: -N* is conjugate to N twisted by c0."""

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator, Optional

from src.config import get_settings
from src.errors import CapExceededError, LabelError, SearchError
from src.exactalg.partitions import Partition
from src.fforacle.field import FiniteField, FqElement, get_field
from src.fforacle.matrices import Matrix, determinant, jordan_nilpotent, mat_mul, mat_neg, nullspace
from src.logging_config import get_logger
from src.orbits.components import n_prime_mu
from src.orbits.cyclic import CyclicF

logger = get_logger("fforacle.twist")


@dataclass(frozen=True)
class TwistSolution:
    n: int
    q: int
    mu: Partition
    nilpotent: Matrix
    dual_nilpotent: Matrix
    conjugator: Matrix
    det_conjugator: FqElement
    group: CyclicF
    c0: int

    @property
    def is_trivial(self) -> bool:
        return self.group.coinvariant_class(self.c0) == 0

    def verify(self) -> bool:
        """g N g^-1 = -N*, checked as g N = -N* g."""
        fq = get_field(self.q)
        left = mat_mul(fq, self.n, self.conjugator, self.nilpotent)
        right = mat_neg(fq, mat_mul(fq, self.n, self.dual_nilpotent, self.conjugator))
        return left == right and self.det_conjugator != 0

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "q": self.q,
            "mu": list(self.mu.parts),
            "N": list(self.nilpotent),
            "N_star": list(self.dual_nilpotent),
            "g": list(self.conjugator),
            "det_g": self.det_conjugator,
            "c0": self.c0,
            "A_lambda_F_order": self.group.fixed_order,
        }


def dual_nilpotent(fq: FiniteField, mu: Partition) -> Matrix:
    """N* of the standard triple: i(m-i) below the diagonal of each Jordan block."""
    n = mu.size
    entries = [0] * (n * n)
    offset = 0
    for m in mu.parts:
        for i in range(1, m):
            entries[(offset + i) * n + offset + i - 1] = fq.from_int(i * (m - i))
        offset += m
    return tuple(entries)


def _equations(fq: FiniteField, n: int, nil: Matrix, dual: Matrix) -> list[list[FqElement]]:
    """Rows of the linear map g -> gN + N* g on the n^2 entries of g."""
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                # (gN)_ij = sum_k g_ik N_kj
                if nil[k * n + j]:
                    row[i * n + k] = fq.add(row[i * n + k], nil[k * n + j])
                # (N* g)_ij = sum_k N*_ik g_kj
                if dual[i * n + k]:
                    row[k * n + j] = fq.add(row[k * n + j], dual[i * n + k])
            rows.append(row)
    return rows


def _candidates(
    fq: FiniteField, basis: list[list[FqElement]], cap: int
) -> Iterator[list[FqElement]]:
    width = len(basis[0])
    for vec in basis:
        yield vec
    total = [0] * width
    for vec in basis:
        total = [fq.add(a, b) for a, b in zip(total, vec)]
    yield total
    if fq.q ** len(basis) > cap:
        raise CapExceededError("c0 conjugator search", cap, fq.q ** len(basis))
    for coeffs in product(fq.elements(), repeat=len(basis)):
        combo = [0] * width
        for c, vec in zip(coeffs, basis):
            if c:
                combo = [fq.add(a, fq.mul(c, b)) for a, b in zip(combo, vec)]
        yield combo


def solve_twist_c0(n: int, q: int, mu: Partition, cap: Optional[int] = None) -> TwistSolution:
    if mu.size != n:
        raise LabelError(f"{mu} is not a partition of {n}")
    fq = get_field(q)
    if fq.p <= n:
        raise LabelError(f"the standard triple needs p > n (p = {fq.p}, n = {n})")
    limit = cap if cap is not None else get_settings().group_order_cap
    order = n_prime_mu(mu, fq.p)
    group = CyclicF(order, q)
    nil = jordan_nilpotent(mu)
    dual = dual_nilpotent(fq, mu)

    basis = nullspace(fq, _equations(fq, n, nil, dual), n * n)
    if not basis:
        raise SearchError(f"gN + N*g = 0 has no nonzero solution for {mu}")
    logger.debug(f"c0 search for {mu} over F_{q}: solution space of dimension {len(basis)}")

    for candidate in _candidates(fq, basis, limit):
        g = tuple(candidate)
        det = determinant(fq, n, g)
        if det:
            modulus = gcd(group.fixed_order, q - 1)
            c0 = fq.log(det) % modulus if modulus > 1 else 0
            solution = TwistSolution(
                n=n,
                q=q,
                mu=mu,
                nilpotent=nil,
                dual_nilpotent=dual,
                conjugator=g,
                det_conjugator=det,
                group=group,
                c0=c0,
            )
            logger.info(f"c0 for {mu} over F_{q}: class {c0} (det g = {det})")
            return solution
    raise SearchError(f"no invertible conjugator found for {mu} over F_{q}")
