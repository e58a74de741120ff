"""The pairings {x, y} between M_{s,E} and M-bar_{s,E} and the almost-character transform."""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Literal, Optional

from src.errors import DivisibilityError, LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import characteristic
from src.exactalg.partitions import Partition
from src.logging_config import get_logger
from src.lseries.params import cyclic_bijection
from src.orbits.components import zm1_quotient
from src.orbits.cyclic import CyclicF

logger = get_logger("almost.pairing")

Label = tuple[int, int]


@dataclass(frozen=True)
class PairingContext:
    """
    A cyclic group with Frobenius and the two label sets built from it.

    Every label is a pair of indices mod g = |group^F|. On the class side
    (kind "E") rows are (eps, z) in (Omega^)^{F'} x Omega^{F'} and columns
    (eps', z') in (Omega^{F'})^ x Omega_{F'}; on the orbit side (kind "N") rows
    are (c, xi) in A-bar^F x (A-bar^)^F and columns (c', xi') in (A-bar)_F x (A-bar^F)^.
    """

    group: CyclicF
    kind: Literal["E", "N"] = "E"

    @property
    def size(self) -> int:
        return self.group.fixed_order

    def rows(self) -> list[Label]:
        g = self.size
        return list(product(range(g), range(g)))

    def columns(self) -> list[Label]:
        return self.rows()

    def check(self, label: Label) -> None:
        g = self.size
        if len(label) != 2 or not all(0 <= k < g for k in label):
            raise LabelError(f"label {label} is not a pair of indices mod {g}")

    def to_dict(self) -> dict[str, object]:
        return {"group": self.group.to_dict(), "kind": self.kind, "size": self.size}


def pairing_context_for_class(t: int, q: int) -> PairingContext:
    """Context on Omega_s = Z/t of the special class, with F' acting by q."""
    p = characteristic(q)
    if t < 1 or t % p == 0:
        raise DivisibilityError(f"t = {t} must be positive and prime to p = {p}")
    return PairingContext(group=CyclicF(t, q), kind="E")


def pairing_context_for_orbit(t: int, mu: Partition, q: int) -> PairingContext:
    return PairingContext(group=zm1_quotient(mu, t, q).target, kind="N")


def _exponent(x: Label, y: Label, kind: str) -> int:
    if kind == "E":
        return x[0] * y[1] + y[0] * x[1]
    return x[1] * y[0] + y[1] * x[0]


def pairing(x: Label, y: Label, context: PairingContext) -> CycLaurent:
    """
    {x, y} = g^-1 eps(z') eps'(z) on the class side, g^-1 xi(c') xi'(c) on the orbit side.

    Both are g^-1 zeta_g^{a b' + a' b} for the index pairs x = (a, b), y = (a', b');
    on the orbit side the character sits second, so the roles swap.
    """
    context.check(x)
    context.check(y)
    g = context.size
    return CycLaurent.root_of_unity(g, _exponent(x, y, context.kind)) * Fraction(1, g)


def pairing_is_unitary(context: PairingContext) -> bool:
    """
    Exact unitarity of the transform without forming the matrix.

    {x, y} is additive in x, so the product of rows x and x' only depends on
    d = x - x' and equals g^-2 sum_y zeta_g^{exponent(d, y)}.
    """
    g = context.size
    columns = context.columns()
    for delta in context.rows():
        counts = Counter(_exponent(delta, y, context.kind) % g for y in columns)
        total = CycLaurent.zero()
        for residue, count in counts.items():
            total = total + CycLaurent.root_of_unity(g, residue) * count
        expected = g * g if delta == (0, 0) else 0
        if total != expected:
            logger.warning(f"transform for {context.group} is not unitary at difference {delta}")
            return False
    return True


@dataclass
class TransformMatrix:
    """R_x = sum_y {x, y} rho_y as an explicit matrix."""

    context: PairingContext
    rows: list[Label]
    columns: list[Label]
    entries: list[list[CycLaurent]]

    def is_unitary(self) -> bool:
        size = len(self.rows)
        for i in range(size):
            for j in range(size):
                total = CycLaurent.zero()
                for k in range(len(self.columns)):
                    total = total + self.entries[i][k] * self.entries[j][k].conj()
                expected = CycLaurent.one() if i == j else CycLaurent.zero()
                if total != expected:
                    return False
        return True

    def row_norms(self) -> list[CycLaurent]:
        norms = []
        for row in self.entries:
            total = CycLaurent.zero()
            for entry in row:
                total = total + entry.abs_squared()
            norms.append(total)
        return norms

    def to_dict(self) -> dict[str, object]:
        return {
            "context": self.context.to_dict(),
            "rows": [list(r) for r in self.rows],
            "columns": [list(c) for c in self.columns],
            "entries": [[entry.to_dict() for entry in row] for row in self.entries],
        }


def transform_matrix(context: PairingContext) -> TransformMatrix:
    rows = context.rows()
    columns = context.columns()
    entries = [[pairing(x, y, context) for y in columns] for x in rows]
    logger.debug(f"transform matrix of size {len(rows)} for {context.group}")
    return TransformMatrix(context=context, rows=rows, columns=columns, entries=entries)


def compatible_under_bijection(t: int, q: int, mu: Optional[Partition] = None) -> bool:
    """{x, y}_E = {x', y'}_N for all x, y under the identifications of M_{s,E} and M-bar_{s,E}.

    The A-bar side is the quotient Z_M(lambda)/Z^1_M(lambda) of the orbit mu
    (default: the regular orbit (t)); t must divide every part of mu.
    """
    omega = pairing_context_for_class(t, q)
    a_bar = pairing_context_for_orbit(t, mu if mu is not None else Partition((t,)), q)
    bijection = cyclic_bijection(t, q, omega.group, a_bar.group)
    for x in omega.rows():
        for y in omega.columns():
            lhs = pairing(x, y, omega)
            rhs = pairing(bijection.fixed_map(x), bijection.bar_map(y), a_bar)
            if lhs != rhs:
                logger.warning(f"pairing mismatch at t={t}, q={q}: x={x}, y={y}")
                return False
    return True
