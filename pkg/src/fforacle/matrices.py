"""Brute-force matrix-group oracle for SL_n(F_q) at desk scale."""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence

from src.config import get_settings
from src.errors import CapExceededError, LabelError
from src.exactalg.partitions import Partition, partitions_of
from src.fforacle.field import FiniteField, FqElement, get_field
from src.logging_config import get_logger, timed

logger = get_logger("fforacle.matrices")

Matrix = tuple[FqElement, ...]


@dataclass(frozen=True)
class MatrixGroupElement:
    """An n x n matrix over F_q stored row-major."""

    n: int
    q: int
    entries: Matrix

    @property
    def determinant(self) -> FqElement:
        return determinant(get_field(self.q), self.n, self.entries)

    def rows(self) -> list[list[FqElement]]:
        return [list(self.entries[i * self.n : (i + 1) * self.n]) for i in range(self.n)]


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Matrix
    size: int
    centralizer_order: int


@dataclass
class ClassCensus:
    n: int
    q: int
    group_order: int
    classes: list[ConjugacyClass] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "q": self.q,
            "group_order": self.group_order,
            "count": self.count,
            "classes": [
                {
                    "representative": list(c.representative),
                    "size": c.size,
                    "centralizer_order": c.centralizer_order,
                }
                for c in self.classes
            ],
        }


@dataclass(frozen=True)
class UnipotentSplit:
    """G^F-classes inside the geometric unipotent class of Jordan type mu."""

    mu: Partition
    representatives: tuple[Matrix, ...]
    centralizer_orders: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.representatives)


# ============================================================================
# Linear algebra over F_q
# ============================================================================


def identity(n: int) -> Matrix:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def mat_mul(fq: FiniteField, n: int, a: Matrix, b: Matrix) -> Matrix:
    out = []
    for i in range(n):
        row = a[i * n : (i + 1) * n]
        for j in range(n):
            acc = 0
            for k in range(n):
                if row[k]:
                    acc = fq.add(acc, fq.mul(row[k], b[k * n + j]))
            out.append(acc)
    return tuple(out)


def mat_sub(fq: FiniteField, a: Matrix, b: Matrix) -> Matrix:
    return tuple(fq.sub(x, y) for x, y in zip(a, b))


def mat_neg(fq: FiniteField, a: Matrix) -> Matrix:
    return tuple(fq.neg(x) for x in a)


def _echelon(
    fq: FiniteField, rows: list[list[FqElement]]
) -> tuple[list[list[FqElement]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    width = len(rows[0]) if rows else 0
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = fq.inv(rows[r][c])
        rows[r] = [fq.mul(scale, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [fq.sub(x, fq.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(fq: FiniteField, n: int, a: Matrix) -> int:
    _, pivots = _echelon(fq, [list(a[i * n : (i + 1) * n]) for i in range(n)])
    return len(pivots)


def determinant(fq: FiniteField, n: int, a: Matrix) -> FqElement:
    rows = [list(a[i * n : (i + 1) * n]) for i in range(n)]
    det = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = fq.neg(det)
        det = fq.mul(det, rows[c][c])
        inv = fq.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = fq.mul(rows[i][c], inv)
                rows[i] = [fq.sub(x, fq.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
    return det


def nullspace(fq: FiniteField, rows: list[list[FqElement]], width: int) -> list[list[FqElement]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    reduced, pivots = _echelon(fq, rows) if rows else ([], [])
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * width
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = fq.neg(reduced[r][f])
        basis.append(vec)
    return basis


# ============================================================================
# Group enumeration
# ============================================================================


def sl_order(n: int, q: int) -> int:
    order = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        order *= q**i - 1
    return order


def _check_cap(n: int, q: int, cap: Optional[int]) -> int:
    order = sl_order(n, q)
    limit = cap if cap is not None else get_settings().group_order_cap
    if order > limit:
        raise CapExceededError(f"|SL_{n}(F_{q})|", limit, order)
    return order


class GroupEnumeration:
    """Single-pass iterator over SL_n(F_q).

    The first n-1 rows range over F_q^{n(n-1)}; the last row is solved from
    the cofactor expansion det = 1.
    """

    def __init__(self, n: int, q: int, cap: Optional[int] = None):
        if n < 1:
            raise LabelError(f"n must be positive: {n}")
        self.n = n
        self.q = q
        self.order = _check_cap(n, q, cap)
        self.field = get_field(q)

    def __len__(self) -> int:
        return self.order

    def _cofactors(self, top: Sequence[FqElement]) -> list[FqElement]:
        n, fq = self.n, self.field
        out = []
        for j in range(n):
            minor = tuple(
                top[r * n + c] for r in range(n - 1) for c in range(n) if c != j
            )
            value = determinant(fq, n - 1, minor) if n > 1 else 1
            if (n - 1 + j) % 2:
                value = fq.neg(value)
            out.append(value)
        return out

    def __iter__(self) -> Iterator[Matrix]:
        n, fq = self.n, self.field
        count = 0
        for top in product(fq.elements(), repeat=n * (n - 1)):
            cof = self._cofactors(top)
            pivot = next((j for j, c in enumerate(cof) if c), None)
            if pivot is None:
                continue
            others = [j for j in range(n) if j != pivot]
            scale = fq.inv(cof[pivot])
            for free in product(fq.elements(), repeat=n - 1):
                acc = 1
                last = [0] * n
                for j, x in zip(others, free):
                    last[j] = x
                    acc = fq.sub(acc, fq.mul(cof[j], x))
                last[pivot] = fq.mul(acc, scale)
                count += 1
                yield tuple(top) + tuple(last)
        logger.debug(f"Enumerated {count} elements of SL_{n}(F_{self.q})")


def enumerate_group(n: int, q: int, cap: Optional[int] = None) -> GroupEnumeration:
    return GroupEnumeration(n, q, cap)


# ============================================================================
# Conjugacy
# ============================================================================


def _conjugate_by_transvection(
    fq: FiniteField, n: int, x: Matrix, i: int, j: int, a: FqElement
) -> Matrix:
    """(1 + a E_ij) x (1 - a E_ij)."""
    m = list(x)
    for c in range(n):
        m[i * n + c] = fq.add(m[i * n + c], fq.mul(a, m[j * n + c]))
    for r in range(n):
        m[r * n + j] = fq.sub(m[r * n + j], fq.mul(a, m[r * n + i]))
    return tuple(m)


def _generators(fq: FiniteField, n: int) -> list[tuple[int, int, FqElement]]:
    basis = fq.additive_basis()
    return [(i, j, a) for i in range(n) for j in range(n) if i != j for a in basis]


def conjugacy_orbit(n: int, q: int, x: Matrix) -> set[Matrix]:
    """The SL_n(F_q)-conjugacy class of x, by closure under elementary transvections."""
    fq = get_field(q)
    gens = _generators(fq, n)
    orbit = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for i, j, a in gens:
            z = _conjugate_by_transvection(fq, n, y, i, j, a)
            if z not in orbit:
                orbit.add(z)
                queue.append(z)
    return orbit


@lru_cache(maxsize=16)
def _census(n: int, q: int, cap: Optional[int]) -> ClassCensus:
    with timed(logger, f"class census of SL_{n}(F_{q})"):
        group = enumerate_group(n, q, cap)
        elements = sorted(group)
        seen: set[Matrix] = set()
        census = ClassCensus(n=n, q=q, group_order=group.order)
        for x in elements:
            if x in seen:
                continue
            orbit = conjugacy_orbit(n, q, x)
            seen |= orbit
            census.classes.append(
                ConjugacyClass(
                    representative=min(orbit),
                    size=len(orbit),
                    centralizer_order=group.order // len(orbit),
                )
            )
        census.classes.sort(key=lambda c: c.representative)
    logger.info(f"SL_{n}(F_{q}): {census.count} classes, order {census.group_order}")
    return census


def conjugacy_classes(n: int, q: int, cap: Optional[int] = None) -> ClassCensus:
    return _census(n, q, cap)


def class_count(n: int, q: int, cap: Optional[int] = None) -> int:
    return conjugacy_classes(n, q, cap).count


# ============================================================================
# Unipotent data
# ============================================================================


def jordan_unipotent(q: int, mu: Partition) -> Matrix:
    """1 + N with N the Jordan nilpotent of type mu (ones on the superdiagonal)."""
    return mat_add_identity(get_field(q), mu.size, jordan_nilpotent(mu))


def jordan_nilpotent(mu: Partition) -> Matrix:
    n = mu.size
    entries = [0] * (n * n)
    offset = 0
    for m in mu.parts:
        for i in range(m - 1):
            entries[(offset + i) * n + offset + i + 1] = 1
        offset += m
    return tuple(entries)


def mat_add_identity(fq: FiniteField, n: int, a: Matrix) -> Matrix:
    return tuple(fq.add(x, 1) if k % (n + 1) == 0 else x for k, x in enumerate(a))


def jordan_type(q: int, n: int, u: Matrix) -> Partition:
    """Jordan type of a unipotent matrix from the ranks of (u - 1)^k."""
    fq = get_field(q)
    nil = mat_sub(fq, u, identity(n))
    ranks = [n]
    power = identity(n)
    for _ in range(n):
        power = mat_mul(fq, n, power, nil)
        ranks.append(rank(fq, n, power))
    if ranks[-1] != 0:
        raise LabelError("matrix is not unipotent")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, n + 1)]
    return Partition.of(c for c in at_least if c).dual()


def is_unipotent(q: int, n: int, u: Matrix) -> bool:
    fq = get_field(q)
    nil = mat_sub(fq, u, identity(n))
    power = identity(n)
    for _ in range(n):
        power = mat_mul(fq, n, power, nil)
    return not any(power)


def unipotent_centralizer_order(n: int, q: int, mu: Partition, cap: Optional[int] = None) -> int:
    if mu.size != n:
        raise LabelError(f"{mu} is not a partition of {n}")
    order = _check_cap(n, q, cap)
    orbit = conjugacy_orbit(n, q, jordan_unipotent(q, mu))
    return order // len(orbit)


def unipotent_class_split(
    n: int, q: int, cap: Optional[int] = None
) -> dict[Partition, UnipotentSplit]:
    census = conjugacy_classes(n, q, cap)
    grouped: dict[Partition, list[ConjugacyClass]] = defaultdict(list)
    for cls in census.classes:
        if is_unipotent(q, n, cls.representative):
            grouped[jordan_type(q, n, cls.representative)].append(cls)
    return {
        mu: UnipotentSplit(
            mu=mu,
            representatives=tuple(c.representative for c in grouped[mu]),
            centralizer_orders=tuple(c.centralizer_order for c in grouped[mu]),
        )
        for mu in partitions_of(n)
    }
