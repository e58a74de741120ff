"""Integer partitions, multipartitions and tableau enumeration."""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from sympy.utilities.iterables import partitions as _sympy_partitions

from src.config import get_settings
from src.errors import CapExceededError, LabelError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for part in parts:
            if not isinstance(part, int) or part <= 0:
                raise LabelError(f"partition parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise LabelError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order, dropping zeros."""
        return cls(tuple(sorted((int(p) for p in parts if p != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse '3,2,1' (or '' for the empty partition)."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            return cls.of(int(chunk) for chunk in text.split(","))
        except ValueError as e:
            raise LabelError(f"cannot parse partition '{text}': {e}") from e

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Part i (0-based), zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def multiplicities(self) -> dict[int, int]:
        """Map part -> number of occurrences."""
        counts: dict[int, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def dual(self) -> "Partition":
        return dual_partition(self)

    def scaled(self, factor: int) -> "Partition":
        """Multiply every part by factor."""
        return Partition(tuple(factor * p for p in self.parts))

    def union(self, other: "Partition") -> "Partition":
        """Rearrange the parts of both partitions in decreasing order."""
        return Partition.of(self.parts + other.parts)

    def divided(self, d: int) -> "Partition":
        """Divide every part by d; every part must be divisible."""
        if any(p % d for p in self.parts):
            raise LabelError(f"{self} has a part not divisible by {d}")
        return Partition(tuple(p // d for p in self.parts))


@dataclass(frozen=True)
class Multipartition:
    """A sequence of partitions."""

    components: tuple[Partition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        for component in self.components:
            if not isinstance(component, Partition):
                raise LabelError(f"multipartition component is not a Partition: {component!r}")

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def merged(self) -> Partition:
        """All parts of all components rearranged into one partition."""
        return Partition.of(p for c in self.components for p in c.parts)


def dual_partition(la: Partition) -> Partition:
    """Return the conjugate partition."""
    if not la.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in la.parts if p > j) for j in range(la.parts[0])))


def b_invariant(la: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(la.parts))


n_value = b_invariant


@lru_cache(maxsize=None)
def _partitions_tuple(n: int) -> tuple[Partition, ...]:
    found = []
    for counts in _sympy_partitions(n):
        parts: list[int] = []
        for part, mult in counts.items():
            parts.extend([part] * mult)
        found.append(Partition.of(parts))
    return tuple(sorted(found, key=lambda la: la.parts, reverse=True))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise LabelError(f"cannot partition a negative integer: {n}")
    cap = get_settings().partition_size_cap
    if n > cap:
        raise CapExceededError("partition size", cap, n)
    if n == 0:
        return [Partition(())]
    return list(_partitions_tuple(n))


def dominates(la: Partition, mu: Partition) -> bool:
    """True when la >= mu in the dominance order (same size assumed)."""
    if la.size != mu.size:
        raise LabelError(f"dominance needs equal sizes: {la} vs {mu}")
    total_la = total_mu = 0
    for i in range(max(len(la), len(mu))):
        total_la += la[i]
        total_mu += mu[i]
        if total_la < total_mu:
            return False
    return True


def z_centralizer(rho: Partition) -> int:
    """z_rho = prod i^{m_i} m_i!, the centralizer order of a permutation of cycle type rho."""
    z = 1
    for part, mult in rho.multiplicities().items():
        z *= part**mult * factorial(mult)
    return z


def class_size(rho: Partition) -> int:
    """Number of permutations of cycle type rho."""
    return factorial(rho.size) // z_centralizer(rho)


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given as an image tuple on 0..m-1."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
            length += 1
        lengths.append(length)
    return Partition.of(lengths)


def representative_permutation(rho: Partition) -> tuple[int, ...]:
    """Standard permutation of cycle type rho: consecutive cycles (0 1 .. r-1)(r ..)."""
    images: list[int] = []
    start = 0
    for part in rho.parts:
        images.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(images)


def _horizontal_strips(
    shape: tuple[int, ...], bound: tuple[int, ...], size: int
) -> Iterator[tuple[int, ...]]:
    """Shapes shape <= kappa <= bound with kappa/shape a horizontal strip of the given size."""
    rows = len(bound)
    current = list(shape) + [0] * (rows - len(shape))

    def extend(row: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if row == rows:
            if remaining == 0:
                yield tuple(acc)
            return
        upper = bound[row]
        if row > 0:
            upper = min(upper, current[row - 1])
        for add in range(min(remaining, upper - current[row]), -1, -1):
            yield from extend(row + 1, remaining - add, acc + [current[row] + add])

    yield from extend(0, size, [])


def semistandard_tableaux(
    la: Partition, mu: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """
    Enumerate semistandard tableaux of shape la and content mu.

    Entries are 1..len(mu); each tableau is a tuple of rows (English notation).

    Args:
        la: Shape
        mu: Content (a composition; letter i occurs mu[i-1] times)

    Yields:
        Tableaux as tuples of row tuples
    """
    if la.size != sum(mu):
        raise LabelError(f"shape {la} and content {tuple(mu)} have different sizes")
    bound = la.parts

    def grow(
        letter: int, shape: tuple[int, ...], rows: tuple[tuple[int, ...], ...]
    ) -> Iterator[tuple[tuple[int, ...], ...]]:
        if letter > len(mu):
            yield tuple(r for r in rows if r)
            return
        for new_shape in _horizontal_strips(shape, bound, mu[letter - 1]):
            new_rows = tuple(
                rows[i] + (letter,) * (new_shape[i] - (shape[i] if i < len(shape) else 0))
                for i in range(len(bound))
            )
            yield from grow(letter + 1, new_shape, new_rows)

    yield from grow(1, tuple([0] * len(bound)), tuple(() for _ in bound))


def chain_of_shapes(tableau: Sequence[Sequence[int]], letters: int) -> list[tuple[int, ...]]:
    """Shapes filled by the letters <= i, for i = 0..letters."""
    return [
        tuple(sum(1 for entry in row if entry <= i) for row in tableau) for i in range(letters + 1)
    ]
