"""Irreducible characters of symmetric groups and Young-subgroup restriction."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from src.errors import LabelError
from src.exactalg.partitions import Partition, partitions_of, z_centralizer


@dataclass(frozen=True)
class SnCharLabel:
    """Irreducible character chi^partition of S_n; chi^(n) is the trivial character."""

    n: int
    partition: Partition

    def __post_init__(self) -> None:
        if self.partition.size != self.n:
            raise LabelError(f"character label {self.partition} is not a partition of {self.n}")

    @classmethod
    def of(cls, partition: Partition) -> "SnCharLabel":
        return cls(partition.size, partition)

    def tensor_sign(self) -> "SnCharLabel":
        """chi^la tensor sign = chi^{la*}."""
        return SnCharLabel(self.n, self.partition.dual())

    def is_trivial(self) -> bool:
        return self.partition.parts == (self.n,) or self.n == 0

    def is_sign(self) -> bool:
        return self.partition.parts == (1,) * self.n

    def __str__(self) -> str:
        return f"chi{self.partition}"


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    length = len(parts)
    return tuple(sorted(p + length - 1 - i for i, p in enumerate(parts)))


def _from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    parts = [b - (length - 1 - i) for i, b in enumerate(ordered)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(parts: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion on beta-sets; rho sorted decreasingly."""
    if not rho:
        return 1 if not parts else 0
    r, rest = rho[0], rho[1:]
    beta = _beta_set(parts)
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        # leg length = beads strictly between target and b
        leg = sum(1 for c in beta if target < c < b)
        moved = tuple(sorted((beads - {b}) | {target}))
        total += (-1) ** leg * _mn(_from_beta(moved), rest)
    return total


def sn_char_value(E: SnCharLabel, rho: Partition) -> int:
    """
    Character value chi^E(rho) by the Murnaghan-Nakayama rule.

    Args:
        E: Character label
        rho: Cycle type

    Returns:
        The integer character value
    """
    if rho.size != E.n:
        raise LabelError(f"cycle type {rho} does not match S_{E.n}")
    return _mn(E.partition.parts, rho.parts)


def character_degree(E: SnCharLabel) -> int:
    return sn_char_value(E, Partition((1,) * E.n))


def sn_inner_product(left: SnCharLabel, right: SnCharLabel) -> Fraction:
    """<chi^left, chi^right> over S_n (real characters)."""
    if left.n != right.n:
        raise LabelError(f"characters of S_{left.n} and S_{right.n} cannot be paired")
    return sum(
        (
            Fraction(sn_char_value(left, rho) * sn_char_value(right, rho), z_centralizer(rho))
            for rho in partitions_of(left.n)
        ),
        Fraction(0),
    )


def restriction_multiplicity(E: SnCharLabel, factors: Sequence[SnCharLabel]) -> int:
    """
    Multiplicity of the outer product of factors in E restricted to the Young subgroup.

    Computed as a character inner product over the Young subgroup, so it is the
    Littlewood-Richardson coefficient for two factors.

    Args:
        E: Character of S_n
        factors: Characters of S_{a_1}, ..., S_{a_k} with sum a_i = n

    Returns:
        Nonnegative integer multiplicity
    """
    if sum(f.n for f in factors) != E.n:
        raise LabelError(
            f"factor sizes {[f.n for f in factors]} do not add up to {E.n} for {E}"
        )
    total = Fraction(0)
    for types in product(*(partitions_of(f.n) for f in factors)):
        weight = Fraction(1)
        value = 1
        for f, rho in zip(factors, types):
            weight /= z_centralizer(rho)
            value *= sn_char_value(f, rho)
            if value == 0:
                break
        if value == 0:
            continue
        merged = Partition.of(p for rho in types for p in rho.parts)
        total += weight * value * sn_char_value(E, merged)
    if total.denominator != 1 or total < 0:
        raise LabelError(f"restriction multiplicity is not a nonnegative integer: {total}")
    return int(total)
