"""Extended characters of S_m wreath Z/k and sums over its cosets."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Callable, Iterator, Sequence

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.partitions import (
    Partition,
    cycle_type,
    partitions_of,
    representative_permutation,
    z_centralizer,
)
from src.exactalg.symmetric import SnCharLabel, sn_char_value


@dataclass(frozen=True)
class ExtendedCharLabel:
    """
    Extension of E2 x ... x E2 (k factors) from (S_m)^k to (S_m)^k semidirect Z/k.

    twist = 0 is the tensor-induced extension: on (gamma^j, (w_1..w_k)) it is the
    product over cycles of b -> b+j of chi_{E2}(ordered product along the cycle).
    twist = s multiplies the value on gamma^j by zeta_k^{s j}.
    """

    base: SnCharLabel
    repeats: int
    twist: int = 0

    def __post_init__(self) -> None:
        if self.repeats < 1:
            raise LabelError(f"repeats must be positive: {self.repeats}")
        object.__setattr__(self, "twist", self.twist % self.repeats)

    @property
    def m(self) -> int:
        return self.base.n

    def __str__(self) -> str:
        return f"{self.base}^{self.repeats}[twist {self.twist}]"


@dataclass(frozen=True)
class WreathElement:
    """
    Element of S_m wreath S_k acting on k*m points by (b, p) -> (pi(b), a_b(p)).

    block_perm[b] = pi(b); factors[b] = a_b as an image tuple on 0..m-1.
    """

    block_perm: tuple[int, ...]
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.block_perm)
        if sorted(self.block_perm) != list(range(k)):
            raise LabelError(f"block permutation is not a permutation: {self.block_perm}")
        if len(self.factors) != k:
            raise LabelError(f"expected {k} factors, got {len(self.factors)}")
        sizes = {len(a) for a in self.factors}
        if len(sizes) > 1:
            raise LabelError(f"factors act on different point sets: {sorted(sizes)}")
        for a in self.factors:
            if sorted(a) != list(range(len(a))):
                raise LabelError(f"factor is not a permutation: {a}")

    @classmethod
    def cyclic(cls, j: int, factors: Sequence[Sequence[int]]) -> "WreathElement":
        """(gamma^j, factors) with gamma the cyclic block shift b -> b+1."""
        k = len(factors)
        return cls(tuple((b + j) % k for b in range(k)), tuple(tuple(a) for a in factors))

    @property
    def m(self) -> int:
        return len(self.factors[0]) if self.factors else 0

    def block_cycles(self) -> list[list[int]]:
        seen: set[int] = set()
        cycles = []
        for start in range(len(self.block_perm)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            b = self.block_perm[start]
            while b != start:
                cycle.append(b)
                seen.add(b)
                b = self.block_perm[b]
            cycles.append(cycle)
        return cycles

    def cycle_products(self) -> list[tuple[int, ...]]:
        """For each block cycle (b_0, ..., b_{L-1}): a_{b_{L-1}} o ... o a_{b_0}."""
        products = []
        for cycle in self.block_cycles():
            perm = tuple(range(self.m))
            for b in cycle:
                a = self.factors[b]
                perm = tuple(a[x] for x in perm)
            products.append(perm)
        return products

    def point_permutation(self) -> tuple[int, ...]:
        m = self.m
        images = [0] * (m * len(self.block_perm))
        for b, a in enumerate(self.factors):
            for p in range(m):
                images[b * m + p] = self.block_perm[b] * m + a[p]
        return tuple(images)

    def point_cycle_type(self) -> Partition:
        return cycle_type(self.point_permutation())


def extension_value(base: SnCharLabel, element: WreathElement) -> int:
    """Untwisted tensor-induced extension of base^{x k} evaluated at element."""
    if element.m != base.n:
        raise LabelError(f"element acts on blocks of size {element.m}, character on {base.n}")
    value = 1
    for perm in element.cycle_products():
        value *= sn_char_value(base, cycle_type(perm))
        if value == 0:
            break
    return value


def extended_char_value(
    E: ExtendedCharLabel, element: tuple[int, Sequence[Partition]]
) -> CycLaurent:
    """
    Value of the extension E at (gamma^j, (w_1, ..., w_k)).

    Class labels w_i are replaced by the standard representative permutation of
    that cycle type.

    Args:
        E: Extended character label
        element: Pair (j, class labels of the k factors)

    Returns:
        The exact value
    """
    j, classes = element
    if len(classes) != E.repeats:
        raise LabelError(f"expected {E.repeats} factor classes, got {len(classes)}")
    for rho in classes:
        if rho.size != E.m:
            raise LabelError(f"class {rho} is not a class of S_{E.m}")
    wreath = WreathElement.cyclic(j, [representative_permutation(rho) for rho in classes])
    value = extension_value(E.base, wreath)
    return CycLaurent.root_of_unity(E.repeats, E.twist * j) * value


def block_cycle_lengths(k: int, multiplier: int, j: int) -> list[int]:
    """Cycle lengths of the block map b -> multiplier * (b + j) mod k."""
    if gcd(multiplier, k) != 1:
        raise LabelError(f"block multiplier {multiplier} is not invertible mod {k}")
    perm = tuple((multiplier * (b + j)) % k for b in range(k))
    return list(cycle_type(perm).parts)


def averaged_cycle_types(m: int, cycles: int) -> Iterator[tuple[Fraction, tuple[Partition, ...]]]:
    """
    Distribution of the cycle products over uniformly random factors.

    The cycle products of distinct block cycles are independent and uniform in
    S_m, so each tuple of cycle types carries weight prod 1/z_rho.
    """
    for types in product(partitions_of(m), repeat=cycles):
        weight = Fraction(1)
        for rho in types:
            weight /= z_centralizer(rho)
        yield weight, types


def coset_average(
    m: int,
    k: int,
    multiplier: int,
    value: Callable[[int, list[int], tuple[Partition, ...]], CycLaurent],
) -> CycLaurent:
    """
    Average of a function over the coset (block map b -> multiplier * b) * (S_m wreath Z/k).

    Args:
        m: Block size
        k: Number of blocks
        multiplier: Block multiplier of the coset representative (1 for the group itself)
        value: f(j, block cycle lengths, cycle-product types) for the element with shift j

    Returns:
        (1 / |S_m wreath Z/k|) * sum of f over the coset
    """
    total = CycLaurent.zero()
    for j in range(k):
        lengths = block_cycle_lengths(k, multiplier, j)
        for weight, types in averaged_cycle_types(m, len(lengths)):
            term = value(j, lengths, types)
            if not term.is_zero():
                total = total + term * weight
    return total / k


def point_type(lengths: Sequence[int], types: Sequence[Partition]) -> Partition:
    """Cycle type on k*m points.

    A cycle of length l in the product over a block cycle of length L gives l*L.
    """
    return Partition.of(L * part for L, rho in zip(lengths, types) for part in rho.parts)


def twisted_restriction_inner(
    E: ExtendedCharLabel, extra_twist: int, target: SnCharLabel, multiplier: int = 1
) -> CycLaurent:
    """
    <E tensor omega^extra_twist, Res target> over a coset of S_m wreath Z/k inside S_{km}.

    With multiplier = 1 this is the ordinary inner product over the group; other
    multipliers give the twisted-coset pairing (the coset representative is the
    block permutation b -> multiplier * b, on which the cyclic characters are 1).
    """
    k = E.repeats
    if target.n != E.m * k:
        raise LabelError(f"{target} is not a character of S_{E.m * k}")
    exponent = E.twist + extra_twist

    def value(j: int, lengths: list[int], types: tuple[Partition, ...]) -> CycLaurent:
        ext = 1
        for rho in types:
            ext *= sn_char_value(E.base, rho)
            if ext == 0:
                return CycLaurent.zero()
        chi = sn_char_value(target, point_type(lengths, types))
        if chi == 0:
            return CycLaurent.zero()
        return CycLaurent.root_of_unity(k, exponent * j) * (ext * chi)

    return coset_average(E.m, k, multiplier, value)


def extended_norm(E: ExtendedCharLabel) -> CycLaurent:
    """<E, E> over S_m wreath Z/k; equals 1 for an irreducible extension."""

    def value(j: int, lengths: list[int], types: tuple[Partition, ...]) -> CycLaurent:
        ext = 1
        for rho in types:
            ext *= sn_char_value(E.base, rho)
        return CycLaurent.rational(ext * ext)

    return coset_average(E.m, E.repeats, 1, value)
