"""Kostka-Foulkes polynomials by charge, with a Hall-Littlewood transition oracle."""

from functools import lru_cache
from typing import Sequence

from src.errors import LabelError
from src.exactalg.partitions import (
    Partition,
    chain_of_shapes,
    dominates,
    partitions_of,
    semistandard_tableaux,
)
from src.green.polynomials import IntPolynomial
from src.logging_config import get_logger

logger = get_logger("green.kostka")


def reading_word(tableau: Sequence[Sequence[int]]) -> list[int]:
    """Rows from bottom to top, each read left to right."""
    return [entry for row in reversed(tableau) for entry in row]


def charge(word: Sequence[int]) -> int:
    """Charge of a word whose content is a partition.

    Standard subwords are peeled off repeatedly: start at the rightmost 1,
    then look leftwards (cyclically) for 2, 3, ...; each wrap-around raises
    the index by one, and the charge adds up the indices.
    """
    letters = list(word)
    total = 0
    while letters:
        top = max(letters)
        pos = max(i for i, a in enumerate(letters) if a == 1)
        chosen = [pos]
        index = 0
        for letter in range(2, top + 1):
            left = [i for i in range(pos) if letters[i] == letter]
            if left:
                pos = max(left)
            else:
                index += 1
                pos = max(i for i, a in enumerate(letters) if a == letter)
            total += index
            chosen.append(pos)
        letters = [a for i, a in enumerate(letters) if i not in set(chosen)]
    return total


def _check_sizes(la: Partition, mu: Partition) -> None:
    if la.size != mu.size:
        raise LabelError(f"Kostka polynomial needs |lambda| = |mu|: {la}, {mu}")


@lru_cache(maxsize=None)
def kostka(la: Partition, mu: Partition) -> IntPolynomial:
    """K_{la,mu}(t) as the charge generating function over SSYT(la, mu)."""
    _check_sizes(la, mu)
    if not dominates(la, mu):
        return IntPolynomial.zero()
    coeffs: dict[int, int] = {}
    for tableau in semistandard_tableaux(la, mu.parts):
        c = charge(reading_word(tableau))
        coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return IntPolynomial.zero()
    return IntPolynomial([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


def kostka_number(la: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape la and content mu."""
    _check_sizes(la, mu)
    return sum(1 for _ in semistandard_tableaux(la, mu.parts))


# ============================================================================
# Hall-Littlewood oracle
# ============================================================================


def _psi_strip(outer: tuple[int, ...], inner: tuple[int, ...]) -> IntPolynomial:
    """psi_{outer/inner}(t) for a horizontal strip: prod over j in J of (1 - t^{m_j(inner)})."""
    outer_p = Partition.of(outer)
    inner_p = Partition.of(inner)
    outer_dual = outer_p.dual().parts
    inner_dual = inner_p.dual().parts
    width = len(outer_dual) + 1

    def theta(j: int) -> int:
        o = outer_dual[j - 1] if j <= len(outer_dual) else 0
        i = inner_dual[j - 1] if j <= len(inner_dual) else 0
        return o - i

    multiplicities = inner_p.multiplicities()
    result = IntPolynomial.one()
    for j in range(1, width + 1):
        if theta(j) == 0 and theta(j + 1) == 1:
            factor = IntPolynomial.one() - IntPolynomial.t_power(multiplicities.get(j, 0))
            result = result * factor
    return result


@lru_cache(maxsize=None)
def hall_littlewood_monomial(mu: Partition) -> dict[Partition, IntPolynomial]:
    """Coefficients of the monomial functions m_nu in P_mu(x; t)."""
    expansion: dict[Partition, IntPolynomial] = {}
    for nu in partitions_of(mu.size):
        total = IntPolynomial.zero()
        for tableau in semistandard_tableaux(mu, nu.parts):
            shapes = chain_of_shapes(tableau, len(nu))
            weight = IntPolynomial.one()
            for inner, outer in zip(shapes, shapes[1:]):
                weight = weight * _psi_strip(outer, inner)
            total = total + weight
        if not total.is_zero():
            expansion[nu] = total
    return expansion


@lru_cache(maxsize=None)
def kostka_oracle(la: Partition, mu: Partition) -> IntPolynomial:
    """K_{la,mu}(t) from s_la = sum K_{la,mu}(t) P_mu, solved triangularly."""
    _check_sizes(la, mu)
    n = la.size
    solved: dict[Partition, IntPolynomial] = {}
    for nu in partitions_of(n):
        value = IntPolynomial((kostka_number(la, nu),))
        for kappa, k_poly in solved.items():
            coefficient = hall_littlewood_monomial(kappa).get(nu)
            if coefficient is not None and not k_poly.is_zero():
                value = value - k_poly * coefficient
        solved[nu] = value
        if nu == mu:
            break
    logger.debug(f"Kostka oracle K_{la},{mu} = {solved[mu]}")
    return solved[mu]
