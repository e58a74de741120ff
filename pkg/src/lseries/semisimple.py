"""F-stable semisimple classes of PGL_n and their stabilizer data.

Eigenvalues live in F_{q^K}^* for K = lcm(1..n), written additively as residues
mod Q = q^K - 1 so that Frobenius is x -> q x and a scalar is a shift. A class of
PGL_n is a multiset T of n residues up to shift; it is F-stable when
q T + a = T for some a.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import factorial, lcm
from typing import Iterator, Optional

from src.config import get_settings
from src.errors import CapExceededError, DivisibilityError, LabelError
from src.exactalg.numbers import characteristic
from src.exactalg.partitions import Partition, partitions_of
from src.logging_config import get_logger
from src.orbits.cyclic import CyclicF

logger = get_logger("lseries.semisimple")


def working_exponent(n: int) -> int:
    return lcm(*range(1, n + 1))


def working_modulus(n: int, q: int) -> int:
    return q ** working_exponent(n) - 1


def canonical_form(residues: tuple[int, ...], modulus: int) -> tuple[int, ...]:
    """Least sorted representative of {T - t : t in T}."""
    return min(tuple(sorted((x - t) % modulus for x in residues)) for t in set(residues))


@dataclass(frozen=True, order=True)
class SemisimpleClassLabel:
    """Canonical eigenvalue data of an F-stable semisimple class of PGL_n."""

    n: int
    q: int
    residues: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return working_modulus(self.n, self.q)

    def distinct(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.residues)))

    def multiplicity(self, x: int) -> int:
        return self.residues.count(x % self.modulus)

    def as_fractions(self) -> list[str]:
        """Residues written as fractions of the full turn, x / Q."""
        return [str(Fraction(x, self.modulus)) for x in self.residues]

    def __str__(self) -> str:
        return "{" + ", ".join(self.as_fractions()) + "}"

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "q": self.q,
            "working_exponent": working_exponent(self.n),
            "residues": list(self.residues),
            "eigenvalue_angles": self.as_fractions(),
        }


@dataclass(frozen=True)
class StabilizerData:
    """
    W_s = W_shat semidirect Omega_s for one class.

    Positions are the distinct residues of the label in sorted order.
    Omega_s is the group of shifts u with T + u = T, cyclic of order omega_order,
    generated by Q / omega_order. F' acts on positions by x -> q x + shift and on
    Omega_s by multiplication by q.
    """

    label: SemisimpleClassLabel
    multiplicities: tuple[int, ...]
    omega: CyclicF
    shift: int
    frobenius: tuple[int, ...]
    rotation: tuple[int, ...]

    @property
    def w_hat_shape(self) -> Partition:
        """Sizes of the symmetric-group factors of W_shat."""
        return Partition.of(self.multiplicities)

    @property
    def w_hat_order(self) -> int:
        order = 1
        for m in self.multiplicities:
            order *= factorial(m)
        return order

    @property
    def w_s_order(self) -> int:
        return self.w_hat_order * self.omega.order

    def rotation_power(self, k: int) -> tuple[int, ...]:
        """Position permutation of the shift k * Q / |Omega_s|."""
        perm = tuple(range(len(self.multiplicities)))
        for _ in range(k % self.omega.order):
            perm = tuple(self.rotation[i] for i in perm)
        return perm

    def to_dict(self) -> dict[str, object]:
        return {
            "label": self.label.to_dict(),
            "w_hat_shape": list(self.w_hat_shape.parts),
            "w_hat_order": self.w_hat_order,
            "omega": self.omega.to_dict(),
            "w_s_order": self.w_s_order,
            "frobenius_shift": self.shift,
        }


def stabilizer_data(label: SemisimpleClassLabel) -> StabilizerData:
    modulus = label.modulus
    distinct = label.distinct()
    index = {x: i for i, x in enumerate(distinct)}
    counts = Counter(label.residues)
    residues = tuple(sorted(label.residues))

    translations = [
        u for u in distinct
        if tuple(sorted((x + u) % modulus for x in residues)) == residues
    ]
    omega_order = len(translations)

    shift: Optional[int] = None
    for a in distinct:
        if tuple(sorted((label.q * x + a) % modulus for x in residues)) == residues:
            shift = a
            break
    if shift is None:
        raise LabelError(f"class {label} is not F-stable")

    frobenius = tuple(index[(label.q * x + shift) % modulus] for x in distinct)
    generator = modulus // omega_order
    rotation = tuple(index[(x + generator) % modulus] for x in distinct)
    return StabilizerData(
        label=label,
        multiplicities=tuple(counts[x] for x in distinct),
        omega=CyclicF(omega_order, label.q),
        shift=shift,
        frobenius=frobenius,
        rotation=rotation,
    )


def _check_caps(n: int, q: int) -> None:
    settings = get_settings()
    if n > settings.semisimple_n_cap:
        raise CapExceededError("semisimple classes: n", settings.semisimple_n_cap, n)
    if q > settings.semisimple_q_cap:
        raise CapExceededError("semisimple classes: q", settings.semisimple_q_cap, q)
    characteristic(q)


def _frobenius_orbits(q: int, k: int, modulus: int) -> list[tuple[int, ...]]:
    """x -> q x orbits of exact length k on F_{q^k}^* inside Z/modulus."""
    step = modulus // (q**k - 1)
    seen: set[int] = set()
    orbits = []
    for j in range(q**k - 1):
        x = j * step
        if x in seen:
            continue
        orbit = [x]
        y = (q * x) % modulus
        while y != x:
            orbit.append(y)
            y = (q * y) % modulus
        seen.update(orbit)
        if len(orbit) == k:
            orbits.append(tuple(orbit))
    return orbits


def _stable_multisets(n: int, q: int, modulus: int) -> Iterator[tuple[int, ...]]:
    orbits_by_length = {k: _frobenius_orbits(q, k, modulus) for k in range(1, n + 1)}
    for shape in partitions_of(n):
        counts = shape.multiplicities()
        choices = [
            combinations_with_replacement(orbits_by_length[k], m) for k, m in sorted(counts.items())
        ]
        for picked in product(*[list(c) for c in choices]):
            yield tuple(x for group in picked for orbit in group for x in orbit)


@lru_cache(maxsize=None)
def _enumerate(n: int, q: int) -> tuple[tuple[SemisimpleClassLabel, StabilizerData], ...]:
    modulus = working_modulus(n, q)
    forms = {canonical_form(residues, modulus) for residues in _stable_multisets(n, q, modulus)}
    result = []
    for form in sorted(forms):
        label = SemisimpleClassLabel(n=n, q=q, residues=form)
        result.append((label, stabilizer_data(label)))
    logger.info(f"PGL_{n}(F_{q}): {len(result)} F-stable semisimple classes")
    return tuple(result)


def enumerate_semisimple_classes(
    n: int, q: int
) -> list[tuple[SemisimpleClassLabel, StabilizerData]]:
    """All F-stable semisimple classes of PGL_n over F_q with stabilizer data."""
    if n < 1:
        raise LabelError(f"n must be positive: {n}")
    _check_caps(n, q)
    return list(_enumerate(n, q))


def special_class(n: int, t: int, q: int) -> tuple[SemisimpleClassLabel, StabilizerData]:
    """Diag(1,..,1, z,..,z, ..., z^{t-1},..) with blocks of size n/t, z of order t."""
    p = characteristic(q)
    if t < 1 or n % t:
        raise DivisibilityError(f"t = {t} must divide n = {n}")
    if t % p == 0:
        raise DivisibilityError(f"t = {t} must be prime to p = {p}")
    modulus = working_modulus(n, q)
    step = modulus // t
    residues = tuple(sorted(k * step for k in range(t) for _ in range(n // t)))
    label = SemisimpleClassLabel(n=n, q=q, residues=canonical_form(residues, modulus))
    return label, stabilizer_data(label)
