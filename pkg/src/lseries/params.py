"""Parameter sets of Lusztig series: E-orbits, M-bar_{s,E}, M_{s,E} and M-bar_{s,N}."""

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from src.errors import DivisibilityError, LabelError
from src.exactalg.numbers import characteristic
from src.exactalg.partitions import Partition, partitions_of
from src.logging_config import get_logger
from src.lseries.semisimple import (
    SemisimpleClassLabel,
    StabilizerData,
    enumerate_semisimple_classes,
)
from src.orbits.components import zm1_quotient
from src.orbits.cyclic import CyclicF

logger = get_logger("lseries.params")

WCharacter = tuple[Partition, ...]


def _push(perm: Sequence[int], character: WCharacter) -> WCharacter:
    """Transport of a W_shat character along a position permutation: (pE)_{p(i)} = E_i."""
    result = list(character)
    for i, part in enumerate(character):
        result[perm[i]] = part
    return tuple(result)


@dataclass(frozen=True)
class EOrbit:
    """An Omega_s-orbit on the irreducible characters of W_shat."""

    representative: WCharacter
    size: int
    stabilizer: CyclicF
    f_stable: bool
    base_point: Optional[int] = None

    def to_dict(self) -> dict[str, object]:
        return {
            "representative": [str(p) for p in self.representative],
            "size": self.size,
            "stabilizer": self.stabilizer.to_dict(),
            "f_stable": self.f_stable,
            "base_point": self.base_point,
        }


@dataclass(frozen=True)
class ParamSetBar:
    """
    (Omega_{s,E}^{F'})^ x (Omega~_{s,E})_{F'}.

    characters index the characters of the cyclic group Omega_{s,E}^{F'};
    twisted_classes are elements of Omega_s (as multiples of its generator)
    representing the F'-twisted classes of the coset Omega_{s,E} a_E.
    """

    characters: tuple[int, ...]
    twisted_classes: tuple[int, ...]
    base_point: int

    @property
    def size(self) -> int:
        return len(self.characters) * len(self.twisted_classes)

    def elements(self) -> list[tuple[int, int]]:
        return list(product(self.characters, self.twisted_classes))

    def to_dict(self) -> dict[str, object]:
        return {
            "characters": list(self.characters),
            "twisted_classes": list(self.twisted_classes),
            "base_point": self.base_point,
            "size": self.size,
        }


@dataclass(frozen=True)
class ParamSetBarN:
    """(A-bar_lambda)_F x (A-bar_lambda^F)^."""

    a_bar: CyclicF
    classes: tuple[int, ...]
    characters: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.classes) * len(self.characters)

    def elements(self) -> list[tuple[int, int]]:
        return list(product(self.classes, self.characters))

    def to_dict(self) -> dict[str, object]:
        return {
            "a_bar": self.a_bar.to_dict(),
            "classes": list(self.classes),
            "characters": list(self.characters),
            "size": self.size,
        }


def all_w_characters(stab: StabilizerData) -> list[WCharacter]:
    return [tuple(choice) for choice in product(*(partitions_of(m) for m in stab.multiplicities))]


def e_orbits(stab: StabilizerData) -> list[EOrbit]:
    """Omega_s-orbits on (W_shat)^, with F'-stability and the base point a_E."""
    omega = stab.omega.order
    rotations = [stab.rotation_power(k) for k in range(omega)]
    seen: set[WCharacter] = set()
    orbits = []
    for character in all_w_characters(stab):
        if character in seen:
            continue
        members = {_push(rotations[k], character) for k in range(omega)}
        seen.update(members)
        representative = min(members)
        moved = _push(stab.frobenius, representative)
        base_point = next(
            (k for k in range(omega) if _push(rotations[k], moved) == representative), None
        )
        orbits.append(
            EOrbit(
                representative=representative,
                size=len(members),
                stabilizer=CyclicF(omega // len(members), stab.label.q),
                f_stable=base_point is not None,
                base_point=base_point,
            )
        )
    return sorted(orbits, key=lambda orbit: orbit.representative)


def param_set_bar(stab: StabilizerData, orbit: EOrbit) -> ParamSetBar:
    if not orbit.f_stable or orbit.base_point is None:
        raise LabelError(f"E-orbit of {[str(p) for p in orbit.representative]} is not F'-stable")
    g = orbit.stabilizer.fixed_order
    index = stab.omega.order // orbit.stabilizer.order
    return ParamSetBar(
        characters=tuple(range(g)),
        twisted_classes=tuple((orbit.base_point + j * index) % stab.omega.order for j in range(g)),
        base_point=orbit.base_point,
    )


def m_set(orbit: EOrbit) -> list[tuple[int, int]]:
    """M_{s,E} = (Omega_{s,E}^)^{F'} x Omega_{s,E}^{F'}."""
    group = orbit.stabilizer
    return list(product(group.fixed_characters(), group.fixed_points()))


def m_set_size(stab: StabilizerData, orbit: EOrbit) -> int:
    if not orbit.f_stable:
        raise LabelError("M_{s,E} needs an F'-stable E-orbit")
    return len(m_set(orbit))


def param_set_bar_N(t: int, mu: Partition, q: int) -> ParamSetBarN:
    quotient = zm1_quotient(mu, t, q)
    a_bar = quotient.target
    return ParamSetBarN(
        a_bar=a_bar,
        classes=tuple(a_bar.coinvariants()),
        characters=tuple(range(a_bar.fixed_order)),
    )


@dataclass(frozen=True)
class CyclicBijection:
    """
    The identifications M-bar_{s,E} ~ M-bar_{s,N} and M_{s,E} ~ M_{s,N} for cyclic Omega_s ~ A-bar.

    All four maps are realized on indices mod g = |Omega_s^{F'}| = |A-bar^F|:
    f sends the character j of Omega_s^{F'} to the class j of (A-bar)_F, h sends the
    twisted class x of Omega_s to the character xi_x, and f2, h2 are the fixed-point
    analogues used on M_{s,E}.
    """

    order: int
    f: dict[int, int] = field(default_factory=dict)
    h: dict[int, int] = field(default_factory=dict)
    f2: dict[int, int] = field(default_factory=dict)
    h2: dict[int, int] = field(default_factory=dict)

    def bar_map(self, label: tuple[int, int]) -> tuple[int, int]:
        """(eps', z') in M-bar_{s,E} -> (c', xi') in M-bar_{s,N}."""
        eps, z = label
        return self.f[eps % self.order], self.h[z % self.order]

    def fixed_map(self, label: tuple[int, int]) -> tuple[int, int]:
        """(eps, z) in M_{s,E} -> (c, xi) in M_{s,N}."""
        eps, z = label
        return self.f2[eps % self.order], self.h2[z % self.order]


def cyclic_bijection(
    t: int, q: int, omega: Optional[CyclicF] = None, a_bar: Optional[CyclicF] = None
) -> CyclicBijection:
    """Generator-to-generator isomorphisms between the Omega_s side and the A-bar side."""
    omega = omega or CyclicF(t, q)
    a_bar = a_bar or CyclicF(t, q)
    if omega.fixed_order != a_bar.fixed_order:
        raise LabelError(
            f"|Omega_s^F'| = {omega.fixed_order} differs from |A-bar^F| = {a_bar.fixed_order}"
        )
    g = omega.fixed_order
    identity = {k: k for k in range(g)}
    return CyclicBijection(
        order=g, f=dict(identity), h=dict(identity), f2=dict(identity), h2=dict(identity)
    )


@dataclass(frozen=True)
class SeriesEntry:
    label: SemisimpleClassLabel
    stabilizer: StabilizerData
    orbit: EOrbit
    size: int

    def to_dict(self) -> dict[str, object]:
        return {
            "class": self.label.to_dict(),
            "stabilizer": self.stabilizer.to_dict(),
            "e_orbit": self.orbit.to_dict(),
            "size": self.size,
        }


def series_table(n: int, q: int) -> list[SeriesEntry]:
    """Every (class, F'-stable E-orbit, |M-bar_{s,E}|): the parametrization of Irr SL_n(F_q)."""
    entries = []
    for label, stab in enumerate_semisimple_classes(n, q):
        for orbit in e_orbits(stab):
            if orbit.f_stable:
                entries.append(SeriesEntry(label, stab, orbit, param_set_bar(stab, orbit).size))
    return entries


def irr_count(n: int, q: int) -> int:
    total = sum(entry.size for entry in series_table(n, q))
    logger.info(f"SL_{n}(F_{q}): {total} irreducible characters from Lusztig series")
    return total


@dataclass(frozen=True)
class CenterSizeIdentity:
    """|Z^F / (Z)_d^F| against |(Z^F S^F / S^F)^| for GL_d^{n/d}."""

    n: int
    d: int
    q: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict[str, object]:
        return {"n": self.n, "d": self.d, "q": self.q, "lhs": self.lhs, "rhs": self.rhs,
                "holds": self.holds}


def center_size_identity(n: int, d: int, q: int) -> CenterSizeIdentity:
    characteristic(q)
    if d < 1 or n % d:
        raise DivisibilityError(f"d = {d} must divide n = {n}")
    r = n // d
    torsion = sum(1 for z in range(q - 1) if (d * z) % (q - 1) == 0)
    image = {(d * z) % (q - 1) for z in range(q - 1)}
    lhs = ((q - 1) // torsion) ** r
    rhs = len(image) ** r
    return CenterSizeIdentity(n=n, d=d, q=q, lhs=lhs, rhs=rhs)
