"""The characters Psi_x of Omega_theta1 and the location of z_E."""

from dataclasses import dataclass

from src.errors import DivisibilityError, LabelError, UniquenessError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.partitions import Partition
from src.exactalg.symmetric import SnCharLabel
from src.exactalg.wreath import ExtendedCharLabel, twisted_restriction_inner
from src.logging_config import get_logger
from src.orbits.components import zm1_quotient
from src.sheaves.census import EndoData, xm_group

logger = get_logger("sheaves.locate")


def psi_character(x: int, endo: EndoData) -> int:
    """Psi_x(y0^j) = omega^{-x j}: the character index -x of Omega_theta1."""
    k = endo.repeats
    if not 0 <= x < k:
        raise LabelError(f"x = {x} is not an element of X_M = Z/{k}")
    return (-x) % k


def psi_value(x: int, j: int, endo: EndoData) -> CycLaurent:
    return endo.omega.character_value(psi_character(x, endo), j)


def eps1_pullback(eps: int, d: int, mu: Partition, t: int, q: int) -> int:
    """eps of Z/d pulled back along A-bar_lambda = Z/t -> Z/d, as a character index of Z/t."""
    zm1_quotient(mu, t, q)
    if d < 1 or t % d:
        raise DivisibilityError(f"d = {d} must divide t = {t}")
    return (eps % d) * (t // d) % t


def _check_form(E: ExtendedCharLabel, mu: Partition, endo: EndoData) -> None:
    if E.repeats != endo.repeats or E.m != endo.factor_size:
        raise LabelError(f"{E} is not a character of W_theta1 for {endo.to_dict()}")
    expected = E.base.partition.dual().scaled(endo.t)
    if mu != expected:
        raise LabelError(f"orbit {mu} does not match t * (dual of {E.base.partition}) = {expected}")


def e_iota_for(E: ExtendedCharLabel, mu: Partition, endo: EndoData) -> SnCharLabel:
    """E_iota = E^{la u ... u la} (t/d copies) when E restricts to W0 as E^la x ... x E^la."""
    _check_form(E, mu, endo)
    union = Partition(())
    for _ in range(endo.repeats):
        union = union.union(E.base.partition)
    return SnCharLabel.of(union)


@dataclass(frozen=True)
class ZELocation:
    x_e: int
    z_e: int
    table: dict[int, CycLaurent]

    def to_dict(self) -> dict[str, object]:
        return {
            "x_E": self.x_e,
            "z_E": self.z_e,
            "multiplicities": {str(x): value.to_dict() for x, value in self.table.items()},
        }


def multiplicity_table(
    E: ExtendedCharLabel, mu: Partition, endo: EndoData
) -> dict[int, CycLaurent]:
    """<E x Psi_{x^-1}, E_iota> over W_theta1 for every x in X_M."""
    target = e_iota_for(E, mu, endo)
    return {
        x: twisted_restriction_inner(E, extra_twist=x, target=target)
        for x in range(endo.repeats)
    }


def locate_zE(E: ExtendedCharLabel, mu: Partition, endo: EndoData, z: int = 0) -> ZELocation:
    """
    The unique x_E in X_M^{F''} with multiplicity one, and its image z_E in A-bar_lambda^F.

    Raises UniquenessError, carrying the multiplicity table, unless exactly one x
    has multiplicity 1, every other x has multiplicity 0 and x_E is F''-fixed.
    """
    table = multiplicity_table(E, mu, endo)
    ones = [x for x, value in table.items() if value == 1]
    others_zero = all(value.is_zero() for x, value in table.items() if x not in ones)
    fixed = xm_group(endo.t, endo.d, endo.q).fixed_points()
    diagnostic = {
        "E": str(E),
        "mu": str(mu),
        "endo": endo.to_dict(),
        "multiplicities": {str(x): value.to_dict() for x, value in table.items()},
    }
    if len(ones) != 1 or not others_zero:
        raise UniquenessError(f"no unique x_E for {E} on {mu}", diagnostic)
    x_e = ones[0]
    if x_e not in fixed:
        raise UniquenessError(f"x_E = {x_e} is not F''-fixed for {E}", diagnostic)
    z_e = (z + endo.d * x_e) % endo.t
    logger.debug(f"x_E = {x_e}, z_E = {z_e} for {E} on {mu}")
    return ZELocation(x_e=x_e, z_e=z_e, table=table)


def alpha_E(E: ExtendedCharLabel, mu: Partition, endo: EndoData) -> CycLaurent:
    """The F''-twisted coset pairing of E x Psi_{x_E^-1} with E_iota."""
    location = locate_zE(E, mu, endo)
    target = e_iota_for(E, mu, endo)
    multiplier = endo.q % endo.repeats if endo.repeats > 1 else 1
    return twisted_restriction_inner(
        E, extra_twist=location.x_e, target=target, multiplier=multiplier
    )
