"""Inner products of generalized Gelfand-Graev characters with the X-basis."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.config import get_settings
from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import check_power_of
from src.exactalg.partitions import Partition, partitions_of, z_centralizer
from src.exactalg.symmetric import sn_char_value
from src.exactalg.zeta import Zeta, ZetaScaled
from src.fforacle.twist import solve_twist_c0
from src.green.omega import bp_polynomial, omega
from src.green.orders import group_order, q_poly_to_laurent, torus_order_poly
from src.green.polynomials import divide_exact
from src.logging_config import get_logger
from src.orbits.components import n_prime_mu
from src.orbits.cyclic import CyclicF
from src.orbits.dynkin import orbit_dims
from src.springer.blocks import (
    Block,
    PairLabel,
    block_members,
    check_member,
    e_iota,
    label_for,
    select_blocks,
    springer_map,
)

logger = get_logger("gggr.inner")


@dataclass(frozen=True)
class GGGRLabel:
    """Gamma_c (optionally Gamma_{c,xi}) for the nilpotent orbit of type orbit."""

    orbit: Partition
    c: int = 0
    xi: Optional[int] = None

    def validate(self, p: int, q: int) -> CyclicF:
        """The group A_lambda; raises if c or xi is out of range."""
        check_power_of(q, p)
        group = CyclicF(n_prime_mu(self.orbit, p), q)
        if not 0 <= self.c < group.fixed_order:
            raise LabelError(
                f"c = {self.c} is not a class of (A_lambda)_F of order {group.fixed_order}"
            )
        if self.xi is not None and not 0 <= self.xi < group.fixed_order:
            raise LabelError(f"xi = {self.xi} is not a character of A_lambda^F")
        return group


@dataclass
class GGGRRecord:
    block: Block
    iota: PairLabel
    value: ZetaScaled

    def to_dict(self) -> dict[str, object]:
        return {
            "block": self.block.to_dict(),
            "iota": self.iota.to_dict(),
            "value": self.value.to_dict(),
        }


def zeta_for(block: Block) -> Zeta:
    """The configured zeta of a block: principal and non-principal assignments."""
    settings = get_settings()
    choice = settings.zeta_principal if block.is_principal else settings.zeta_other
    return Zeta.from_choice(choice)


def y_value_on_twist(
    iota: PairLabel, c: int, c0: int, p: int, orbit: Optional[Partition] = None
) -> CycLaurent:
    """tau(c c0) for the character tau of iota, as a root of unity."""
    if orbit is not None and iota.orbit != orbit:
        raise LabelError(f"{iota} is not supported on the orbit {orbit}")
    order = n_prime_mu(iota.orbit, p)
    return CycLaurent.root_of_unity(order, iota.tau * (c + c0))


def _rank_sign(block: Block, iota: PairLabel) -> bool:
    return e_iota(iota, block.p).is_sign()


def gggr_x_inner_regular(
    c: int, iota: PairLabel, block: Block, zeta: Zeta, c0: int = 0
) -> ZetaScaled:
    """<Gamma_c, X_iota> for regular N: nonzero only when E_iota is the sign character."""
    check_member(iota, block)
    if not _rank_sign(block, iota):
        return ZetaScaled.zero(zeta)
    exponent = block.dim_center - orbit_dims(iota.orbit).codim_class
    eps_inverse = CycLaurent.root_of_unity(block.n_prime, -block.eps * (c + c0))
    return ZetaScaled(CycLaurent.u_power(exponent) * eps_inverse, -1, zeta)


def support_member(mu_n: Partition, block: Block) -> Optional[PairLabel]:
    """The unique member of the block supported on O_N, if any."""
    if mu_n.size != block.n or any(part % block.d for part in mu_n.parts):
        return None
    return springer_map(block, mu_n.divided(block.d))


def gggr_x_inner(
    c: int, mu_n: Partition, iota: PairLabel, block: Block, zeta: Zeta, c0: int = 0
) -> ZetaScaled:
    """Sum of q^{g} zeta^-1 BP_{iota'',iota'}(1/q) conj(Y_{iota''}(-N_c^*)).

    Here E_iota = E_iota' x sign.
    """
    check_member(iota, block)
    base = support_member(mu_n, block)
    if base is None:
        return ZetaScaled.zero(zeta)
    partner = label_for(block, e_iota(iota, block.p).tensor_sign())
    bp = bp_polynomial(base, partner, block)
    if bp.is_zero():
        return ZetaScaled.zero(zeta)
    exponent = (
        -orbit_dims(partner.orbit).codim_class
        + block.dim_center
        + orbit_dims(iota.orbit).dim_orbit
        - orbit_dims(mu_n).dim_orbit
    )
    y_bar = y_value_on_twist(base, c, c0, block.p).conj()
    value = CycLaurent.u_power(exponent) * bp.in_q(-2) * y_bar
    return ZetaScaled(value, -1, zeta)


def _twisted_weyl_average(first: PairLabel, second: PairLabel, block: Block) -> CycLaurent:
    """|W|^-1 sum_w Tr(w, E_first) Tr(w, E_second x sign) |Z^0_{L_w}^F|."""
    left = e_iota(first, block.p)
    right = e_iota(second, block.p).tensor_sign()
    total = CycLaurent.zero()
    for rho in partitions_of(block.rank):
        traces = sn_char_value(left, rho) * sn_char_value(right, rho)
        if traces:
            total = total + q_poly_to_laurent(torus_order_poly(rho)) * Fraction(
                traces, z_centralizer(rho)
            )
    return total


def gggr_projection_coeffs(
    c: int, mu_n: Partition, block: Block, zeta: Zeta, c0: int = 0
) -> dict[PairLabel, ZetaScaled]:
    """Coefficients of X_iota1 in the projection of Gamma_c onto the block."""
    members = block_members(block)
    base = support_member(mu_n, block)
    if base is None:
        return {iota1: ZetaScaled.zero(zeta) for iota1 in members}
    y_bar = y_value_on_twist(base, c, c0, block.p).conj()
    dim_quotient = block.n * block.n - 1 - block.dim_center
    dim_o = orbit_dims(mu_n).dim_orbit
    coeffs: dict[PairLabel, ZetaScaled] = {}
    for iota1 in members:
        total = CycLaurent.zero()
        for iota in members:
            bp = bp_polynomial(base, iota, block)
            if bp.is_zero():
                continue
            average = _twisted_weyl_average(iota, iota1, block)
            if average.is_zero():
                continue
            exponent = (
                -orbit_dims(iota1.orbit).dim_orbit
                + orbit_dims(iota.orbit).dim_orbit
                - dim_o
                + dim_quotient
            )
            total = total + CycLaurent.u_power(exponent) * average * bp.in_q(-2)
        coeffs[iota1] = ZetaScaled(total * y_bar, -1, zeta)
    return coeffs


def projected_inner(
    coeffs: dict[PairLabel, ZetaScaled], iota: PairLabel, block: Block
) -> ZetaScaled:
    """sum over iota1 of coeff(iota1) <X_iota1, X_iota>, with <X, X> = omega / |G^F|."""
    check_member(iota, block)
    result: Optional[ZetaScaled] = None
    for iota1, coeff in coeffs.items():
        term = coeff * omega(iota1, iota, block)
        result = term if result is None else result + term
    if result is None:
        raise LabelError("no coefficients to pair")
    return ZetaScaled(
        divide_exact(result.coefficient, group_order(block.n)), result.zeta_power, result.zeta
    )


def integrality_holds(value: ZetaScaled, iota: PairLabel, block: Block) -> bool:
    """value / q^{(dim Z_L - codim supp(iota))/2} lies in O[q] for O the integers of Q(zeta_N)."""
    shift = block.dim_center - orbit_dims(iota.orbit).codim_class
    rescaled = value.coefficient * CycLaurent.u_power(-shift)
    return rescaled.is_integral() and all(k >= 0 for k in rescaled.u_powers())


def resolve_c0(n: int, q: int, mu_n: Partition, c0: Optional[int] = None) -> int:
    """Given c0, or the class found by the explicit conjugator search."""
    if c0 is not None:
        return c0
    return solve_twist_c0(n, q, mu_n).c0


def gggr_table(
    c: int,
    mu_n: Partition,
    n: int,
    p: int,
    q: int,
    c0: Optional[int] = None,
    zeta: Optional[Zeta] = None,
    d: Optional[int] = None,
    regular: bool = False,
) -> list[GGGRRecord]:
    """<Gamma_c, X_iota> for the blocks of SL_n (all, or those of order d) and their members.

    With regular=True the orbit must be (n) and the regular-orbit closed form is used.
    """
    if mu_n.size != n:
        raise LabelError(f"{mu_n} is not a partition of {n}")
    if regular and mu_n != Partition((n,)):
        raise LabelError(f"the regular closed form needs the orbit ({n}), got {mu_n}")
    GGGRLabel(mu_n, c).validate(p, q)
    twist = resolve_c0(n, q, mu_n, c0)
    records = []
    for block in select_blocks(n, p, d):
        block_zeta = zeta if zeta is not None else zeta_for(block)
        for iota in block_members(block):
            if regular:
                value = gggr_x_inner_regular(c, iota, block, block_zeta, twist)
            else:
                value = gggr_x_inner(c, mu_n, iota, block, block_zeta, twist)
            records.append(GGGRRecord(block=block, iota=iota, value=value))
    logger.info(f"GGGR table for {mu_n} in SL_{n}(F_{q}): {len(records)} entries, c0 = {twist}")
    return records
