"""P-matrix entries, omega and the X-basis Gram data on a block."""

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import characteristic, check_power_of
from src.exactalg.partitions import dominates, partitions_of, z_centralizer
from src.exactalg.symmetric import sn_char_value
from src.fforacle.matrices import unipotent_class_split
from src.green.kostka import kostka
from src.green.orders import (
    Q,
    group_order,
    group_order_poly,
    q_poly_to_laurent,
    torus_order_poly,
)
from src.green.polynomials import IntPolynomial, LaurentFraction
from src.logging_config import get_logger
from src.orbits.dynkin import orbit_dims
from src.springer.blocks import (
    Block,
    PairLabel,
    block_members,
    block_of,
    blocks,
    check_member,
    e_iota,
)

logger = get_logger("green.omega")


def _same_block(first: PairLabel, second: PairLabel, block: Block) -> bool:
    return block_of(first, block.p) == block and block_of(second, block.p) == block


def _rescaling_shift(lower: PairLabel, upper: PairLabel) -> int:
    """(dim supp(upper) - dim supp(lower)) / 2."""
    gap = orbit_dims(upper.orbit).dim_orbit - orbit_dims(lower.orbit).dim_orbit
    return gap // 2


def p_polynomial(lower: PairLabel, upper: PairLabel, block: Block) -> IntPolynomial:
    """t^{(dim supp(upper) - dim supp(lower))/2} BP_{lower,upper}(1/t) = K_{la/d, mu/d}(t)."""
    if not _same_block(lower, upper, block):
        raise LabelError(f"{lower} and {upper} are not both in {block}")
    la_bar = upper.orbit.divided(block.d)
    mu_bar = lower.orbit.divided(block.d)
    if not dominates(la_bar, mu_bar):
        return IntPolynomial.zero()
    return kostka(la_bar, mu_bar)


def bp_polynomial(lower: PairLabel, upper: PairLabel, block: Block) -> IntPolynomial:
    """BP_{lower,upper}(t), recovered from the Kostka polynomial by t -> 1/t and rescaling."""
    return p_polynomial(lower, upper, block).reversed_by(_rescaling_shift(lower, upper))


def p_value(lower: PairLabel, upper: PairLabel, block: Block) -> CycLaurent:
    """P_{lower,upper} = BP_{lower,upper}(q) as a polynomial in u^2."""
    return bp_polynomial(lower, upper, block).in_q()


def p_matrix(block: Block) -> list[list[CycLaurent]]:
    """Rows and columns in block_members order; entry [i][j] = P_{m_i, m_j}."""
    members = block_members(block)
    return [[p_value(a, b, block) for b in members] for a in members]


def _weyl_sum(iota: PairLabel, other: PairLabel, block: Block) -> sympy.Poly:
    """|G^F| sum_w |Z^0_{L_w}^F|^-1 Tr(w, E) Tr(w, E') / |W|, as a polynomial in q."""
    first = e_iota(iota, block.p)
    second = e_iota(other, block.p)
    order = group_order_poly(block.n)
    total = sympy.Poly(0, Q, domain="QQ")
    for rho in partitions_of(block.rank):
        traces = sn_char_value(first, rho) * sn_char_value(second, rho)
        if traces == 0:
            continue
        quotient, remainder = sympy.div(order, torus_order_poly(rho))
        if not remainder.is_zero:
            raise LabelError(f"torus order for {rho} does not divide |G^F|")
        total += quotient * sympy.Rational(traces, z_centralizer(rho))
    return total


def omega(iota: PairLabel, other: PairLabel, block: Block) -> CycLaurent:
    if not _same_block(iota, other, block):
        return CycLaurent.zero()
    u_shift = (
        -orbit_dims(iota.orbit).codim_class
        - orbit_dims(other.orbit).codim_class
        + 2 * block.dim_center
    )
    return q_poly_to_laurent(_weyl_sum(iota, other, block)) * CycLaurent.u_power(u_shift)


def x_inner(iota: PairLabel, other: PairLabel, block: Block) -> LaurentFraction:
    """<X_iota, X_other> = omega / |G^F|."""
    value = omega(iota, other, block)
    if value.is_zero():
        return LaurentFraction.zero()
    return LaurentFraction(value, group_order(block.n))


def gram_matrix(block: Block) -> list[list[LaurentFraction]]:
    members = block_members(block)
    return [[x_inner(a, b, block) for b in members] for a in members]


def y_gram_oracle(block: Block, q: int) -> list[list[Fraction]]:
    """Diagonal <Y_iota, Y_iota> = sum over rational forms u_c of 1/|Z_{G^F}(u_c)|."""
    check_power_of(q, block.p)
    split = unipotent_class_split(block.n, q)
    members = block_members(block)
    size = len(members)
    gram = [[Fraction(0)] * size for _ in range(size)]
    for i, iota in enumerate(members):
        orders = split[iota.orbit].centralizer_orders
        gram[i][i] = sum((Fraction(1, c) for c in orders), Fraction(0))
    return gram


@dataclass
class GramCheck:
    block: Block
    x_gram: list[list[Fraction]]
    factored: list[list[Fraction]]

    @property
    def consistent(self) -> bool:
        return self.x_gram == self.factored


@dataclass
class GramConsistency:
    n: int
    q: int
    checks: list[GramCheck] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(check.consistent for check in self.checks)


def gram_consistency(n: int, q: int) -> GramConsistency:
    """Compare [<X, X>] with P^T [<Y, Y>] P at a numeric q, block by block."""
    p = characteristic(q)
    report = GramConsistency(n=n, q=q)
    for block in blocks(n, p):
        members = block_members(block)
        size = len(members)
        x_gram = [[entry.evaluate(q) for entry in row] for row in gram_matrix(block)]
        p_num = [
            [entry.substitute_q(q).to_fraction() for entry in row] for row in p_matrix(block)
        ]
        y_gram = y_gram_oracle(block, q)
        factored = [
            [
                sum(
                    (
                        p_num[a][i] * y_gram[a][b] * p_num[b][j]
                        for a in range(size)
                        for b in range(size)
                    ),
                    Fraction(0),
                )
                for j in range(size)
            ]
            for i in range(size)
        ]
        check = GramCheck(block=block, x_gram=x_gram, factored=factored)
        logger.info(f"Gram consistency SL_{n}(F_{q}) {block}: {check.consistent}")
        report.checks.append(check)
    return report


def member_index(iota: PairLabel, block: Block) -> int:
    check_member(iota, block)
    return block_members(block).index(iota)
