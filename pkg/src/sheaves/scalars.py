"""The scalar nu_E relating characteristic functions of character sheaves to almost characters."""

from dataclasses import dataclass
from typing import Optional

from src.config import get_settings
from src.errors import DivisibilityError, LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import check_power_of, divisors_of
from src.exactalg.partitions import Partition, partitions_of
from src.exactalg.symmetric import SnCharLabel
from src.exactalg.wreath import ExtendedCharLabel
from src.exactalg.zeta import Zeta, ZetaScaled
from src.gggr.inner import resolve_c0, zeta_for
from src.logging_config import get_logger
from src.sheaves.census import endomorphism_data
from src.sheaves.locate import alpha_E, locate_zE
from src.springer.blocks import Block, select_blocks

logger = get_logger("sheaves.scalars")


@dataclass(frozen=True)
class ScalarRecord:
    """nu_E = sign * zeta^-1 * eps(c0)^-1 * alpha_E * central, kept factor by factor."""

    sign: int
    zeta: Zeta
    eps_c0_inv: CycLaurent
    alpha: CycLaurent
    central: CycLaurent

    def product(self) -> ZetaScaled:
        coefficient = self.eps_c0_inv * self.alpha * self.central * self.sign
        return ZetaScaled(coefficient, -1, self.zeta)

    def has_unit_modulus(self) -> bool:
        return self.product().coefficient.has_unit_modulus()

    def to_dict(self) -> dict[str, object]:
        return {
            "sign": self.sign,
            "zeta_inv": f"({self.zeta})^-1",
            "eps_c0_inv": self.eps_c0_inv.to_dict(),
            "alpha_E": self.alpha.to_dict(),
            "central": self.central.to_dict(),
        }


def nu_scalar(
    zeta: Zeta,
    eps: int,
    eps_order: int,
    c0: int,
    alpha: Optional[CycLaurent] = None,
    central: Optional[CycLaurent] = None,
    sign: Optional[int] = None,
) -> ScalarRecord:
    """Assemble nu_E from its factors; eps(c0)^-1 is zeta_{eps_order}^{-eps c0}."""
    sign = get_settings().nu_sign if sign is None else sign
    if sign not in (1, -1):
        raise LabelError(f"sign must be +1 or -1, got {sign}")
    alpha = CycLaurent.one() if alpha is None else alpha
    central = CycLaurent.one() if central is None else central
    for name, value in (("alpha_E", alpha), ("central factor", central)):
        if not value.has_unit_modulus():
            raise LabelError(f"{name} is not a root of unity: {value}")
    record = ScalarRecord(
        sign=sign,
        zeta=zeta,
        eps_c0_inv=CycLaurent.root_of_unity(eps_order, -eps * c0),
        alpha=alpha,
        central=central,
    )
    return record


@dataclass(frozen=True)
class ScalarEntry:
    block: Block
    t: int
    character: ExtendedCharLabel
    x_e: int
    z_e: int
    record: ScalarRecord

    def to_dict(self) -> dict[str, object]:
        return {
            "block": self.block.to_dict(),
            "t": self.t,
            "E": str(self.character),
            "x_E": self.x_e,
            "z_E": self.z_e,
            "record": self.record.to_dict(),
            "nu_E": self.record.product().to_dict(),
        }


def scalar_table(
    n: int,
    q: int,
    p: int,
    zeta: Optional[Zeta] = None,
    c0: Optional[int] = None,
    t: Optional[int] = None,
    d: Optional[int] = None,
    base: Optional[Partition] = None,
    twist: Optional[int] = None,
) -> list[ScalarEntry]:
    """nu_E for every block d, every t with d | t | n prime to p and every F''-stable E.

    t, d, base (the partition of n/t labelling E) and twist restrict the table.
    """
    check_power_of(q, p)
    if t is not None and (t < 1 or n % t or t % p == 0):
        raise DivisibilityError(f"t = {t} must divide n = {n} and be prime to p = {p}")
    if base is not None and t is not None and base.size != n // t:
        raise LabelError(f"E is labelled by a partition of n/t = {n // t}, got {base}")
    entries = []
    for block in select_blocks(n, p, d):
        block_d = block.d
        block_zeta = zeta if zeta is not None else zeta_for(block)
        for t_value in divisors_of(n) if t is None else [t]:
            if t_value % block_d or t_value % p == 0:
                continue
            endo = endomorphism_data(n, t_value, block_d, q)
            group = endo.omega
            for shape in partitions_of(endo.factor_size):
                if base is not None and shape != base:
                    continue
                mu = shape.dual().scaled(t_value)
                twist_c0 = resolve_c0(n, q, mu, c0)
                for character in group.fixed_characters():
                    if twist is not None and character != twist % group.order:
                        continue
                    E = ExtendedCharLabel(SnCharLabel.of(shape), endo.repeats, character)
                    location = locate_zE(E, mu, endo)
                    record = nu_scalar(
                        block_zeta,
                        block.eps,
                        block.n_prime,
                        twist_c0,
                        alpha=alpha_E(E, mu, endo),
                    )
                    entries.append(
                        ScalarEntry(block, t_value, E, location.x_e, location.z_e, record)
                    )
    logger.info(f"nu_E table for SL_{n}(F_{q}): {len(entries)} records")
    return entries
