"""Blocks of I_G and the generalized Springer correspondence for SL_n."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from src.errors import LabelError
from src.exactalg.numbers import divisors_of, euler_phi, prime_to_part
from src.exactalg.partitions import Partition, partitions_of
from src.exactalg.symmetric import SnCharLabel
from src.logging_config import get_logger
from src.orbits.components import n_prime_mu
from src.orbits.dynkin import orbit_dims

logger = get_logger("springer.blocks")


@dataclass(frozen=True, order=True)
class PairLabel:
    """iota = (u, tau): a unipotent orbit and a character index of A_G(u)."""

    orbit: Partition
    tau: int = 0

    @property
    def n(self) -> int:
        return self.orbit.size

    def __str__(self) -> str:
        return f"({self.orbit},{self.tau})"

    def to_dict(self) -> dict[str, object]:
        return {"orbit": list(self.orbit.parts), "tau": self.tau}


@dataclass(frozen=True, order=True)
class Block:
    """The block (I_G)_eps for a character eps of Z_G/Z_G^0 = Z/n'."""

    n: int
    p: int
    d: int
    eps: int

    @property
    def n_prime(self) -> int:
        return prime_to_part(self.n, self.p)

    @property
    def rank(self) -> int:
        """n/d: the relative Weyl group is S_{n/d}."""
        return self.n // self.d

    @property
    def is_principal(self) -> bool:
        return self.d == 1

    @property
    def levi_blocks(self) -> tuple[int, ...]:
        return (self.d,) * self.rank

    @property
    def dim_center(self) -> int:
        """dim Z^0_L for L = S(GL_d^{n/d})."""
        return self.rank - 1

    @property
    def codim_cuspidal_class(self) -> int:
        """codim_L C0 for the regular unipotent class of L."""
        dim_l = self.rank * self.d * self.d - 1
        dim_c0 = self.rank * (self.d * self.d - self.d)
        return dim_l - dim_c0

    def members(self) -> list["PairLabel"]:
        return block_members(self)

    def __str__(self) -> str:
        return f"block(d={self.d}, eps={self.eps})"

    def to_dict(self) -> dict[str, object]:
        return {"n": self.n, "p": self.p, "d": self.d, "eps": self.eps}


@dataclass(frozen=True)
class BValues:
    b_iota: Fraction
    b0: Fraction

    @property
    def u_exponents(self) -> tuple[int, int]:
        return int(2 * self.b_iota), int(2 * self.b0)


@dataclass(frozen=True)
class CuspidalDatum:
    levi_blocks: tuple[int, ...]
    cuspidal_class: Partition
    local_system: int


def blocks(n: int, p: int) -> list[Block]:
    if n < 1:
        raise LabelError(f"n must be positive: {n}")
    n_prime = prime_to_part(n, p)
    result = [
        Block(n=n, p=p, d=n_prime // gcd(n_prime, e), eps=e) for e in range(n_prime)
    ]
    result.sort(key=lambda b: (b.d, b.eps))
    logger.debug(f"SL_{n}, p={p}: {len(result)} blocks")
    return result


def select_blocks(
    n: int, p: int, d: Optional[int] = None, eps: Optional[int] = None
) -> list[Block]:
    """Blocks of SL_n with the given order d and/or label eps; raises if none match."""
    chosen = [
        block
        for block in blocks(n, p)
        if (d is None or block.d == d) and (eps is None or block.eps == eps)
    ]
    if not chosen:
        raise LabelError(f"no block of SL_{n} in characteristic {p} with d={d}, eps={eps}")
    return chosen


def _tau_for(block: Block, orbit: Partition) -> int:
    """The unique tau in A_G(u)^ whose pullback to Z/n' is eps."""
    n_prime = block.n_prime
    order = n_prime_mu(orbit, block.p)
    step = n_prime // order
    if block.eps % step:
        raise LabelError(f"{orbit} supports no member of {block}")
    return (block.eps // step) % order


def springer_map(block: Block, mu_bar: Partition) -> PairLabel:
    if mu_bar.size != block.rank:
        raise LabelError(f"{mu_bar} is not a partition of n/d = {block.rank}")
    orbit = mu_bar.scaled(block.d)
    return PairLabel(orbit=orbit, tau=_tau_for(block, orbit))


def central_character(iota: PairLabel, p: int) -> int:
    """Index e in Z/n' of the pullback of tau along Z_G/Z_G^0 -> A_G(u)."""
    n_prime = prime_to_part(iota.n, p)
    order = n_prime_mu(iota.orbit, p)
    if not 0 <= iota.tau < order:
        raise LabelError(f"tau = {iota.tau} out of range for A_G(u) of order {order}")
    return (iota.tau * (n_prime // order)) % n_prime


def block_of(iota: PairLabel, p: int) -> Block:
    e = central_character(iota, p)
    n_prime = prime_to_part(iota.n, p)
    return Block(n=iota.n, p=p, d=n_prime // gcd(n_prime, e), eps=e)


def springer_inverse(iota: PairLabel, p: int) -> tuple[Block, Partition]:
    block = block_of(iota, p)
    return block, iota.orbit.divided(block.d)


def block_members(block: Block) -> list[PairLabel]:
    return [springer_map(block, mu_bar) for mu_bar in partitions_of(block.rank)]


def check_member(iota: PairLabel, block: Block) -> None:
    if iota.n != block.n or block_of(iota, block.p) != block:
        raise LabelError(f"{iota} is not in {block}")


def pair_labels(n: int, p: int) -> list[PairLabel]:
    return [
        PairLabel(orbit=mu, tau=tau)
        for mu in partitions_of(n)
        for tau in range(n_prime_mu(mu, p))
    ]


def e_iota(iota: PairLabel, p: int) -> SnCharLabel:
    """E_iota as a character label of the relative Weyl group S_{n/d}."""
    block, mu_bar = springer_inverse(iota, p)
    return SnCharLabel(block.rank, mu_bar)


def label_for(block: Block, character: SnCharLabel) -> PairLabel:
    return springer_map(block, character.partition)


def cuspidal_datum(block: Block) -> CuspidalDatum:
    return CuspidalDatum(
        levi_blocks=block.levi_blocks,
        cuspidal_class=Partition((block.d,) * block.rank),
        local_system=block.eps,
    )


def b_values(iota: PairLabel, block: Block) -> BValues:
    check_member(iota, block)
    codim_c = orbit_dims(iota.orbit).codim_class
    return BValues(
        b_iota=Fraction(codim_c - block.codim_cuspidal_class, 2),
        b0=Fraction(block.codim_cuspidal_class - block.dim_center, 2),
    )


def census_identity(n: int, p: int) -> tuple[int, int]:
    """(sum over mu of n'_mu, sum over d | n' of phi(d) p(n/d))."""
    left = sum(n_prime_mu(mu, p) for mu in partitions_of(n))
    right = sum(
        euler_phi(d) * len(partitions_of(n // d)) for d in divisors_of(prime_to_part(n, p))
    )
    return left, right
