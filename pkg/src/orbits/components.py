"""Component groups A_G(u), A_lambda and the quotient A-bar_lambda."""

from dataclasses import dataclass
from typing import Optional

from src.errors import DivisibilityError
from src.exactalg.numbers import check_power_of, characteristic, gcd_all, prime_to_part
from src.exactalg.partitions import Partition
from src.orbits.cyclic import CyclicF


@dataclass(frozen=True)
class ComponentData:
    n_prime: int
    n_prime_mu: int
    a_g: CyclicF
    a_lambda: CyclicF
    a_bar: CyclicF

    def to_dict(self) -> dict[str, object]:
        return {
            "n_prime": self.n_prime,
            "n_prime_mu": self.n_prime_mu,
            "A_G(u)": self.a_g.to_dict(),
            "A_lambda": self.a_lambda.to_dict(),
            "A_bar_lambda": self.a_bar.to_dict(),
        }


@dataclass(frozen=True)
class QuotientMap:
    """Reduction A_lambda -> A-bar_lambda, z -> z mod t."""

    source: CyclicF
    target: CyclicF

    def __call__(self, z: int) -> int:
        return z % self.target.order

    def kernel(self) -> list[int]:
        return [z for z in self.source.elements() if self(z) == 0]


def n_prime_mu(mu: Partition, p: int) -> int:
    return gcd_all(prime_to_part(mu.size, p), *mu.parts)


def component_groups(
    mu: Partition, p: int, q: int, t: Optional[int] = None
) -> ComponentData:
    """A_G(u) and A_lambda are cyclic of order n'_mu; A-bar has order t when given."""
    check_power_of(q, p)
    n_prime = prime_to_part(mu.size, p)
    order = n_prime_mu(mu, p)
    a_g = CyclicF(order, q)
    a_bar = zm1_quotient(mu, t, q).target if t is not None else a_g
    return ComponentData(
        n_prime=n_prime,
        n_prime_mu=order,
        a_g=a_g,
        a_lambda=CyclicF(order, q),
        a_bar=a_bar,
    )


def zm1_quotient(mu: Partition, t: int, q: int) -> QuotientMap:
    p = characteristic(q)
    if t < 1 or any(part % t for part in mu.parts):
        raise DivisibilityError(f"t = {t} must divide every part of {mu}")
    if t % p == 0:
        raise DivisibilityError(f"t = {t} must be prime to p = {p}")
    source = CyclicF(n_prime_mu(mu, p), q)
    return QuotientMap(source=source, target=CyclicF(t, q))
