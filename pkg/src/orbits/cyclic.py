"""Cyclic groups with a Frobenius action z -> multiplier * z."""

from dataclasses import dataclass
from math import gcd

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent


@dataclass(frozen=True)
class CyclicF:
    """Z/order with Frobenius acting as multiplication by multiplier."""

    order: int
    multiplier: int = 1

    def __post_init__(self) -> None:
        if self.order < 1:
            raise LabelError(f"cyclic group order must be positive: {self.order}")
        object.__setattr__(self, "multiplier", self.multiplier % self.order)

    @property
    def fixed_order(self) -> int:
        """|A^F| = |A_F| = gcd(order, multiplier - 1)."""
        return gcd(self.order, self.multiplier - 1)

    def act(self, z: int) -> int:
        return (self.multiplier * z) % self.order

    def elements(self) -> list[int]:
        return list(range(self.order))

    def fixed_points(self) -> list[int]:
        return [z for z in range(self.order) if self.act(z) == z]

    def coinvariants(self) -> list[int]:
        """Representatives 0..g-1 of A_F = A / (F - 1)A."""
        return list(range(self.fixed_order))

    def coinvariant_class(self, z: int) -> int:
        return z % self.fixed_order

    def characters(self) -> list[int]:
        """Character e is z -> zeta_order^{e z}."""
        return list(range(self.order))

    def fixed_characters(self) -> list[int]:
        """F-stable characters: e * multiplier = e."""
        return [e for e in range(self.order) if (e * self.multiplier) % self.order == e]

    def character_value(self, e: int, z: int) -> CycLaurent:
        return CycLaurent.root_of_unity(self.order, e * z)

    def character_order(self, e: int) -> int:
        return self.order // gcd(self.order, e)

    def is_faithful(self, e: int) -> bool:
        return self.character_order(e) == self.order

    def fixed_subgroup_generator(self) -> int:
        """Generator of A^F (order fixed_order) inside A."""
        return self.order // self.fixed_order

    def to_dict(self) -> dict[str, int]:
        return {"order": self.order, "multiplier": self.multiplier, "fixed_order": self.fixed_order}
