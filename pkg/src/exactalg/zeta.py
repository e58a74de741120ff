"""The fourth root of unity zeta attached to a block, explicit or symbolic."""

from dataclasses import dataclass
from typing import Any, Optional, Union

from src.config import ZetaChoice
from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent, Scalar

_EXPLICIT = {ZetaChoice.ONE: 0, ZetaChoice.I: 1, ZetaChoice.MINUS_ONE: 2, ZetaChoice.MINUS_I: 3}


@dataclass(frozen=True)
class Zeta:
    """zeta = i^exponent, or a formal symbol when exponent is None."""

    exponent: Optional[int] = None

    @classmethod
    def from_choice(cls, choice: Union[ZetaChoice, str]) -> "Zeta":
        choice = ZetaChoice(choice)
        if choice is ZetaChoice.SYMBOLIC:
            return cls(None)
        return cls(_EXPLICIT[choice])

    @classmethod
    def symbolic(cls) -> "Zeta":
        return cls(None)

    @property
    def is_symbolic(self) -> bool:
        return self.exponent is None

    def power(self, k: int) -> Optional[CycLaurent]:
        """zeta^k, or None while symbolic."""
        if self.exponent is None:
            return None
        return CycLaurent.root_of_unity(4, self.exponent * k)

    def __str__(self) -> str:
        if self.exponent is None:
            return "zeta"
        return {0: "1", 1: "i", 2: "-1", 3: "-i"}[self.exponent % 4]


class ZetaScaled:
    """coefficient * zeta^zeta_power, with zeta possibly symbolic.

    Explicit zeta collapses the value into the coefficient, so equality and
    arithmetic only ever compare like powers of a symbolic zeta.
    """

    __slots__ = ("coefficient", "zeta_power", "zeta")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, coefficient: CycLaurent, zeta_power: int = 0, zeta: Zeta = Zeta(0)):
        explicit = zeta.power(zeta_power)
        if explicit is not None:
            coefficient = coefficient * explicit
            zeta_power = 0
        if coefficient.is_zero():
            zeta_power = 0
        self.coefficient = coefficient
        self.zeta_power = zeta_power
        self.zeta = zeta

    @classmethod
    def zero(cls, zeta: Zeta = Zeta(0)) -> "ZetaScaled":
        return cls(CycLaurent.zero(), 0, zeta)

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def _compatible(self, other: "ZetaScaled") -> None:
        if self.zeta != other.zeta:
            raise LabelError(f"mixed zeta assignments: {self.zeta} and {other.zeta}")

    def __add__(self, other: "ZetaScaled") -> "ZetaScaled":
        self._compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.zeta_power != other.zeta_power:
            raise LabelError("cannot add different powers of a symbolic zeta")
        return ZetaScaled(self.coefficient + other.coefficient, self.zeta_power, self.zeta)

    def __mul__(self, other: Union["ZetaScaled", CycLaurent, Scalar]) -> "ZetaScaled":
        if isinstance(other, ZetaScaled):
            self._compatible(other)
            return ZetaScaled(
                self.coefficient * other.coefficient,
                self.zeta_power + other.zeta_power,
                self.zeta,
            )
        return ZetaScaled(self.coefficient * other, self.zeta_power, self.zeta)

    __rmul__ = __mul__

    def __neg__(self) -> "ZetaScaled":
        return ZetaScaled(-self.coefficient, self.zeta_power, self.zeta)

    def __sub__(self, other: "ZetaScaled") -> "ZetaScaled":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (CycLaurent, int)):
            other = ZetaScaled(CycLaurent.coerce(other), 0, self.zeta)
        if not isinstance(other, ZetaScaled):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return (
            self.zeta == other.zeta
            and self.zeta_power == other.zeta_power
            and self.coefficient == other.coefficient
        )

    def value(self) -> CycLaurent:
        """The collapsed value; only defined for explicit zeta."""
        if self.zeta_power and self.zeta.is_symbolic:
            raise LabelError("value depends on the symbolic zeta")
        return self.coefficient

    def to_dict(self) -> dict[str, Any]:
        return {
            "coefficient": self.coefficient.to_dict(),
            "zeta_power": self.zeta_power,
            "zeta": str(self.zeta),
        }

    def __repr__(self) -> str:
        return f"ZetaScaled({self})"

    def __str__(self) -> str:
        if self.zeta_power == 0:
            return str(self.coefficient)
        return f"({self.coefficient})*zeta^{self.zeta_power}"
