"""Exact arithmetic and symmetric-group character machinery."""

from src.exactalg.cyclotomic import ONE, ZERO, CycLaurent
from src.exactalg.numbers import (
    characteristic,
    check_power_of,
    divisors_of,
    euler_phi,
    gcd_all,
    prime_power_decompose,
    prime_to_part,
)
from src.exactalg.partitions import (
    Multipartition,
    Partition,
    b_invariant,
    class_size,
    cycle_type,
    dominates,
    dual_partition,
    n_value,
    partitions_of,
    representative_permutation,
    semistandard_tableaux,
    z_centralizer,
)
from src.exactalg.symmetric import (
    SnCharLabel,
    character_degree,
    restriction_multiplicity,
    sn_char_value,
    sn_inner_product,
)
from src.exactalg.wreath import (
    ExtendedCharLabel,
    WreathElement,
    extended_char_value,
    extended_norm,
    extension_value,
    twisted_restriction_inner,
)
from src.exactalg.zeta import Zeta, ZetaScaled

__all__ = [
    # Exact values
    "CycLaurent",
    "ZERO",
    "ONE",
    # Number theory
    "prime_power_decompose",
    "characteristic",
    "check_power_of",
    "prime_to_part",
    "euler_phi",
    "divisors_of",
    "gcd_all",
    # Partitions
    "Partition",
    "Multipartition",
    "dual_partition",
    "b_invariant",
    "n_value",
    "partitions_of",
    "dominates",
    "z_centralizer",
    "class_size",
    "cycle_type",
    "representative_permutation",
    "semistandard_tableaux",
    # Symmetric groups
    "SnCharLabel",
    "sn_char_value",
    "character_degree",
    "sn_inner_product",
    "restriction_multiplicity",
    # Wreath extensions
    "ExtendedCharLabel",
    "WreathElement",
    "extended_char_value",
    "extension_value",
    "extended_norm",
    "twisted_restriction_inner",
    # Block zeta
    "Zeta",
    "ZetaScaled",
]
