"""Pairings, the almost-character transform and closed-form inner products."""

from src.almost.inner import (
    cuspidal_charfun_inner,
    extract_cuspidal_scalar,
    gggr_vs_almost_inner,
)
from src.almost.pairing import (
    PairingContext,
    TransformMatrix,
    compatible_under_bijection,
    pairing,
    pairing_context_for_class,
    pairing_context_for_orbit,
    pairing_is_unitary,
    transform_matrix,
)

__all__ = [
    # Pairings
    "PairingContext",
    "pairing",
    "pairing_context_for_class",
    "pairing_context_for_orbit",
    "pairing_is_unitary",
    "TransformMatrix",
    "transform_matrix",
    "compatible_under_bijection",
    # Inner products
    "gggr_vs_almost_inner",
    "cuspidal_charfun_inner",
    "extract_cuspidal_scalar",
]
