"""Generalized Gelfand-Graev characters against the X-basis."""

from src.gggr.inner import (
    GGGRLabel,
    GGGRRecord,
    gggr_projection_coeffs,
    gggr_table,
    gggr_x_inner,
    gggr_x_inner_regular,
    integrality_holds,
    projected_inner,
    resolve_c0,
    support_member,
    y_value_on_twist,
    zeta_for,
)

__all__ = [
    # Labels
    "GGGRLabel",
    "GGGRRecord",
    "zeta_for",
    "resolve_c0",
    # Inner products
    "y_value_on_twist",
    "support_member",
    "gggr_x_inner_regular",
    "gggr_x_inner",
    "gggr_projection_coeffs",
    "projected_inner",
    "integrality_holds",
    "gggr_table",
]
