"""Generalized Springer correspondence for SL_n."""

from src.springer.blocks import (
    Block,
    BValues,
    CuspidalDatum,
    PairLabel,
    b_values,
    block_members,
    block_of,
    blocks,
    census_identity,
    central_character,
    check_member,
    cuspidal_datum,
    e_iota,
    label_for,
    pair_labels,
    select_blocks,
    springer_inverse,
    springer_map,
)
from src.springer.wavefront import wave_front

__all__ = [
    # Labels
    "PairLabel",
    "Block",
    "BValues",
    "CuspidalDatum",
    # Correspondence
    "blocks",
    "select_blocks",
    "springer_map",
    "springer_inverse",
    "block_of",
    "block_members",
    "check_member",
    "central_character",
    "pair_labels",
    "e_iota",
    "label_for",
    "cuspidal_datum",
    "b_values",
    "census_identity",
    "wave_front",
]
