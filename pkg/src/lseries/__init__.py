"""Semisimple classes of PGL_n and the parameter sets of Lusztig series."""

from src.lseries.params import (
    CenterSizeIdentity,
    CyclicBijection,
    EOrbit,
    ParamSetBar,
    ParamSetBarN,
    SeriesEntry,
    center_size_identity,
    cyclic_bijection,
    e_orbits,
    irr_count,
    m_set,
    m_set_size,
    param_set_bar,
    param_set_bar_N,
    series_table,
)
from src.lseries.semisimple import (
    SemisimpleClassLabel,
    StabilizerData,
    canonical_form,
    enumerate_semisimple_classes,
    special_class,
    stabilizer_data,
    working_exponent,
    working_modulus,
)

__all__ = [
    # Classes
    "SemisimpleClassLabel",
    "StabilizerData",
    "enumerate_semisimple_classes",
    "special_class",
    "stabilizer_data",
    "canonical_form",
    "working_exponent",
    "working_modulus",
    # Parameter sets
    "EOrbit",
    "ParamSetBar",
    "ParamSetBarN",
    "e_orbits",
    "param_set_bar",
    "param_set_bar_N",
    "m_set",
    "m_set_size",
    # Bijections
    "CyclicBijection",
    "cyclic_bijection",
    # Counting
    "SeriesEntry",
    "series_table",
    "irr_count",
    "CenterSizeIdentity",
    "center_size_identity",
]
