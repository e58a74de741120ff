"""Character-sheaf bookkeeping: cuspidal census, z_E location and the scalars nu_E."""

from src.sheaves.census import (
    CuspidalCensus,
    CuspidalLabel,
    EndoData,
    FamilyParam,
    cuspidal_census,
    endomorphism_data,
    family_param,
    xm_group,
)
from src.sheaves.locate import (
    ZELocation,
    alpha_E,
    e_iota_for,
    eps1_pullback,
    locate_zE,
    multiplicity_table,
    psi_character,
    psi_value,
)
from src.sheaves.scalars import ScalarEntry, ScalarRecord, nu_scalar, scalar_table

__all__ = [
    # Census
    "CuspidalLabel",
    "CuspidalCensus",
    "cuspidal_census",
    # Endomorphism algebras
    "EndoData",
    "endomorphism_data",
    "xm_group",
    "FamilyParam",
    "family_param",
    # Location of z_E
    "psi_character",
    "psi_value",
    "eps1_pullback",
    "e_iota_for",
    "multiplicity_table",
    "ZELocation",
    "locate_zE",
    "alpha_E",
    # Scalars
    "ScalarRecord",
    "ScalarEntry",
    "nu_scalar",
    "scalar_table",
]
