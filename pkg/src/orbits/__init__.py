"""Nilpotent-orbit combinatorics for SL_n."""

from src.orbits.components import (
    ComponentData,
    QuotientMap,
    component_groups,
    n_prime_mu,
    zm1_quotient,
)
from src.orbits.cyclic import CyclicF
from src.orbits.dynkin import (
    LeviShape,
    OrbitDims,
    RootSubset,
    WeightedDynkin,
    blocks_adjacent,
    dim_u_above,
    graded_dims,
    lagrangian_psi,
    levi_of_N,
    orbit_dims,
    psi_blocks,
    sigma_of,
    sigma_one,
    weighted_dynkin,
)

__all__ = [
    # Cyclic groups with Frobenius
    "CyclicF",
    # Weighted Dynkin data
    "WeightedDynkin",
    "RootSubset",
    "OrbitDims",
    "LeviShape",
    "weighted_dynkin",
    "sigma_of",
    "sigma_one",
    "psi_blocks",
    "blocks_adjacent",
    "lagrangian_psi",
    "orbit_dims",
    "levi_of_N",
    "graded_dims",
    "dim_u_above",
    # Component groups
    "ComponentData",
    "QuotientMap",
    "component_groups",
    "n_prime_mu",
    "zm1_quotient",
]
