"""
Pattern densities in Latin squares: exact enumeration and Monte Carlo.
"""

from src.density.exact import (
    DensityProfile,
    exact_density,
    exact_profile,
    generalized_exact_density,
)
from src.density.montecarlo import McEstimate, McProfile, mc_density, mc_profile
from src.density.ranking import TIE, order_class

__all__ = [
    "DensityProfile",
    "McEstimate",
    "McProfile",
    "TIE",
    "exact_density",
    "exact_profile",
    "generalized_exact_density",
    "mc_density",
    "mc_profile",
    "order_class",
]
