"""
Step Latinons: exact and Rao-Blackwellized pattern densities.
"""

from src.latinon.exact import (
    block_matrix_distribution,
    class_sequence_distribution,
    conditional_probability,
    exact_density,
    exact_profile,
    interval_sequence_distribution,
)
from src.latinon.io import latinon_from_dict, latinon_to_dict, load_latinon, read_latinon, write_latinon
from src.latinon.model import (
    BUILTINS,
    AxiomReport,
    AxisModel,
    StepLatinon,
    ValuePartition,
    check_axioms,
    doubling,
    prop41,
    prop42,
    quadrant,
    uniform,
)
from src.latinon.sampling import rb_mc_density, sample_interval_frequencies

__all__ = [
    "BUILTINS",
    "AxiomReport",
    "AxisModel",
    "StepLatinon",
    "ValuePartition",
    "block_matrix_distribution",
    "check_axioms",
    "class_sequence_distribution",
    "conditional_probability",
    "doubling",
    "exact_density",
    "exact_profile",
    "interval_sequence_distribution",
    "latinon_from_dict",
    "latinon_to_dict",
    "load_latinon",
    "prop41",
    "prop42",
    "quadrant",
    "rb_mc_density",
    "read_latinon",
    "sample_interval_frequencies",
    "uniform",
    "write_latinon",
]
