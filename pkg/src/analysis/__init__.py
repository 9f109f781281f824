"""
Certification, eliminability, the 72-pattern suite and convergence sweeps.
"""

from src.analysis.certification import CertReport, certify, classify_56, corner_statistic, untied_corner
from src.analysis.eliminability import (
    EliminabilityResult,
    enumerate_small_generalized_patterns,
    is_eliminable,
    is_eliminable_bruteforce,
    verify_elimination_order,
)
from src.analysis.suite import SuiteReport, eliminable_density_check, suite_72, suite_72_report
from src.analysis.sweep import seed_average, sweep, write_sweep_csv

__all__ = [
    "CertReport",
    "EliminabilityResult",
    "SuiteReport",
    "certify",
    "classify_56",
    "corner_statistic",
    "eliminable_density_check",
    "enumerate_small_generalized_patterns",
    "is_eliminable",
    "is_eliminable_bruteforce",
    "seed_average",
    "suite_72",
    "suite_72_report",
    "sweep",
    "untied_corner",
    "verify_elimination_order",
    "write_sweep_csv",
]
