"""Exact SO(3)-multiplicities of the four sl3 modules with a fixed
integral infinitesimal character, computed by three independent routes
(positive region counting, fixed-point localization sums, brute-force
branching) and cross-validated."""

from .weights import GWeight, KWeight, ROOT_DATA, restrict
from .vecpart import (GradedGenerator, GradedTarget, NonProperConeError,
                      kappa_brute, kappa_graded, kappa_m, kappa_total)
from .charseries import TauSetup, k_mults_from_tk, tau_setup, tk_mult, tk_term
from .orbits import (FixedPointDatum, LocalizationTable, Method, MultTable,
                     Orbit, blattner_closed, borel_weil_table, k_mult,
                     k_mult_ld, k_term, orbit_table)
from .positive import (Region, RegionPoint, classify, duality, fiber_count,
                       in_C, mult_positive)
from .oracle import branch_so3, kostant_weight_mult, weight_diagram, weyl_dim

__all__ = [
    "GWeight", "KWeight", "ROOT_DATA", "restrict",
    "GradedGenerator", "GradedTarget", "NonProperConeError",
    "kappa_brute", "kappa_graded", "kappa_m", "kappa_total",
    "TauSetup", "k_mults_from_tk", "tau_setup", "tk_mult", "tk_term",
    "FixedPointDatum", "LocalizationTable", "Method", "MultTable", "Orbit",
    "blattner_closed", "borel_weil_table", "k_mult", "k_mult_ld", "k_term",
    "orbit_table",
    "Region", "RegionPoint", "classify", "duality", "fiber_count", "in_C",
    "mult_positive",
    "branch_so3", "kostant_weight_mult", "weight_diagram", "weyl_dim",
]
