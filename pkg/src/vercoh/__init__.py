"""Hilbert series, Frobenius structure and Steenrod actions for the algebras E_n(p)."""

from .pgrade import PDegree
from .monomial_algebra import AlgebraElement, AlgebraSpec, Monomial, enumerate_basis
from .series import (
    RationalSeries,
    TruncatedSeries,
    growth_constants,
    minc,
    n_table,
    poincare,
    poincare_rational,
    reciprocal_table,
    two_variable,
)
from .gorenstein import build_frobenius, pairing_matrix, verify_regular_sequence
from .steenrod import forced_action_check, odd_forced_check, uniqueness_solve
from .cyclotomic import CycloField, CycloNumber
from .koszul import generator_bound, rank_poly, trace_to_rationals, unit_multiplicity_series
from .brauer import brauer_ext_series, conjecture_crosscheck, reference_series

__version__ = "0.1.0"
