"""Elliptic divisibility sequences with a zero term: terms, periods and perfect powers."""

from .closed_form import closed_term, term_factorization, verify_closed_form
from .conditions import get_condition, solve_condition
from .diophantine import PellProblem, bounded_cubic_search, is_cube, is_square, pell_solutions
from .eds_core import (EdsSequence, EquivalenceScale, InitialValues, apply_equivalence,
                       check_divisibility, check_eq11, extend_to, sequence)
from .periodicity import period_direct, period_formula, rank_of_apparition, reduce_mod
from .power_classifier import classify, predict_and_check, summary_table
from .tate_curves import (EdsSpec, initial_values, initial_values_from_curve, integerize,
                          tate_normal_form)

__version__ = "0.1.0"
