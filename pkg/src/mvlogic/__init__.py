"""Finite-valued matrix logics in Dunn-style subset semantics.

Built-in logics, a signature-driven parser, exhaustive validity and
consequence checking, connexivity classification, and term-definability
by clone closure.
"""
from .kernel import (
    B,
    F,
    N,
    T,
    Connective,
    Logic,
    LogicError,
    TruthValue,
    builtin_logics,
    dunn_conditional,
    get_logic,
    lookup,
)
from .syntax import Apply, Atom, ParseError, Sequent, format_formula, instantiate, parse, parse_sequent
from .engine import Flavor, Status, Verdict, check_consequence, check_deduction, check_validity, evaluate
from .properties import (
    centering_suite,
    check_stability,
    classify,
    enumerate_tspn,
    second_theses,
)
from .definability import clone_closure, enumerate_connectives, is_definable

__version__ = "0.1.0"

__all__ = [
    "T", "B", "N", "F", "TruthValue", "Connective", "Logic", "LogicError",
    "builtin_logics", "get_logic", "lookup", "dunn_conditional",
    "Atom", "Apply", "Sequent", "ParseError", "parse", "parse_sequent", "format_formula", "instantiate",
    "Flavor", "Status", "Verdict", "evaluate", "check_validity", "check_consequence", "check_deduction",
    "classify", "enumerate_tspn", "check_stability", "second_theses", "centering_suite",
    "clone_closure", "is_definable", "enumerate_connectives",
]
