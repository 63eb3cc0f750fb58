"""Minimization and canonization of good-for-games transition-based co-Büchi automata."""
from .automaton import Alphabet, AutomatonError, PreconditionError, TNCW, Transition
from .hoa import HoaParseError, emit_hoa, parse_hoa
from .minimizer import minimize

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AutomatonError",
    "HoaParseError",
    "PreconditionError",
    "TNCW",
    "Transition",
    "emit_hoa",
    "minimize",
    "parse_hoa",
]
