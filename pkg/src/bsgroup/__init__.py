"""Exact computation in the solvable Baumslag-Solitar groups BS(n,1)."""

from .automorphisms import Automorphism, apply, compose, inner_of, invert, is_inner, make_aut, parse_aut
from .decision import Decision, conjugacy, coset_contains_unit, orbit, twisted_conjugacy, word_problem
from .errors import BSError
from .group import BsElement, conjugate, identity, inverse, matrix_rep, multiply, power
from .ring import LocalNumber, NContext, make_context
from .words import Word, evaluate, format_element, is_trivial, parse

__version__ = "0.1.0"

__all__ = [
    "Automorphism", "apply", "compose", "inner_of", "invert", "is_inner", "make_aut", "parse_aut",
    "Decision", "conjugacy", "coset_contains_unit", "orbit", "twisted_conjugacy", "word_problem",
    "BSError",
    "BsElement", "conjugate", "identity", "inverse", "matrix_rep", "multiply", "power",
    "LocalNumber", "NContext", "make_context",
    "Word", "evaluate", "format_element", "is_trivial", "parse",
]
