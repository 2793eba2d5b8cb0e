"""Braid words, torus-covering charts and their compilation to surface-link chart movies."""

from .braid import BraidWord, Permutation, is_equal, make_word
from .chart import ChartGraph, ChartMovie, TorusCoveringChart, validate_movie
from .compiler import CompiledChart, compile_chart, handle_movie, reverse_mirror, verify_theorem_steps

__all__ = [
    "BraidWord",
    "Permutation",
    "ChartGraph",
    "ChartMovie",
    "CompiledChart",
    "TorusCoveringChart",
    "compile_chart",
    "handle_movie",
    "is_equal",
    "make_word",
    "reverse_mirror",
    "validate_movie",
    "verify_theorem_steps",
]

__version__ = "0.1.0"
