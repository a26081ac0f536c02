"""Exhaustive computation with ideals of small finite commutative rings."""

from .dsl import parse_element, parse_ideal, ring_from_text
from .errors import RingLabError
from .ideals import Ideal, enumerate_ideals, principal_ideal, zero_ideal
from .intpoly import classify_integer_ideal, search_integer_ideals
from .predicates import Mode, Verdict, evaluate, is_cdf
from .rings import FiniteRing, RingHom

__version__ = "0.1.0"

__all__ = [
    "FiniteRing",
    "RingHom",
    "Ideal",
    "Mode",
    "Verdict",
    "RingLabError",
    "ring_from_text",
    "parse_element",
    "parse_ideal",
    "enumerate_ideals",
    "principal_ideal",
    "zero_ideal",
    "evaluate",
    "is_cdf",
    "classify_integer_ideal",
    "search_integer_ideals",
]
