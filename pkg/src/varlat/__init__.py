"""Commutative semigroup varieties: exact nil entailment, the lattice L(I),
variety invariants and special-element classification in the lattice Com."""

from .commwords import CommWord, Equal, ZeroEq
from .config import DEFAULT_CAPS, Caps
from .errors import VarlatError
from .nilcalc import NilBasis, entails
from .parsing import parse_identity, parse_variety, render
from .varieties import COM, Composite, classify

__version__ = "0.1.0"

__all__ = [
    "CommWord",
    "Equal",
    "ZeroEq",
    "Caps",
    "DEFAULT_CAPS",
    "VarlatError",
    "NilBasis",
    "entails",
    "parse_identity",
    "parse_variety",
    "render",
    "COM",
    "Composite",
    "classify",
]
