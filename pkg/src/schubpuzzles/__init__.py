"""Exact equivariant Schubert calculus via puzzle and scattering-diagram
enumeration, cross-checked against reduced-subword fixed-point restrictions."""

from .labels import Fl, Gr, Label, LabelString, SpGr
from .poly import Polynomial, u, y

__all__ = [
    "Fl",
    "Gr",
    "Label",
    "LabelString",
    "Polynomial",
    "SpGr",
    "u",
    "y",
]
