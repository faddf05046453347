"""Quartic half-arc-transitive metacirculants: construction, symmetry and census tools."""

from .autgroup import AutResult, are_isomorphic, automorphism_group, canonical_form, transitivity_profile
from .families import MetaParams, Xe, Xo, Y, Z, build, canonical_pair, parse_params, validate
from .graphcore import Graph, Orientation
from .hat import alternating_structure, attachment_class, hat_orientation
from .permgroup import Permutation, PermGroup

__version__ = "0.1.0"

__all__ = [
    "AutResult", "Graph", "MetaParams", "Orientation", "PermGroup", "Permutation", "Xe", "Xo", "Y", "Z",
    "alternating_structure", "are_isomorphic", "attachment_class", "automorphism_group", "build",
    "canonical_form", "canonical_pair", "hat_orientation", "parse_params", "transitivity_profile", "validate",
]
