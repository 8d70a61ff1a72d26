"""Braid groups of configuration spaces on p x q grids.

Discrete configuration complexes, the Farley-Sabalka gradient field, Morse
presentations of the fundamental group and the tools used to recognize them
as right-angled Artin groups.
"""

from .configspace import ConfigComplex, duality, enumerate_config, graph_config
from .grid import AmbientComplex, GridSpec, build_grid, vertical_partner
from .groups import (abelianization, as_raag, raag_normal_form, tietze_simplify, triangular_inverse,
                     verify_hom)
from .invariants import b_graph, betti, build_graph, cat_of, clique_vector, tc_r
from .morse import MorseField, classify, is_blocked
from .presentation import (MorsePresentation, closed_form_relator, presentation, strip_presentation)
from .q2 import Q2Params, ra_graph
from .words import Presentation

__version__ = "0.1.0"

__all__ = [
    "AmbientComplex", "ConfigComplex", "GridSpec", "MorseField", "MorsePresentation", "Presentation",
    "Q2Params", "abelianization", "as_raag", "b_graph", "betti", "build_graph", "build_grid", "cat_of",
    "classify", "clique_vector", "closed_form_relator", "duality", "enumerate_config", "graph_config",
    "is_blocked", "presentation", "ra_graph", "raag_normal_form", "strip_presentation", "tc_r",
    "tietze_simplify", "triangular_inverse", "verify_hom", "vertical_partner",
]
