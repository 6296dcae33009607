"""Exact covolume restrictions for lattices acting on polygonal complexes.

Submodules: ``exact`` (factored integers and rationals), ``complex`` (cell
complexes, links, balls), ``links`` (link graph families), ``aut``
(automorphism groups), ``law`` (divisibility laws and corollary checks),
``lattice`` (covolumes from quotient data), ``balls`` (Bourdon ball growth
and automorphism towers), ``cli``.
"""
from .exact import FactoredNat, factor, format_rat, parse_rat
from .law import LawData, Verdict, admissible_face_covolume, admissible_vertex_covolume, law_from_links
from .lattice import QuotientData, bourdon_lattice, building_lattice, c_of_X, s_covolume

__version__ = "0.1.0"

__all__ = [
    "FactoredNat", "LawData", "QuotientData", "Verdict", "admissible_face_covolume",
    "admissible_vertex_covolume", "bourdon_lattice", "building_lattice", "c_of_X", "factor",
    "format_rat", "law_from_links", "parse_rat", "s_covolume",
]
