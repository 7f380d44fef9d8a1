"""Projective dimension of square-free monomial ideals through their dual hypergraphs."""

from __future__ import annotations

from .core import (Hypergraph, MonomialIdeal, cancel_face, colon_vertex, cut_face, from_ideal,
                   is_separated, minimalize, remove_vertex, to_standard_ideal)
from .errors import (CharacteristicDisagreement, HpdError, MinimalityError, NeedsOracle,
                     OracleTooLarge, ParseError, UnsupportedShape)
from .highpd import check_sharp, check_star, check_star_star, detect_spanning_ferrers
from .oracle import betti_tables, pd_bruteforce
from .reduce import algpd_connected, compute_pd, pd_recursive, pd_stars, pd_unique_cycle

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "MonomialIdeal",
    "from_ideal",
    "to_standard_ideal",
    "is_separated",
    "minimalize",
    "remove_vertex",
    "colon_vertex",
    "cancel_face",
    "cut_face",
    "compute_pd",
    "pd_unique_cycle",
    "algpd_connected",
    "pd_recursive",
    "pd_stars",
    "pd_bruteforce",
    "betti_tables",
    "check_star",
    "check_star_star",
    "check_sharp",
    "detect_spanning_ferrers",
    "HpdError",
    "MinimalityError",
    "UnsupportedShape",
    "NeedsOracle",
    "OracleTooLarge",
    "CharacteristicDisagreement",
    "ParseError",
]
