"""Topological decks, end invariants and finite compactifications of finite graphs."""

from .canon import CanonicalForm, canon, certificate, is_homeomorphic
from .compactification import (
    NStarWitness,
    alexandroff,
    end_count,
    estar,
    estar_additivity_check,
    finite_compactification,
    freudenthal,
    max_nstar,
    nstar_witness,
    separating_number,
    splitting_number,
)
from .errors import CacheCorruptError, DomainError, GraphError, ParseError, TopoDeckError
from .graph import OPEN, Edge, TopoGraph, components, is_compact, is_connected, subdivide, validate
from .harness import EnumerationBudget, InjectivityReport, enumerate_canonical, verify_deck_injectivity
from .smooth import smooth
from .surgery import CirclePoint, Deck, EdgeInteriorPoint, VertexPoint, collapse, deck, remove_point

__version__ = "0.1.0"

__all__ = [
    "OPEN",
    "CacheCorruptError",
    "CanonicalForm",
    "CirclePoint",
    "Deck",
    "DomainError",
    "Edge",
    "EdgeInteriorPoint",
    "EnumerationBudget",
    "GraphError",
    "InjectivityReport",
    "NStarWitness",
    "ParseError",
    "TopoDeckError",
    "TopoGraph",
    "VertexPoint",
    "alexandroff",
    "canon",
    "certificate",
    "collapse",
    "components",
    "deck",
    "end_count",
    "enumerate_canonical",
    "estar",
    "estar_additivity_check",
    "finite_compactification",
    "freudenthal",
    "is_compact",
    "is_connected",
    "is_homeomorphic",
    "max_nstar",
    "nstar_witness",
    "remove_point",
    "separating_number",
    "smooth",
    "splitting_number",
    "subdivide",
    "validate",
    "verify_deck_injectivity",
]
