"""Flype enumeration and symmetry detection for alternating knot diagrams."""

from .diagram import (
    Crossing,
    Diagram,
    build_diagram,
    export_dt,
    export_gauss,
    export_pd,
    parse_dt,
    parse_gauss,
    parse_pd,
    validate_alternating,
    validate_prime,
    validate_reduced,
    writhe,
)
from .canonical import canonical_code, canonical_form, isomorphic
from .bracket import LaurentPolynomial, bracket_span, kauffman_bracket, normalized_bracket
from .flype import (
    FlypeEnumerator,
    FlypeGraph,
    FlypeSite,
    apply_flype,
    build_flype_graph,
    find_flype_sites,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)
from .builders import connect_sum, pretzel, solve_alternation, twist_closure
from .sequences import FlypeSequence, is_normalized, normalize_flype_sequence
from .symmetry import (
    DetectionResult,
    PeriodReport,
    Symmetry,
    automorphisms,
    detect_period,
    quotient,
    remove_curls,
)
from .tangles import Tangle, tangle_from_crossings, twist_tangle
from .freeperiod import (
    FreePeriodDetection,
    FreePeriodReport,
    construct_free_periodic,
    detect_free_period,
)
from .tables import TableEntry, entries_up_to, load_table
from . import errors

__all__ = [
    "Crossing",
    "DetectionResult",
    "Diagram",
    "FlypeEnumerator",
    "FlypeGraph",
    "FlypeSequence",
    "FlypeSite",
    "FreePeriodDetection",
    "FreePeriodReport",
    "LaurentPolynomial",
    "PeriodReport",
    "Symmetry",
    "TableEntry",
    "Tangle",
    "apply_flype",
    "automorphisms",
    "bracket_span",
    "build_diagram",
    "build_flype_graph",
    "canonical_code",
    "canonical_form",
    "connect_sum",
    "construct_free_periodic",
    "detect_free_period",
    "detect_period",
    "entries_up_to",
    "errors",
    "export_dt",
    "export_gauss",
    "export_pd",
    "find_flype_sites",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "is_normalized",
    "isomorphic",
    "kauffman_bracket",
    "load_table",
    "normalize_flype_sequence",
    "normalized_bracket",
    "parse_dt",
    "parse_gauss",
    "parse_pd",
    "pretzel",
    "quotient",
    "remove_curls",
    "solve_alternation",
    "tangle_from_crossings",
    "twist_closure",
    "twist_tangle",
    "validate_alternating",
    "validate_prime",
    "validate_reduced",
    "writhe",
]

__version__ = "0.1.0"
