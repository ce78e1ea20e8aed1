"""Minors, Zhegalkin hypergraphs and join-irreducibility of Boolean functions."""

from .boolfn import (
    CanonicalForm,
    CapExceeded,
    Hypergraph,
    TruthTable,
    VarMap,
    apply_map,
    canonical,
    compact,
    equivalent,
    ess,
    essential_vars,
    from_polynomial,
    identify,
    is_minor,
    zhegalkin,
)
from .catalog import CatalogEntry, build_catalog, compute_levels, enumerate_functions
from .graphs import ClassificationVerdict, classify_graph, classify_loopless, enumerate_graphs
from .hypergraph import apply_quotient, contract_pair, function_of, is_hyper_minor, isomorphic
from .irreducibility import brute_force_ji, cover_report, dh_set, gap, is_join_irreducible_h
from .steiner import fano_plane, affine_plane_3, steiner_report
from .suites import SuiteResult, verify_suite

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CapExceeded",
    "Hypergraph",
    "TruthTable",
    "VarMap",
    "apply_map",
    "canonical",
    "compact",
    "equivalent",
    "ess",
    "essential_vars",
    "from_polynomial",
    "identify",
    "is_minor",
    "zhegalkin",
    "CatalogEntry",
    "build_catalog",
    "compute_levels",
    "enumerate_functions",
    "ClassificationVerdict",
    "classify_graph",
    "classify_loopless",
    "enumerate_graphs",
    "apply_quotient",
    "contract_pair",
    "function_of",
    "is_hyper_minor",
    "isomorphic",
    "brute_force_ji",
    "cover_report",
    "dh_set",
    "gap",
    "is_join_irreducible_h",
    "fano_plane",
    "affine_plane_3",
    "steiner_report",
    "SuiteResult",
    "verify_suite",
]
