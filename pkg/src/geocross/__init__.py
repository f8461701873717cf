"""Geometric crossover over metric spaces, with quotient (normalization
based) operators for groupings, graphs, sequences, tours and FSMs, plus a
reproducible GA harness for comparing genotypic and quotient crossover."""

from .errors import CapacityError, ConfigError, GeocrossError, RepresentationMismatch
from .metric import (
    AxiomReport,
    GeometricityReport,
    check_geometricity,
    check_metric_axioms,
    hamming,
    segment_contains,
    uniform_crossover,
)
from .quotient import (
    EquivRelation,
    QuotientDistance,
    normalize,
    quotient_distance_bruteforce,
    quotient_segment_contains,
)
from .grouping import KaryVector, li_crossover, li_distance, li_normalize
from .graph import (
    AdjMatrix,
    graph_li_crossover,
    graph_li_distance,
    graph_match_normalize,
)
from .sequence import align, edit_distance, homologous_crossover, stretched_hamming
from .tour import (
    circ_normalize,
    circ_reversal_distance,
    reversal_crossover,
    reversal_distance,
)
from .fsm import FsmTable, fsm_canonicalize, fsm_crossover, table_hamming

__version__ = "0.1.0"

__all__ = [
    "AdjMatrix",
    "AxiomReport",
    "CapacityError",
    "ConfigError",
    "EquivRelation",
    "FsmTable",
    "GeocrossError",
    "GeometricityReport",
    "KaryVector",
    "QuotientDistance",
    "RepresentationMismatch",
    "align",
    "check_geometricity",
    "check_metric_axioms",
    "circ_normalize",
    "circ_reversal_distance",
    "edit_distance",
    "fsm_canonicalize",
    "fsm_crossover",
    "graph_li_crossover",
    "graph_li_distance",
    "graph_match_normalize",
    "hamming",
    "homologous_crossover",
    "li_crossover",
    "li_distance",
    "li_normalize",
    "normalize",
    "quotient_distance_bruteforce",
    "quotient_segment_contains",
    "reversal_crossover",
    "reversal_distance",
    "segment_contains",
    "stretched_hamming",
    "table_hamming",
    "uniform_crossover",
]
