"""
hypergt: generalized group testing over hypergraphs.

Non-adaptive separating families (randomized and exhaustive), adaptive
identification and the 3-coloring reduction, plus the `hypergt` CLI.
"""
from .errors import HyperGTError
from .core import (
    Hypergraph,
    OutcomeVector,
    SeparationReport,
    TestFamily,
    compute_beta,
    compute_d,
    decode,
    estimate_beta,
    info_lower_bound,
    outcome,
    outcomes,
    separates,
    verify,
)
from .generators import GenSpec, generate
from .construct import ConstructionParams, optimal_bruteforce, randomized_construct, required_k, tight_k
from .adaptive import HiddenEdgeOracle, StreamOracle, adaptive_identify
from .reduction import Coloring, Graph, coloring_to_tests, pad_graph, reduce_3col_to_gt, tests_to_coloring

__version__ = "0.1.0"
