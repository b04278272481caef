from .hypergraph import Hypergraph, TestFamily, OutcomeVector, SeparationReport, VertexSet
from .separation import outcome, separates, outcomes, outcome_matrix, verify, decode, lint_family
from .parameters import compute_d, compute_beta, estimate_beta, info_lower_bound
