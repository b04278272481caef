from .formats import (
    TRANSCRIPT_COLUMNS,
    emit_coloring,
    emit_graph,
    emit_hypergraph,
    emit_outcomes,
    emit_tests,
    emit_transcript,
    parse_coloring,
    parse_graph,
    parse_hypergraph,
    parse_outcomes,
    parse_tests,
    parse_transcript,
)
from .bench import METHODS, BenchSettings, RunReport, Sweep, load_sweep, reports_to_csv, run_bench
