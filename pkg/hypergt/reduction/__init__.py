from .graph import (
    Coloring,
    Graph,
    PaddingRecord,
    apply_padding,
    extend_coloring,
    first_conflict,
    pad_graph,
    padding_plan,
    verify_coloring,
)
from .three_col import (
    COLOR_CODES,
    ColoringExtraction,
    ReductionInstance,
    coloring_to_tests,
    extract_coloring,
    pad_and_reduce,
    reduce_3col_to_gt,
    tests_to_coloring,
)
