from .oracle import ContaminationOracle, HiddenEdgeOracle, StreamOracle
from .identify import (
    FALLBACK,
    LOOP,
    Round,
    Transcript,
    TranscriptStep,
    adaptive_identify,
    find_balanced_prefix,
)
