"""Classic-SAX and E-SAX (extreme-point midpoint) symbolic representations with 1NN evaluation."""

from ._accel import BACKEND
from .alphabet import (
    BreakpointTable,
    breakpoint_table,
    build_lookup_table,
    compute_breakpoints,
    symbol_for_value,
)
from .classification import (
    EvalResult,
    ExperimentParams,
    LabeledDataset,
    compare_methods,
    evaluate,
    loocv_error,
    nn1_classify,
    select_alphabet_size,
)
from .distance import SymbolicDistanceContext, euclidean, symbolic_dist
from .representation import (
    SegmentLayout,
    SymbolicWord,
    classic_sax_transform,
    esax_transform,
    extreme_midpoints,
    paa_transform,
    segment_layout,
    z_normalize,
)

__version__ = "0.1.0"
