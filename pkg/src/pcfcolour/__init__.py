"""Proper conflict-free graph colouring toolkit.

Construction (greedy, randomized recolouring rounds, large-min-degree
precolouring), verification (solitary and odd-multiplicity witness checks),
exact minima on small graphs, and probability-bound validators, behind one
CLI (``pcf``). Counting and search run on a compiled kernel when available,
with a pure-Python fallback selected at import.
"""

from ._kernels import BACKEND
from .colouring import (
    Colouring,
    ThresholdSpec,
    WitnessReport,
    check_conflict_free,
    check_h_odd,
    is_proper,
    odd_colours,
    solitary_colours,
    witness_lists,
)
from .errors import RestartsExhausted, StrictModeWarning
from .graphs import (
    ALL_EDGES,
    Graph,
    gen_complete,
    gen_cycle,
    gen_random_graph,
    gen_random_regular,
    gen_subdivided_complete,
    read_col,
    vertex_split,
    write_col,
)
from .greedy import GreedyTrace, degeneracy_ordering, greedy_hpcf, greedy_hpcf_degenerate, partial_greedy
from .mindeg import ResampleState, precolour_mindeg, resample_sweep
from .nibble import NibbleOutcome, NibbleParams, conclusion_spec, make_params, nibble_run, restart_driver, select_witness_sets
from .oracle import OracleResult, SearchBudget, exact_chi_odd, exact_chi_pcf
from .pipeline import BoundReport, PipelineConfig, bound_value, hpcf_colour, hpcf_colour_mindeg, odd_to_pcf_check
from .probtools import (
    binomial_cdf,
    binomial_cdf_exact,
    binomial_tail_exact,
    binomial_tail_upper,
    boost_after_failure_process,
    certain_process,
    chernoff_lower,
    chernoff_upper,
    dominance_mc,
    independent_process,
)

__version__ = "0.1.0"
