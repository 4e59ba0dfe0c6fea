"""Sublinear gap edit distance via pruned tree distance."""

from .ako import solve_node_ako
from .combine import combine, combine_bruteforce
from .config import SolverConfig, ako_config, main_config
from .exact import (
    Alignment,
    ShiftProfile,
    alignment_cost,
    capped_edit_distance,
    ed_many_shifts_2approx,
    edit_distance,
    lce,
    optimal_alignment,
)
from .gap import GapReport, corollary_parameterization, decide_gap
from .precision import PrecisionParams, PrecisionSample, recover_sum, sample_precision
from .solver import InterruptMonitor, NodeOutcome, Rule, solve_node_main
from .strings import (
    Period,
    StringOracle,
    block_periodicity,
    char_at,
    clamped_range,
    hamming_distance,
    smallest_period,
)
from .testers import TesterVerdict, Verdict, equality_test, matching_test, periodicity_test
from .tree import PartitionNode, build_tree, tree_distance_exact

__version__ = "0.1.0"
