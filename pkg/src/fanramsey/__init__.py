"""Extremal and anti-Ramsey numbers of fans F(k, r), with exact small-case checks."""

from .detection import (
    EdgeColoring,
    FanWitness,
    contains_clique,
    find_fan,
    find_rainbow_fan,
    naive_fan_check,
    representative_subgraph,
)
from .formulas import (
    BoundedPair,
    ExtremalValue,
    ar_fan,
    construct_bounded_max,
    construct_extremal_fan_free,
    ex_clique,
    ex_fan,
    f_bounded,
    turan_count,
    turan_decrement,
)
from .graph import FanSpec, Graph, complete, fan, matching_number, turan
from .harness import lower_bound_coloring, verify_formula_grid, verify_lower_bound
from .oracles import brute_force_ar, brute_force_ex, brute_force_f, max_rainbow_free_coloring

__version__ = "0.1.0"
