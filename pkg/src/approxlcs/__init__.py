"""Exact restricted approximate longest-common-substring solvers.

Public indices are 0-based with exclusive ends; the CLI reports 1-based.
"""

from .edit_prefix import PrefixTable, band_width, edit_prefix_table, max_lcp_e
from .errors import *  # noqa: F401,F403
from .gadgets import (
    GadgetInstance,
    build_rklcs_instance,
    build_rklcss_instance,
    gamma,
    gamma_indexed,
    mu,
    random_family,
    tau,
    tau_indexed,
)
from .hamming_lcp import LcpTable, MaxLcpArray, lcp_hk_table, lcp_tables_for, max_lcp_h
from .indeterminate import (
    BitMatrix,
    compatibility_matrix,
    encode_boolean_matrix,
    lcp_hk_indet,
    solve_rkt_lcs_indet,
)
from .lengthstat import LengthStatTable, length_stat_edit, length_stat_hamming
from .solver import (
    RK_LCS,
    RK_LCSS,
    RKT_LCS,
    Candidate,
    NoSolution,
    Solution,
    Witness,
    anchor_lengths,
    rk_lcss_feasible,
    solve_rk_lcs,
    solve_rk_lcs_maxlcp,
    solve_rk_lcss,
    solve_rkt_lcs,
    solve_rkt_lcs_via_subsets,
)
from .strings import (
    BINARY,
    DNA,
    LOWERCASE,
    Alphabet,
    DistanceMetric,
    IndeterminateString,
    StringSet,
    distance,
    edit_distance,
    hamming_distance,
    validate_string_set,
)

__version__ = "0.1.0"
