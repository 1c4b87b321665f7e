"""Degree-power (zeroth-order general Randić) sufficient conditions for Hamiltonicity."""

from .chvatal import ChvatalVerdict, chvatal_bipartite, chvatal_k_hamiltonian
from .conditions import (
    ConditionReport,
    Regime,
    Verdict,
    check_bipartite,
    check_hamiltonian,
    check_k_hamiltonian,
    check_large_n,
    check_regime,
    regime,
)
from .extremal import bipartite_deleted, kite, split_extremal
from .graph import (
    Bipartition,
    DegreeSequence,
    Graph,
    bipartition,
    degree_sequence,
    disjoint_union,
    emit_graph6,
    family,
    from_edge_list,
    join,
    parse_graph6,
)
from .indices import h_f_index, zeroth_order_randic
from .oracle import OracleResult, hamiltonian_cycle, is_k_hamiltonian
from .search import SearchParams, soundness_search
from .thresholds import (
    ThresholdRow,
    bipartite_bound,
    hamiltonian_bound,
    k_hamiltonian_bound,
    largest_root,
    threshold_table,
)

__version__ = "0.1.0"
