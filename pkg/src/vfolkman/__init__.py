"""Exact tools for vertex Folkman numbers: arrowing, invariants, constructions, bounds."""

from .arrowing import (
    ArrowSpec, Coloring, arrows, encode_free_coloring_cnf, enumerate_free_colorings,
    find_free_coloring, in_Hv, is_free_coloring, reduce_by_independent_set,
)
from .claims import ClaimRecord, claim_ids, verify_claim
from .constructions import (
    dirac_extremal, graph_P, graph_Q, lru_extremal, mycielski, p_tilde, q_tilde,
    ramsey_witness, thm14_extremal, triple_c5,
)
from .folkman import (
    BoundResult, NonexistenceError, SearchBudget, VerificationFailed, extremal_graphs,
    folkman_lower_bound, folkman_upper_bound, verify_ramsey,
)
from .generation import Constraint, generate_graphs
from .graph import (
    CapacityError, CirculantSpec, Graph, Graph6Error, canonical_form, circulant, complement,
    complete, cycle, edgeless, induced, is_isomorphic, join, parse_graph6, remove, to_graph6,
)
from .invariants import (
    Budget, BudgetExhausted, InvariantReport, chromatic_number, clique_number, f_value,
    independence_number, invariants, is_vertex_critical, join_decompose,
)

__version__ = "0.1.0"
