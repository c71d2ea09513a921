"""Cubical token systems: axiom checking with witnesses, message and
state contents, cube embeddings, example families, and the reversible
Markov chain over states."""

from .core import (
    Message,
    TokenSystem,
    adjacent_to,
    apply,
    build_system,
    check_isomorphism,
    is_adjacent,
    is_closed,
    is_concise,
    is_ineffective,
    is_stepwise_effective,
    is_vacuous,
    produced_sequence,
    reverse_message,
    reverse_of,
)
from .axioms import (
    AxiomVerdict,
    Classification,
    MessageWitness,
    PairWitness,
    TokenWitness,
    check_c1,
    check_c2,
    check_c3,
    check_c4,
    check_ma,
    check_mb,
    classify,
    enumerate_messages,
    is_cubical,
    message_violates_alternation,
    require_cubical,
)
from .content import (
    ContentSet,
    content_delta,
    effective_domain,
    message_content,
    occurrence_count,
    state_content,
    state_content_oracle,
    state_contents,
)
from .gsystem import (
    CubeGraph,
    GSystem,
    SetFamily,
    build_gsystem,
    family_gsystem,
    induced_cube_graph,
    make_family,
    message_to_walk,
    random_connected_cube_graph,
    render_set,
    walk_to_message,
)
from .representation import (
    Embedding,
    SystemGraph,
    embed,
    is_cubical_system_graph,
    system_graph,
    verify_embedding,
)
from .stochastic import (
    StochasticSystem,
    Trajectory,
    TransitionMatrix,
    build_chain,
    check_detailed_balance,
    check_regularity,
    distributions_tsv,
    empirical_frequencies,
    n_step_matrix,
    simulate,
    stationary_closed_form,
    stationary_solve,
)
from .families import (
    Relation,
    ac_order_family,
    comparability_family,
    enumerate_partial_orders,
    family_system,
    is_ac_order,
    is_downgradable_family,
    is_downgradable_set,
    is_strict_partial_order,
    is_upgradable_family,
    is_upgradable_set,
    is_well_graded,
    lattice_window,
    partial_order_family,
    smallest_comparability_gap,
    wellgradedness_gap_witness,
)
from .formats import (
    FamilyDocument,
    SystemDocument,
    format_family_document,
    format_system_document,
    parse_family_document,
    parse_system_document,
)

__all__ = [name for name in dir() if not name.startswith("_")]
