"""Walks between graph colourings by single-vertex recolouring steps.

Library layout:

* :mod:`recolour.graph`, :mod:`recolour.colouring` -- graphs, colourings,
  vertex-freedom predicates, recolouring sequences and the file formats;
* :mod:`recolour.degeneracy` -- degeneracy orderings and prescribed-budget
  partitions;
* :mod:`recolour.engine` -- the constructive algorithms (scratch swaps,
  top-colour elimination, quadratic walks between colourings);
* :mod:`recolour.explorer` -- the exhaustive reconfiguration-graph oracle
  and the machine checks of the structural statements;
* :mod:`recolour.classifier` -- the decision procedures and frozen censuses;
* :mod:`recolour.corpus` -- non-isomorphic connected graph corpus and
  seeded samplers;
* :mod:`recolour.cli` -- the command-line interface.
"""

from .colouring import (
    Colouring,
    PathClass,
    RecolouringSequence,
    VertexState,
    apply_sequence,
    classify_path,
    colouring_from_text,
    colouring_to_text,
    is_frozen,
    is_proper,
    is_reduced_form,
    sequence_from_text,
    sequence_to_text,
    vertex_state,
)
from .classifier import (
    FrozenCensus,
    PathDecision,
    TypeReport,
    classify_instance,
    decide_k_colour_path,
    frozen_census,
)
from .degeneracy import (
    DegeneracyOrdering,
    DegeneratePartition,
    augment_to_maximal_independent,
    brute_force_degeneracy,
    check_non_regular_degeneracy,
    degeneracy,
    degeneracy_ordering,
    degenerate_partition,
)
from .engine import (
    EliminationPlan,
    KempeComponent,
    eliminate_top_colour,
    elimination_plan,
    find_path_non_regular,
    kempe_component,
    kempe_swap_via_scratch,
    path_between_delta_colourings,
    reverse_sequence,
)
from .explorer import (
    DEFAULT_STATE_LIMIT,
    CheckReport,
    ReconfigGraphSummary,
    ReconfigSpace,
    build_reconfig_graph,
    enumerate_colourings,
    oracle_distance,
    oracle_path,
    verify_lemma_cubic2,
    verify_lemma_first,
    verify_theorem_delta_plus_one,
    verify_theorem_main,
)
from .graph import Graph, connected_components, format_graph, parse_graph

__all__ = [name for name in dir() if not name.startswith("_")]
