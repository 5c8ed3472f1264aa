"""Exact maximal-independent-set counting and extremal verification for
graphs with few cycles."""

from .canon import CanonResult, canonical_form, canonical_labeling, relabel
from .errors import (
    BadEndpoint,
    BadParameters,
    CountOverflow,
    GraphError,
    LoopRejected,
    MalformedGraph6,
    NoBlocks,
    NotCompleteComponents,
    NotTwoConnected,
    OrderTooLarge,
)
from .families import (
    MonotonicityReport,
    check_monotonicity,
    closed_form_table,
    extremal_bounded_connected_graph,
    extremal_bounded_graph,
    extremal_connected_graph,
    extremal_graph,
    extremal_graph_alt,
    max_mis,
    max_mis_bounded,
    max_mis_bounded_connected,
    max_mis_connected,
    max_mis_forest,
    max_mis_tree,
)
from .generate import GenerationConstraints, generate_graphs, labeled_class_count
from .graphs import (
    Graph,
    complete,
    cycle,
    decode_graph6,
    delete_closed_neighborhood,
    delete_vertex,
    disjoint_union,
    empty_graph,
    encode_graph6,
    exceptional_graph,
    iter_bits,
    make_graph,
    mask_of,
    path,
    star_join,
    to_dot,
)
from .mis import (
    count_mis,
    enumerate_mis,
    find_simplicial_vertex,
    is_maximal_independent,
    m_bound_components,
)
from .structure import (
    BlockDecomposition,
    CycleCensus,
    EarDecomposition,
    block_decomposition,
    count_cycles,
    cycles_pairwise_disjoint,
    cyclomatic_number,
    ear_decomposition,
    find_terminal_endblock,
    has_intersecting_cycles,
    has_multicycle_endblock,
    simple_cycles,
)
from .verify import (
    ClaimScanReport,
    FamilySpec,
    VerificationReport,
    claim_premise_scan,
    verify_classic,
    verify_part_one,
    verify_part_two,
)

__all__ = [name for name in dir() if not name.startswith("_")]
