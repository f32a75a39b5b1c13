"""Linear extension diameter toolkit for finite posets."""

from .errors import (
    CapExceeded,
    ClassViolation,
    CycleDetected,
    InconsistentConstraints,
    LedlabError,
    MalformedDocument,
    NotALinearExtension,
    NotIntervalOrder,
    SizeExceeded,
    WidthExceeded,
)
from .poset import (
    ChainDecomposition,
    Poset,
    WeightedPoset,
    critical_pairs,
    decompose,
    find_twins,
    from_cover_relations,
    from_relation_masks,
    height,
    is_3layer,
    is_critical_pair,
    is_graded,
    is_module,
    max_antichain_exhaustive,
    substitute_chains,
    substitute_element,
    width,
)
from .linext import (
    DEFAULT_CAP,
    Conjecture1Report,
    LeGraph,
    brute_force_led,
    conjecture1_holds,
    count_linear_extensions,
    diametral_les,
    diametral_pairs,
    distance,
    enumerate_linear_extensions,
    is_diametrally_reversing,
    is_linear_extension,
    is_reversing,
    dp_led,
    le_graph,
    le_graph_diameter,
    le_graph_distance_matrix,
    max_distance_each,
    max_distance_from,
    max_reversals_constrained,
    order_ideals,
    series_factors,
    weighted_distance,
)
from .width3 import Width3Solver, chain_cover, dp_led_width3, enumerate_downsets
from .search import exact_weighted_led
from .families import (
    IntervalRepresentation,
    antichain,
    b4_doubles_pair,
    b4_star,
    b4_star_weighted,
    boolean_lattice,
    boolean_lex_pair,
    boolean_subposet,
    canonical_interval_representation,
    chain,
    counterexample_skeleton,
    interval_order,
    m_poset,
    maximal_antichains,
    n_poset,
    p_star,
    p_star_weighted,
    random_3layer,
    random_height2,
    random_interval_order,
    random_poset,
    random_two_dim,
    random_unit_interval_order,
    random_width3,
    random_with_module,
    random_with_twin,
    red_core,
    two_plus_two,
    unit_interval_order,
)
from .gadget import (
    BipartiteGraph,
    GadgetInstance,
    ReductionReport,
    balanced_independent_set,
    base_distance,
    build_gadget,
    extremal_pair,
    preprocess,
    two_disjoint_bis,
    verify_reduction_micro,
)
from .docio import (
    PosetDocument,
    document,
    emit,
    emit_graph,
    le_word,
    legraph_dot,
    parse,
    parse_graph,
    read_document,
    read_graph,
    write_document,
)
from .boolexp import (
    BooleanLedReport,
    all_boolean_les,
    boolean_led,
    boolean_led_report,
    canonical_les,
    conjectured_led,
)
from .verify import B4StarReport, PStarReport, b4star_report, pstar_report

__version__ = "0.3.0"
