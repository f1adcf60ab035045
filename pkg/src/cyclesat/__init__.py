"""Cycle-saturated graph families, verifiers, bounds, and exact search."""

from .bounds import (
    BoundEntry,
    BoundTable,
    ConsistencyReport,
    Observation,
    check_consistency,
    eval_bounds,
    known_exact,
)
from .codec import (
    EdgeListError,
    Graph6Error,
    detect_and_decode,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    labels_decode,
    labels_encode,
)
from .cycles import (
    CycleWitness,
    PathWitness,
    SearchBudgetExceeded,
    exists_path_of_length,
    has_cycle_of_length,
    shortest_cycle_through,
)
from .families import (
    ConstructionParamError,
    ConstructionParams,
    ConstructionPostconditionError,
    LabeledGraph,
    UnsuitableCoreError,
    build_h1,
    build_h2,
    build_h3,
    build_wheel,
    h1_decompose,
)
from .graphs import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    LoopEdgeError,
    VertexRangeError,
    brute_force_isomorphic,
    build_graph,
    canonical_code,
    canonical_form,
    canonical_form_and_code,
)
from .oracle import (
    CeilingExceeded,
    GenerationTimeout,
    OracleResult,
    append_golden,
    brute_classes_with_edges,
    classes_with_edges,
    exact_min,
    exact_min_sharded,
    search_stratum,
)
from .saturation import (
    Certificate,
    DegreePartition,
    SaturationVerdict,
    StructureReport,
    TooFewVertices,
    all_pairs,
    check_structure,
    degree_partition,
    greedy_saturate,
    is_ck_free,
    is_saturated,
    is_semisaturated,
    strip_leaves,
)
from .suitability import (
    MiningResult,
    SuitabilityReport,
    is_k_suitable,
    is_kk2_suitable,
    mine_suitable,
    split_pairs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
