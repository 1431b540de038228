"""satblow: partite saturation in graph blow-ups.

Construct, verify and exactly solve partite-saturation and
partite-extra-saturation problems for subgraphs of blow-up hosts H[n].
"""

from .constructions import (
    FAMILIES,
    ConstructionSpec,
    VerificationRangeWarning,
    clique_exsat_construction,
    clique_exsat_edges,
    generic_exsat_construction,
    generic_exsat_edges,
    k4_construction,
    k4_saturation_edges,
    path_construction,
    path_saturation_edges,
    star_construction,
    star_saturation_edges,
    tree_exsat_construction,
    tree_exsat_edges,
    two_connected_edge_bound,
    two_connected_stages,
    two_connected_upper,
)
from .core import (
    BlowupHost,
    PartiteGraph,
    PartiteSelection,
    PartiteVertex,
    PatternGraph,
    blow_up,
    count_copies_through,
    count_partite_copies,
    creates_copy_through,
    cut_vertex_components,
    degree,
    find_partite_copy,
    has_partite_copy,
    is_two_connected,
    min_degree_per_part,
    selection_carries_pattern,
)
from .formats import (
    FormatError,
    builtin_pattern,
    dump_blowup_graph,
    dump_pattern,
    load_blowup_graph,
    load_pattern,
    parse_blowup_graph,
    parse_pattern,
    resolve_pattern,
    save_blowup_graph,
    save_pattern,
)
from .solve import (
    KrSatBounds,
    MResult,
    MultipartiteGraph,
    SolveResult,
    greedy_extra_saturate,
    greedy_saturate,
    kr_sat_bounds,
    m_value,
    min_exsat_exact,
    min_sat_exact,
    saturation_lower_bound,
)
from .verify import (
    LemmaCheck,
    Verdict,
    VerdictStatus,
    all_applicable_pass,
    check_k4_lemmas,
    is_extra_saturated,
    is_partite_free,
    is_partite_saturated,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupHost",
    "ConstructionSpec",
    "FAMILIES",
    "FormatError",
    "KrSatBounds",
    "LemmaCheck",
    "MResult",
    "MultipartiteGraph",
    "PartiteGraph",
    "PartiteSelection",
    "PartiteVertex",
    "PatternGraph",
    "SolveResult",
    "Verdict",
    "VerdictStatus",
    "VerificationRangeWarning",
    "all_applicable_pass",
    "blow_up",
    "builtin_pattern",
    "check_k4_lemmas",
    "clique_exsat_construction",
    "clique_exsat_edges",
    "count_copies_through",
    "count_partite_copies",
    "creates_copy_through",
    "cut_vertex_components",
    "degree",
    "dump_blowup_graph",
    "dump_pattern",
    "find_partite_copy",
    "generic_exsat_construction",
    "generic_exsat_edges",
    "greedy_extra_saturate",
    "greedy_saturate",
    "has_partite_copy",
    "is_extra_saturated",
    "is_partite_free",
    "is_partite_saturated",
    "is_two_connected",
    "k4_construction",
    "k4_saturation_edges",
    "kr_sat_bounds",
    "load_blowup_graph",
    "load_pattern",
    "m_value",
    "min_degree_per_part",
    "min_exsat_exact",
    "min_sat_exact",
    "parse_blowup_graph",
    "parse_pattern",
    "path_construction",
    "path_saturation_edges",
    "resolve_pattern",
    "save_blowup_graph",
    "save_pattern",
    "saturation_lower_bound",
    "selection_carries_pattern",
    "star_construction",
    "star_saturation_edges",
    "tree_exsat_construction",
    "tree_exsat_edges",
    "two_connected_edge_bound",
    "two_connected_stages",
    "two_connected_upper",
]
