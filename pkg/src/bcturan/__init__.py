"""Connected-bipartite Turán toolkit for forbidden paths and brooms."""

from .certify import (
    BaseCase,
    CertStep,
    Certificate,
    RemoveOne,
    RemoveTwo,
    VerificationResult,
    bound_from_certificate,
    build_certificate,
    verify_certificate,
)
from .constructions import broom_circulant, complete_bipartite, path_extremal
from .graph_core import (
    BipartiteGraph,
    VertexRef,
    canonical_form,
    canonical_key,
    from_edges,
    new_graph,
    parse_vertex,
)
from .lemmas import (
    LemmaReport,
    RootedSpanningTree,
    check_degree_lemma,
    check_endpoint_lemma,
    dfs_tree,
    find_removable_pair,
    find_removable_pair_constructive,
    find_removable_vertex,
    find_removable_vertex_constructive,
    leaf_in_part,
)
from .patterns import (
    Broom,
    Embedding,
    Path,
    Pattern,
    contains_pattern,
    is_free,
    longest_path,
    longest_path_from,
    longest_path_length,
    parse_pattern,
)
from .search import (
    SearchMode,
    TableRow,
    TuranQuery,
    TuranResult,
    enumerate_free_graphs,
    turan_oracle,
    turan_search,
    verify_theorem_table,
)

__version__ = "0.1.0"
