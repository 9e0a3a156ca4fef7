"""Exact clique-maximization toolkit for forbidden-subgraph problems with a
bounded matching number: constructions, closed-form clique counting,
exhaustive search with witnesses, and a claim-verification harness."""

from .graphs import (
    Clique,
    ConstructionExpr,
    Cycle,
    Graph,
    GraphLeaf,
    Graph6Error,
    Independent,
    Join,
    Named,
    Path,
    SizeLimitError,
    Turan,
    Union,
    build_graph,
    clique,
    components,
    cycle,
    decode_graph6,
    encode_graph6,
    from_edges,
    independent,
    join,
    path,
    turan,
    union,
)
from .kernels import BACKEND
from .matching import (
    TutteBergeWitness,
    matching_number,
    matching_number_oracle,
    maximum_matching_edges,
    tutte_berge_witness,
)
from .subgraphs import (
    CanonicalForm,
    CliqueVector,
    canonical_form,
    canonical_graph,
    chromatic_number,
    clique_vector,
    contains,
    count_cliques,
    count_copies,
    independent_deletion_family,
    isomorphic,
    longest_path_order,
    min_color_class,
    bipartite_split,
)
from .constructions import (
    ApplicabilityError,
    EvenPathParams,
    OddPathParams,
    bipartite_clique_bounds,
    build_named,
    clique_vector_of_expr,
    deletion_extremal,
    even_path_params,
    expr_clique_count,
    hub_expr,
    named_min_order,
    odd_path_params,
)
from .search import (
    ExtremalRecord,
    ForbiddenSpec,
    count_admissible,
    ex_search,
    is_admissible,
)

__version__ = "0.1.0"
