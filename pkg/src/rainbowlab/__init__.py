"""Anti-Ramsey numbers of disjoint triangles: constructions, exact search and extremal checks."""

from .coloring import (
    EdgeColoring,
    RainbowWitness,
    build_lower_bound_coloring,
    color_multiset,
    extract_rainbow_subgraph,
    has_rainbow_packing,
)
from .errors import ResourceExhausted
from .graph import (
    Graph,
    ar_formula,
    complete_graph,
    join,
    moon_ex,
    turan_edges,
    turan_graph,
)
from .isomorphism import are_isomorphic
from .packing import (
    common_neighborhood,
    enumerate_triangles,
    has_k_disjoint_triangles,
    is_friendly,
    max_independent_triangles,
    max_matching,
    max_matching_bruteforce,
)
from .search import SearchReport, ar_exact, exists_avoiding_coloring

__version__ = "0.1.0"
