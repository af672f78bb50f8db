"""Tree-likeness parameters of unweighted connected graphs.

Exact computation of hyperbolicity, thinness, slimness and interval thinness,
plus fast rooted-insize approximations that sandwich hyperbolicity between
rho/4 and 2*rho + 1 using a single BFS tree.
"""

from .halfint import HalfInt
from .graph import (
    Graph,
    BfsTree,
    GraphError,
    EmptyGraphError,
    SelfLoopError,
    DisconnectedError,
    DiameterOverflowError,
    NotATreeError,
    NotShortestPathTreeError,
    TreeMismatchError,
    TooLargeError,
    parse_graph,
    bfs,
    bfs_tree_from_parents,
    all_pairs_distances,
    gromov_product,
    in_interval,
)
from .exact import (
    ParamReport,
    hyperbolicity_exact,
    pointed_hyperbolicity,
    interval_thinness,
)
from .insize import (
    ApproxBounds,
    ApproxViolationError,
    InsizeWitness,
    approx_hyperbolicity,
    count_bfs_trees,
    distances_from_power,
    maxsize_over_trees,
    minsize_search,
    power_graph,
    rooted_insize_approx_dist,
    rooted_insize_dense,
    rooted_insize_sparse,
    rooted_thinness_mu,
)
from .thinness import (
    CollectionBounds,
    collection_params,
    pointed_thinness,
    rho_all_roots,
    thinness_exact,
)
from .slimness import pointed_slimness, pointed_slimness_at_most, slimness_exact
from .generators import (
    GridConstruction,
    centered_grid,
    glued_staircase,
    gen_family,
    staircase_grid,
)
from .cnf import (
    CnfFormula,
    CnfError,
    DimacsFormatError,
    PreprocessRequiredError,
    TriviallySatisfiableError,
    TriviallyUnsatisfiableError,
    parse_dimacs,
    preprocess_cnf,
    sat_to_graph,
    to_dimacs,
)

__version__ = "0.1.0"
