"""Community detection by maximizing influence-based modularity."""

from .datasets import load_football, load_karate, load_polbooks
from .graph_io import (
    Graph,
    GraphValidationError,
    ParseError,
    degrees,
    parse_edge_list,
    parse_gml,
    read_graph,
    to_edge_list,
)
from .influence import (
    DegenerateGraphError,
    InfluenceDomainError,
    InfluenceMatrix,
    InfluenceParams,
    influence_matrix,
    influence_series_oracle,
    katz_scores,
    max_alpha,
)
from .linalg import (
    ConvergenceError,
    EigenPair,
    SingularMatrixError,
    leading_symmetric_eigenpair,
    lu_solve,
    spectral_radius,
)
from .metrics import PurityReport, UndefinedPurityError, confusion_summary, purity
from .modularity import (
    ModularityContext,
    build_context,
    delta_q,
    score_partition,
    subgroup_matrix,
)
from .partition import Partition, SplitRecord, bisect, detect_communities, detect_in_context

__version__ = "0.1.0"
