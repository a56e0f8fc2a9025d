"""Generalized Hamming weights of incidence-matrix and Reed-Muller-type codes of graphs.

The weight hierarchy of the code spanned by the rows of a graph's incidence
matrix is governed by edge-deletion invariants of the graph: the r-th edge
connectivity in characteristic 2 or for bipartite graphs, and the r-th weak
edge biparticity otherwise.  This package computes both sides exactly and
checks that they agree.
"""

from .codes import (
    LinearCode,
    WeightHierarchy,
    dual,
    from_generator,
    gaussian_binomial,
    ghw,
    hierarchy_bruteforce,
    minimum_distance,
    support_weight,
    wei_complete,
)
from .errors import BudgetExceeded, DisconnectedGraphError, GraphFormatError
from .evaluation import (
    PointSet,
    biparticity_via_forms,
    delta_X,
    evaluation_code,
    hyp_X,
    monomial_basis,
    points_from_graph,
    vanishing_linear_forms,
)
from .fields import FieldSpec, FMatrix, mat_mul, nullspace, rank, rref
from .graphs import (
    Bipartition,
    Graph,
    bipartition,
    components,
    incidence_matrix,
    load_graph,
    parse_graph,
    parse_graph_json,
    petersen_graph,
    prism_graph,
)
from .invariants import (
    InvariantResult,
    SignAssignment,
    edge_biparticity_signs,
    edge_biparticity_subsets,
    lambda_r,
    min_cut_oracle,
    upsilon_r,
)
from .verify import CorpusSpec, RandomCorpus, VerificationReport, corpus_verify, verify_graph

__version__ = "0.1.0"
