"""
Weight hierarchies of incidence codes
=====================================

The r-th generalized Hamming weight of a code is the smallest support of an
r-dimensional subcode.  For the code spanned by a graph's incidence matrix,
the hierarchy can be computed three independent ways:

1. enumerate every r-dimensional subcode through its canonical RREF basis;
2. compute the dual hierarchy and take the complement under Wei duality;
3. read it off the graph: edge connectivity in characteristic 2 or for a
   bipartite graph, weak edge biparticity otherwise.
"""

from ghwlab import FieldSpec, dual, from_generator, ghw, hierarchy_bruteforce, wei_complete
from ghwlab.graphs import incidence_matrix, prism_graph
from ghwlab.invariants import lambda_sequence, upsilon_sequence
from ghwlab.verify import theorem_case

G = prism_graph()
for p in (2, 3):
    C = from_generator(incidence_matrix(G, FieldSpec(p)))
    D = dual(C)
    enumerated = hierarchy_bruteforce(C).deltas
    dual_side = hierarchy_bruteforce(D).deltas
    via_dual = wei_complete(C.n, C.k, None, hierarchy_bruteforce(D)).deltas
    seq = upsilon_sequence if theorem_case(G, p) == "upsilon" else lambda_sequence
    from_graph = tuple(x.value for x in seq(G, C.k))
    print(f"p = {p}: [n, k] = [{C.n}, {C.k}]")
    print(f"  enumeration : {enumerated}")
    print(f"  dual        : {dual_side}  ->  Wei completion {via_dual}")
    print(f"  graph side  : {from_graph}  ({theorem_case(G, p)})")

# ghw also returns a basis of the first minimizing subcode.
C = from_generator(incidence_matrix(G, FieldSpec(3)))
delta, basis = ghw(C, 2)
print("delta_2 over F_3 =", delta, "with basis", basis.tolist())
