"""
Evaluation codes on the points of a graph
=========================================

The columns of an incidence matrix are points of projective space.
Evaluating all degree-d monomials at those points gives a Reed-Muller-type
code.  In degree 1 this is the incidence code again; from degree 2 on, the
monomials t_i t_j separate the edges and the code is the whole space.
"""

from ghwlab import biparticity_via_forms, delta_X, evaluation_code, hyp_X, points_from_graph
from ghwlab.evaluation import monomial_basis, vanishing_linear_forms
from ghwlab.graphs import complete_graph, prism_graph

G = prism_graph()
X = points_from_graph(G, 3)
print("points:", X.points.tolist())
print("degree-2 monomials in 6 variables:", len(monomial_basis(6, 2)))

for d in (1, 2, 3):
    C = evaluation_code(X, d)
    deltas = [delta_X(X, d, r) for r in range(1, C.k + 1)]
    print(f"d = {d}: [n, k] = [{C.n}, {C.k}], delta_X = {deltas}")

# hyp_X counts the common zeros: the points where r independent forms all vanish.
print("hyp_X(1, 1) =", hyp_X(X, 1, 1))

# No nonzero linear form vanishes on the points of a non-bipartite graph in odd characteristic.
print("vanishing linear forms:", vanishing_linear_forms(X).tolist())

# Forms with coefficients +1/-1 recover the edge biparticity; allowing 0 gives the minimum distance.
for name, H in (("prism", G), ("K4", complete_graph(4))):
    Y = points_from_graph(H, 5)
    print(f"{name} over F_5: +-1 forms {biparticity_via_forms(Y, 'pm_one')}, "
          f"0/+-1 forms {biparticity_via_forms(Y, 'zero_pm_one')}")
