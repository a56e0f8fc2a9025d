"""
Incidence matrices over prime fields
====================================

The rank of a graph's incidence matrix depends on the characteristic.  Over
F_2 every column sums to zero, so the all-ones row vector is in the left
kernel.  In odd characteristic the left kernel is trivial for a graph with an
odd cycle and spanned by a signed bipartition vector otherwise.
"""

from ghwlab import FieldSpec, nullspace, rank, rref
from ghwlab.graphs import cycle_graph, incidence_matrix, prism_graph

# Two triangles joined by a perfect matching: six vertices, nine edges.
G = prism_graph()
for p in (2, 3):
    A = incidence_matrix(G, FieldSpec(p))
    print(f"over F_{p}: rank {rank(A)}, left kernel {nullspace(A.T).tolist()}")

# The reduced row echelon form is the canonical basis of the row space.
R, r, pivots = rref(incidence_matrix(G, FieldSpec(3)))
print("pivot columns over F_3:", pivots)

# A 4-cycle is bipartite: over F_5 the vector (1, -1, 1, -1) kills every column.
A = incidence_matrix(cycle_graph(4), FieldSpec(5))
print("4-cycle left kernel over F_5:", nullspace(A.T).tolist())
