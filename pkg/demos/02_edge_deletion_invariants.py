"""
Edge-deletion invariants of a graph
===================================

Three numbers measure how many edges must go before a graph falls apart in a
given way:

* the r-th edge connectivity, fewest deletions leaving r + 1 components;
* the r-th weak edge biparticity, fewest deletions leaving r bipartite
  components (other components may keep odd cycles);
* the edge biparticity, fewest deletions making the graph bipartite.

Each search scans edge subsets by size and returns the lexicographically
first witness of minimum size.
"""

from ghwlab import edge_biparticity_signs, edge_biparticity_subsets, min_cut_oracle
from ghwlab.graphs import petersen_graph, prism_graph
from ghwlab.invariants import lambda_sequence, upsilon_sequence

for name, G in (("prism", prism_graph()), ("petersen", petersen_graph())):
    lam = lambda_sequence(G, 3)
    ups = upsilon_sequence(G, 3)
    phi = edge_biparticity_subsets(G)
    print(f"{name}: lambda_1..3 = {[x.value for x in lam]}, upsilon_1..3 = {[x.value for x in ups]}, phi = {phi.value}")

    # The witness is a list of edge indices; the summary lists (size, bipartite?) per component.
    print("  lambda_2 witness edges:", [G.edges[j] for j in lam[1].witness], lam[1].component_summary)

    # The edge biparticity is also the least number of same-sign edges over vertex signings.
    value, signing = edge_biparticity_signs(G)
    print("  phi by signings:", value, signing.signs)

    # Edge connectivity agrees with a global minimum cut.
    print("  minimum cut:", min_cut_oracle(G))
