import pytest
from hypothesis import given, settings

from ghwlab.errors import BudgetExceeded, DisconnectedGraphError
from ghwlab.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    path_graph,
    petersen_graph,
    prism_graph,
)
from ghwlab.invariants import (
    edge_biparticity_signs,
    edge_biparticity_subsets,
    holds,
    lambda_r,
    lambda_sequence,
    min_cut_oracle,
    search_min_deletion,
    signs_from_witness,
    upsilon_r,
    upsilon_sequence,
)

from .conftest import connected_graphs, oracle_counts, oracle_invariants

K2 = Graph(2, ((0, 1),))


# --- frozen examples ---------------------------------------------------------


@pytest.mark.parametrize(
    "G, r, expected",
    [(prism_graph(), 1, 3), (prism_graph(), 3, 6), (petersen_graph(), 2, 5), (cycle_graph(4), 1, 2)],
)
def test_lambda_examples(G, r, expected):
    res = lambda_r(G, r)
    assert res.value == expected
    assert len(res.witness) == expected
    assert len(components(G, res.witness)) == r + 1


@pytest.mark.parametrize(
    "G, r, expected",
    [(prism_graph(), 1, 2), (prism_graph(), 3, 5), (petersen_graph(), 1, 3), (complete_graph(3), 1, 1)],
)
def test_upsilon_examples(G, r, expected):
    res = upsilon_r(G, r)
    assert res.value == expected
    assert sum(bip for _, bip in res.component_summary) == r


@pytest.mark.parametrize(
    "G, expected",
    [(prism_graph(), 2), (petersen_graph(), 3), (cycle_graph(6), 0), (complete_graph(4), 2)],
)
def test_edge_biparticity_examples(G, expected):
    assert edge_biparticity_subsets(G).value == expected
    value, signing = edge_biparticity_signs(G)
    assert value == expected
    assert len(signing.same_sign_edges(G)) == expected


def test_signs_of_bipartite_graph_are_its_bipartition():
    value, signing = edge_biparticity_signs(cycle_graph(6))
    assert value == 0
    assert signing.signs == (1, -1, 1, -1, 1, -1)


@pytest.mark.parametrize("G, expected", [(K2, 1), (prism_graph(), 3), (petersen_graph(), 3)])
def test_min_cut_examples(G, expected):
    assert min_cut_oracle(G) == expected


def test_full_hierarchies_of_fixtures():
    assert [x.value for x in lambda_sequence(prism_graph(), 5)] == [3, 5, 6, 8, 9]
    assert [x.value for x in upsilon_sequence(prism_graph(), 6)] == [2, 4, 5, 7, 8, 9]
    assert [x.value for x in lambda_sequence(petersen_graph(), 9)] == [3, 5, 7, 9, 10, 12, 13, 14, 15]


def test_upsilon_of_bipartite_graph_is_literal():
    # no deletion needed for one bipartite component
    assert upsilon_r(cycle_graph(4), 1).value == 0
    assert [x.value for x in upsilon_sequence(cycle_graph(4), 4)] == [0, 2, 3, 4]


def test_range_and_connectivity_errors():
    with pytest.raises(ValueError):
        lambda_r(prism_graph(), 6)
    with pytest.raises(ValueError):
        upsilon_r(prism_graph(), 0)
    with pytest.raises(DisconnectedGraphError):
        lambda_r(Graph(3, ((0, 1),)), 1)
    with pytest.raises(DisconnectedGraphError):
        min_cut_oracle(Graph(3, ((0, 1),)))


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        lambda_r(petersen_graph(), 9, budget=1000)
    with pytest.raises(BudgetExceeded):
        lambda_r(complete_graph(9), 1)  # 36 edges > hard limit


def test_threads_do_not_change_witnesses():
    G = petersen_graph()
    for r in (1, 2, 3):
        assert upsilon_r(G, r, threads=1) == upsilon_r(G, r, threads=4)
        assert lambda_r(G, r, threads=1) == lambda_r(G, r, threads=4)


def test_witness_is_lexicographically_first():
    # 4-cycle: deleting edges {0,1} isolates vertex 1, the first pair in lex order
    assert lambda_r(cycle_graph(4), 1).witness == (0, 1)
    assert search_min_deletion(path_graph(3), 0, 2, start=0) == (0,)


def test_holds_matches_oracle():
    G = prism_graph()
    for removed in [(), (0,), (0, 1, 2), (6, 7, 8), (0, 3)]:
        comps, bip = oracle_counts(G, removed)
        assert holds(G, removed, 0, comps) and not holds(G, removed, 0, comps + 1)
        assert holds(G, removed, 1, bip) and not holds(G, removed, 1, bip + 1)
        assert holds(G, removed, 2, 0) == (bip == comps)


# --- properties against the plain-Python oracle --------------------------------


@settings(max_examples=60, deadline=None)
@given(connected_graphs(2, 6, 11))
def test_invariants_match_exhaustive_oracle(G):
    lam, ups, phi = oracle_invariants(G)
    assert [x.value for x in lambda_sequence(G, G.s - 1)] == [lam[r] for r in range(1, G.s)]
    assert [x.value for x in upsilon_sequence(G, G.s)] == [ups[r] for r in range(1, G.s + 1)]
    assert edge_biparticity_subsets(G).value == phi
    for r in range(1, G.s):
        assert lambda_r(G, r).value == lam[r]  # without the sequence lower bound
    for r in range(1, G.s + 1):
        assert upsilon_r(G, r).value == ups[r]


@settings(max_examples=80, deadline=None)
@given(connected_graphs(2, 7, 14))
def test_phi_three_ways(G):
    res = edge_biparticity_subsets(G)
    value, signing = edge_biparticity_signs(G)
    assert value == res.value
    # a 2-colouring of G minus a minimum bipartizing set has exactly that set as same-sign edges
    witness_signing = signs_from_witness(G, res.witness)
    assert witness_signing.same_sign_edges(G) == res.witness
    assert len(signing.same_sign_edges(G)) == value


@settings(max_examples=80, deadline=None)
@given(connected_graphs(2, 7, 14))
def test_structural_bounds(G):
    lam = [x.value for x in lambda_sequence(G, G.s - 1)]
    ups = [x.value for x in upsilon_sequence(G, G.s)]
    assert all(a < b for a, b in zip(lam, lam[1:]))
    assert all(a < b for a, b in zip(ups, ups[1:]))
    assert lam[-1] == G.m and ups[-1] == G.m
    assert min_cut_oracle(G) == lam[0]
    assert ups[0] <= edge_biparticity_subsets(G).value


def test_complete_bipartite_values():
    G = complete_bipartite_graph(2, 3)
    assert edge_biparticity_subsets(G).value == 0
    assert lambda_r(G, 1).value == 2
