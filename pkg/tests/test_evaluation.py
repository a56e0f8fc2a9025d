import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghwlab.codes import from_generator, ghw
from ghwlab.fields import FieldSpec, FMatrix
from ghwlab.graphs import Graph, complete_graph, cycle_graph, incidence_matrix, petersen_graph, prism_graph
from ghwlab.evaluation import (
    PointSet,
    biparticity_via_forms,
    delta_X,
    evaluate_monomials,
    evaluation_code,
    hyp_X,
    monomial_basis,
    points_from_graph,
    vanishing_linear_forms,
)
from ghwlab.invariants import edge_biparticity_subsets

from .conftest import connected_graphs


def test_points_from_graph():
    X = points_from_graph(Graph(2, ((0, 1),)), 2)
    assert X.points.tolist() == [[1, 1]]
    X = points_from_graph(prism_graph(), 3)
    assert X.m == 9 and all(sorted(pt) == [0, 0, 0, 0, 1, 1] for pt in X.points.tolist())
    assert points_from_graph(petersen_graph(), 2).m == 15


def test_point_set_validation():
    F3 = FieldSpec(3)
    with pytest.raises(ValueError):
        PointSet(FMatrix(F3, [[1, 0], [0, 0]]))
    with pytest.raises(ValueError):
        PointSet(FMatrix(F3, [[1, 2], [1, 2]]))


def test_monomial_basis():
    assert monomial_basis(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert monomial_basis(3, 2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert len(monomial_basis(6, 2)) == 21


def test_evaluate_monomials_rows_follow_basis():
    X = points_from_graph(prism_graph(), 3)
    E = evaluate_monomials(X, 2)
    pts = X.points
    for row, exps in zip(E.data, monomial_basis(6, 2)):
        expected = [int(np.prod([pt[i] ** e for i, e in enumerate(exps)])) % 3 for pt in pts]
        assert row.tolist() == expected


def test_evaluation_codes_of_fixtures():
    X3 = points_from_graph(prism_graph(), 3)
    C1 = evaluation_code(X3, 1)
    assert (C1.n, C1.k) == (9, 6)
    assert C1 == from_generator(incidence_matrix(prism_graph(), FieldSpec(3)))
    assert evaluation_code(X3, 2).k == 9
    assert evaluation_code(points_from_graph(petersen_graph(), 2), 1).k == 9
    with pytest.raises(ValueError):
        evaluation_code(X3, 0)


def test_delta_and_hyp_examples():
    X3 = points_from_graph(prism_graph(), 3)
    X2 = points_from_graph(prism_graph(), 2)
    assert delta_X(X3, 1, 1) == 2
    assert hyp_X(X3, 1, 1) == 7
    assert delta_X(X2, 2, 4) == 4
    assert delta_X(X3, 1, 6) == 9
    assert hyp_X(points_from_graph(petersen_graph(), 2), 1, 1) == 12
    assert hyp_X(X2, 2, 9) == 0
    for method in ("bruteforce", "duality", "auto"):
        assert [delta_X(X3, 1, r, method=method) for r in range(1, 7)] == [2, 4, 5, 7, 8, 9]
    with pytest.raises(ValueError):
        delta_X(X3, 1, 7)
    with pytest.raises(ValueError):
        delta_X(X3, 1, 1, method="magic")


def test_vanishing_linear_forms():
    assert vanishing_linear_forms(points_from_graph(prism_graph(), 3)).rows == 0
    assert vanishing_linear_forms(points_from_graph(prism_graph(), 2)).tolist() == [[1] * 6]
    assert vanishing_linear_forms(points_from_graph(cycle_graph(4), 5)).tolist() == [[1, 4, 1, 4]]


def test_biparticity_via_forms_examples():
    X3 = points_from_graph(prism_graph(), 3)
    assert biparticity_via_forms(X3, "pm_one") == 2
    assert biparticity_via_forms(X3, "zero_pm_one") == 2
    assert biparticity_via_forms(points_from_graph(complete_graph(4), 5), "pm_one") == 2
    assert biparticity_via_forms(points_from_graph(cycle_graph(4), 3), "pm_one") == 0
    # the bipartition form vanishes on every point and is not a codeword of weight 0
    assert biparticity_via_forms(points_from_graph(cycle_graph(4), 3), "zero_pm_one") == 2
    with pytest.raises(ValueError):
        biparticity_via_forms(points_from_graph(prism_graph(), 2))
    with pytest.raises(ValueError):
        biparticity_via_forms(X3, "other")
    with pytest.raises(ValueError):
        biparticity_via_forms(PointSet(FMatrix(FieldSpec(3), [[1, 0], [0, 1]])))


# --- properties --------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(connected_graphs(2, 7, 12), st.sampled_from([3, 5]))
def test_signed_forms_recover_graph_quantities(G, p):
    X = points_from_graph(G, p)
    assert biparticity_via_forms(X, "pm_one") == edge_biparticity_subsets(G).value
    assert biparticity_via_forms(X, "zero_pm_one") == ghw(evaluation_code(X, 1), 1)[0]


@settings(max_examples=40, deadline=None)
@given(connected_graphs(2, 6, 10), st.sampled_from([2, 3, 5]), st.sampled_from([2, 3]))
def test_higher_degree_codes_are_full(G, p, d):
    X = points_from_graph(G, p)
    C = evaluation_code(X, d)
    assert C.k == G.m
    for r in range(1, min(5, G.m) + 1):
        assert delta_X(X, d, r) == r


@settings(max_examples=40, deadline=None)
@given(connected_graphs(2, 7, 12), st.sampled_from([2, 3, 5]))
def test_vanishing_forms_dimension(G, p):
    expected = 0 if (p != 2 and not G.is_bipartite()) else 1
    assert vanishing_linear_forms(points_from_graph(G, p)).rows == expected
