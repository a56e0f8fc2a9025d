import pytest
from hypothesis import given, settings

from ghwlab.errors import DisconnectedGraphError, GraphFormatError
from ghwlab.fields import FieldSpec
from ghwlab.graphs import (
    Bipartition,
    Graph,
    bipartition,
    complete_graph,
    components,
    cycle_graph,
    graph_to_json,
    graph_to_text,
    incidence_matrix,
    load_graph,
    parse_graph,
    parse_graph_json,
)
from ghwlab.verify import fixture_root

from .conftest import connected_graphs

PRISM_EDGES = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 6), (3, 5)]
PETERSEN_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (2, 7), (3, 8),
    (4, 9), (5, 10), (6, 8), (8, 10), (7, 10), (7, 9), (6, 9),
]


def one_based(G):
    return [(u + 1, v + 1) for u, v in G.edges]


def test_parse_minimal():
    G = parse_graph("p 2 1\ne 1 2\n")
    assert G == Graph(2, ((0, 1),))


def test_parse_comments_and_blank_lines():
    G = parse_graph("c a comment\n\np 3 2\nc another\ne 3 1\ne 2 3\n")
    assert G.edges == ((0, 2), (1, 2))


def test_fixture_files():
    prism = load_graph(fixture_root() / "prism.txt")
    assert (prism.s, prism.m) == (6, 9) and one_based(prism) == PRISM_EDGES
    pet = load_graph(fixture_root() / "petersen.txt")
    assert (pet.s, pet.m) == (10, 15) and one_based(pet) == PETERSEN_EDGES
    assert load_graph(fixture_root() / "k2.txt") == Graph(2, ((0, 1),))


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",
        "p 2 1\n",
        "p 2 1\ne 1 2\ne 1 2\n",
        "p 2 2\ne 1 2\ne 2 1\n",
        "p 2 1\ne 1 1\n",
        "p 2 1\ne 1 3\n",
        "p 2 1\ne 0 1\n",
        "p 2 x\ne 1 2\n",
        "p 2 1\nq 1 2\n",
        "p 2 1\np 2 1\ne 1 2\n",
        "p 2 1\ne 1\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@pytest.mark.parametrize(
    "text",
    ['{"s": 2}', '{"s": 2, "edges": [[1, 3]]}', '{"s": "2", "edges": []}', "[", '{"s": 2, "edges": [[1]]}'],
)
def test_parse_json_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph_json(text)


def test_load_dispatches_on_suffix(tmp_path):
    f = tmp_path / "g.json"
    f.write_text('{"s": 3, "edges": [[1, 2], [2, 3]]}')
    assert load_graph(f) == Graph(3, ((0, 1), (1, 2)))
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"\xff\xfe")
    with pytest.raises(GraphFormatError):
        load_graph(bad)


def test_incidence_matrix():
    assert incidence_matrix(Graph(2, ((0, 1),)), FieldSpec(2)).tolist() == [[1], [1]]
    A = incidence_matrix(Graph.from_edges(6, PRISM_EDGES, one_based=True), FieldSpec(3))
    assert A.tolist() == [
        [1, 0, 1, 0, 0, 0, 1, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 1, 1, 0, 0],
        [0, 0, 0, 1, 1, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1, 0, 1, 0],
    ]


def test_components():
    K2 = Graph(2, ((0, 1),))
    assert components(K2, [0]) == [(0,), (1,)]
    assert components(Graph.from_edges(6, PRISM_EDGES, one_based=True)) == [tuple(range(6))]
    C4 = cycle_graph(4)
    assert components(C4, [0, 2]) == [(0, 3), (1, 2)]
    with pytest.raises(IndexError):
        components(C4, [4])


def test_bipartition():
    assert bipartition(Graph(1, ()), [0]) == Bipartition((0,), ())
    assert bipartition(complete_graph(3), [0, 1, 2]) is None
    assert bipartition(cycle_graph(4), [0, 1, 2, 3]) == Bipartition((0, 2), (1, 3))
    with pytest.raises(ValueError):
        bipartition(cycle_graph(4), [0, 1])
    with pytest.raises(ValueError):
        bipartition(cycle_graph(4), [0, 1], removed=[0])


def test_connectivity_and_bipartiteness():
    G = Graph(3, ((0, 1),))
    assert not G.is_connected()
    with pytest.raises(DisconnectedGraphError):
        G.require_connected()
    assert cycle_graph(6).is_bipartite() and not cycle_graph(5).is_bipartite()


def test_graph_validation():
    with pytest.raises(GraphFormatError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphFormatError):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(GraphFormatError):
        Graph(2, ((0, 2),))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(1, 8, 20))
def test_json_and_text_round_trip(G):
    assert parse_graph_json(graph_to_json(G)) == G
    assert parse_graph(graph_to_text(G)) == G


@settings(max_examples=100, deadline=None)
@given(connected_graphs(2, 7, 14))
def test_components_partition_vertices(G):
    removed = list(range(0, G.m, 2))
    comps = components(G, removed)
    assert sorted(v for c in comps for v in c) == list(range(G.s))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
