"""Simple undirected graphs, their incidence matrices and edge-deletion structure.

Text format (1-based vertices, edge order defines coordinate order)::

    c optional comment
    p <s> <m>
    e <u> <v>
    ...

A JSON document ``{"s": int, "edges": [[u, v], ...]}`` (1-based) is accepted
as well.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraphError, GraphFormatError
from .fields import FieldSpec, FMatrix, _as_field

EdgeSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..s-1``.

    Edge ``j`` is column ``j`` of the incidence matrix and coordinate ``j`` of
    every code built from the graph.  Pairs are stored as ``(min, max)``.
    """

    s: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.s < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        norm = []
        seen = set()
        for j, e in enumerate(self.edges):
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphFormatError(f"edge {j} is a loop at vertex {u}")
            if not (0 <= u < self.s and 0 <= v < self.s):
                raise GraphFormatError(f"edge {j} = ({u}, {v}) has a vertex outside [0, {self.s})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, s: int, edges: Iterable[Sequence[int]], one_based: bool = False) -> Graph:
        off = 1 if one_based else 0
        return cls(s, tuple((u - off, v - off) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self, removed: Iterable[int] = ()) -> list[list[tuple[int, int]]]:
        """Adjacency lists of ``(neighbour, edge index)`` skipping removed edges."""
        gone = set(removed)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.s)]
        for j, (u, v) in enumerate(self.edges):
            if j not in gone:
                adj[u].append((v, j))
                adj[v].append((u, j))
        return adj

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def is_bipartite(self) -> bool:
        return all(bipartition(self, c) is not None for c in components(self))

    def require_connected(self):
        if not self.is_connected():
            raise DisconnectedGraphError(f"graph with s={self.s}, m={self.m} is not connected")


@dataclass(frozen=True)
class Bipartition:
    left: tuple[int, ...]
    right: tuple[int, ...]


def _check_removed(G: Graph, removed: Iterable[int]) -> EdgeSet:
    out = tuple(sorted(set(int(j) for j in removed)))
    if out and (out[0] < 0 or out[-1] >= G.m):
        raise IndexError(f"edge index out of range [0, {G.m})")
    return out


def components(G: Graph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """Connected components of ``G`` minus the ``removed`` edges.

    Each component is sorted and the list is ordered by least vertex.
    """
    adj = G.adjacency(_check_removed(G, removed))
    seen = [False] * G.s
    out = []
    for start in range(G.s):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        out.append(tuple(sorted(comp)))
    return out


def bipartition(G: Graph, component: Iterable[int], removed: Iterable[int] = ()) -> Bipartition | None:
    """2-colouring of a component of ``G`` minus ``removed``.

    The side holding the least vertex is ``left``.  Returns ``None`` when the
    component contains an odd cycle.

    Raises:
        ValueError: ``component`` is not a connected component of the
            remaining graph.
    """
    comp = sorted(set(component))
    if not comp:
        raise ValueError("empty component")
    adj = G.adjacency(_check_removed(G, removed))
    members = set(comp)
    colour = {comp[0]: 0}
    queue = deque([comp[0]])
    odd = False
    while queue:
        u = queue.popleft()
        for v, _ in adj[u]:
            if v not in members:
                raise ValueError(f"vertex {v} is adjacent to the component but not in it")
            if v not in colour:
                colour[v] = colour[u] ^ 1
                queue.append(v)
            elif colour[v] == colour[u]:
                odd = True
    if len(colour) != len(members):
        raise ValueError("component is not connected in the remaining graph")
    if odd:
        return None
    left = tuple(v for v in comp if colour[v] == 0)
    right = tuple(v for v in comp if colour[v] == 1)
    return Bipartition(left, right)


def component_summary(G: Graph, removed: Iterable[int] = ()) -> tuple[tuple[int, bool], ...]:
    """``(size, bipartite?)`` for each component after deleting ``removed``."""
    removed = _check_removed(G, removed)
    return tuple((len(c), bipartition(G, c, removed) is not None) for c in components(G, removed))


def incidence_matrix(G: Graph, field) -> FMatrix:
    field = _as_field(field)
    a = np.zeros((G.s, G.m), dtype=np.int64)
    for j, (u, v) in enumerate(G.edges):
        a[u, j] = 1
        a[v, j] = 1
    return FMatrix(field, a, shape=(G.s, G.m))


# -- parsing and serialisation ----------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the ``p``/``e`` edge-list format."""
    s = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        try:
            if tok[0] == "p":
                if s is not None or len(tok) != 3:
                    raise GraphFormatError(f"line {lineno}: bad or repeated header {line!r}")
                s, m = int(tok[1]), int(tok[2])
                if s < 0 or m < 0:
                    raise GraphFormatError(f"line {lineno}: negative counts")
            elif tok[0] == "e":
                if s is None:
                    raise GraphFormatError(f"line {lineno}: edge before header")
                if len(tok) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
                u, v = int(tok[1]), int(tok[2])
                if not (1 <= u <= s and 1 <= v <= s):
                    raise GraphFormatError(f"line {lineno}: vertex out of range 1..{s}")
                edges.append((u - 1, v - 1))
            else:
                raise GraphFormatError(f"line {lineno}: unknown line type {tok[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if s is None:
        raise GraphFormatError("missing 'p <s> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(s, tuple(edges))


def parse_graph_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
        s = doc["s"]
        edges = doc["edges"]
        if not isinstance(s, int) or isinstance(s, bool):
            raise TypeError("s must be an integer")
        pairs = []
        for e in edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise TypeError("edge endpoints must be integers")
            if not (1 <= u <= s and 1 <= v <= s):
                raise GraphFormatError(f"edge {e} out of range 1..{s}")
            pairs.append((u - 1, v - 1))
    except GraphFormatError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from None
    return Graph(s, tuple(pairs))


def load_graph(path) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not UTF-8 ({exc})") from None
    if path.suffix == ".json":
        return parse_graph_json(text)
    return parse_graph(text)


def graph_to_text(G: Graph) -> str:
    lines = [f"p {G.s} {G.m}"] + [f"e {u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def graph_to_dict(G: Graph) -> dict:
    return {"s": G.s, "edges": [[u + 1, v + 1] for u, v in G.edges]}


def graph_to_json(G: Graph) -> str:
    return json.dumps(graph_to_dict(G))


# -- named graphs -------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def prism_graph() -> Graph:
    """Two triangles joined by a perfect matching (6 vertices, 9 edges)."""
    return Graph.from_edges(
        6,
        [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 6), (3, 5)],
        one_based=True,
    )


def petersen_graph() -> Graph:
    return Graph.from_edges(
        10,
        [
            (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
            (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
            (6, 8), (8, 10), (7, 10), (7, 9), (6, 9),
        ],
        one_based=True,
    )


def random_connected_graph(s: int, prob: float, rng: random.Random, max_tries: int = 10000) -> Graph:
    """Erdos-Renyi G(s, prob) conditioned on connectivity (rejection sampling)."""
    pairs = [(i, j) for i in range(s) for j in range(i + 1, s)]
    for _ in range(max_tries):
        G = Graph(s, tuple(e for e in pairs if rng.random() < prob))
        if G.is_connected():
            return G
    raise RuntimeError(f"no connected G({s}, {prob}) sample after {max_tries} tries")
