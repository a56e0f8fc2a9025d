"""Edge connectivity, weak edge biparticity and edge biparticity of graphs.

All three are minima over edge deletion sets and are NP-hard for general
``r``; they are computed here by exhaustive search.  Candidate sets are
visited by cardinality and then lexicographically, in numpy batches, so the
first hit is both minimum and lexicographically least.  The predicates are
monotone ("at least r+1 components", "at least r bipartite components"), which
gives the same minima as the exact-count definitions: re-inserting a deleted
edge merges at most two components.

Each cardinality level is scanned by a compiled kernel that walks the
combinations in lexicographic order and tests each one with a parity
union-find (which tracks components and whether each is bipartite).  A level
can be split into rank ranges scanned on several threads; the earliest hit
wins, so results do not depend on the thread count.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import numpy as np
from numba import njit

from .errors import BudgetExceeded
from .graphs import EdgeSet, Graph, bipartition, component_summary, components

MAX_EDGES = 30
DEFAULT_BUDGET = 10**8
CHUNK = 1 << 18


@dataclass(frozen=True)
class InvariantResult:
    value: int
    witness: EdgeSet
    component_summary: tuple[tuple[int, bool], ...] = field(default=())


@dataclass(frozen=True)
class SignAssignment:
    """Vertex signs, ``+1`` or ``-1`` per vertex."""

    signs: tuple[int, ...]

    def same_sign_edges(self, G: Graph) -> EdgeSet:
        return tuple(j for j, (u, v) in enumerate(G.edges) if self.signs[u] == self.signs[v])


# -- compiled scan kernels ---------------------------------------------------

MODE_COMPONENTS = 0  # at least r components
MODE_BIPARTITE = 1  # at least r bipartite components
MODE_ALL_BIPARTITE = 2  # every component bipartite


@njit(cache=True, nogil=True)
def _find(parent, parity, x):
    p = 0
    while parent[x] != x:
        p ^= parity[x]
        x = parent[x]
    return x, p


@njit(cache=True, nogil=True)
def _holds(eu, ev, s, gone, mode, r, parent, parity, bad):
    for v in range(s):
        parent[v] = v
        parity[v] = 0
        bad[v] = False
    comps = s
    for j in range(eu.shape[0]):
        if gone[j]:
            continue
        ru, pu = _find(parent, parity, eu[j])
        rv, pv = _find(parent, parity, ev[j])
        if ru == rv:
            if pu == pv:
                bad[ru] = True
        else:
            parent[rv] = ru
            parity[rv] = pu ^ pv ^ 1
            bad[ru] = bad[ru] or bad[rv]
            comps -= 1
    if mode == 0:
        return comps >= r
    bip = 0
    for v in range(s):
        if parent[v] == v and not bad[v]:
            bip += 1
    if mode == 1:
        return bip >= r
    return bip == comps


@njit(cache=True, nogil=True)
def _scan(eu, ev, s, c, lo, hi, mode, r, binom):
    """Rank of the first combination in lexicographic ranks [lo, hi) that passes."""
    m = eu.shape[0]
    cmb = np.empty(c, dtype=np.int64)
    # unrank lo
    rank = lo
    x = 0
    for i in range(c):
        while binom[m - x - 1, c - i - 1] <= rank:
            rank -= binom[m - x - 1, c - i - 1]
            x += 1
        cmb[i] = x
        x += 1
    gone = np.zeros(m, dtype=np.bool_)
    parent = np.empty(s, dtype=np.int64)
    parity = np.empty(s, dtype=np.int64)
    bad = np.empty(s, dtype=np.bool_)
    for k in range(lo, hi):
        for i in range(c):
            gone[cmb[i]] = True
        ok = _holds(eu, ev, s, gone, mode, r, parent, parity, bad)
        for i in range(c):
            gone[cmb[i]] = False
        if ok:
            return k
        # advance to the next combination
        i = c - 1
        while i >= 0 and cmb[i] == m - c + i:
            i -= 1
        if i < 0:
            break
        cmb[i] += 1
        for t in range(i + 1, c):
            cmb[t] = cmb[t - 1] + 1
    return -1


def _binom_table(m: int) -> np.ndarray:
    t = np.zeros((m + 1, m + 1), dtype=np.int64)
    for a in range(m + 1):
        for b in range(a + 1):
            t[a, b] = math.comb(a, b)
    return t


def _unrank(rank: int, m: int, c: int) -> EdgeSet:
    out = []
    x = 0
    for i in range(c):
        while math.comb(m - x - 1, c - i - 1) <= rank:
            rank -= math.comb(m - x - 1, c - i - 1)
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def holds(G: Graph, removed, mode: int, r: int) -> bool:
    """Evaluate a search predicate on one deletion set (same code as the scan)."""
    eu = np.array([e[0] for e in G.edges], dtype=np.int64)
    ev = np.array([e[1] for e in G.edges], dtype=np.int64)
    gone = np.zeros(G.m, dtype=np.bool_)
    gone[list(removed)] = True
    s = max(G.s, 1)
    return bool(
        _holds(eu, ev, G.s, gone, mode, r, np.empty(s, np.int64), np.empty(s, np.int64), np.empty(s, np.bool_))
    )


# -- cardinality-ordered search ---------------------------------------------


def search_min_deletion(
    G: Graph,
    mode: int,
    r: int,
    start: int = 0,
    budget: int = DEFAULT_BUDGET,
    threads: int | None = 1,
) -> EdgeSet:
    """Lexicographically least minimum-cardinality deletion set passing a predicate.

    ``mode`` selects the predicate (``MODE_*``) with threshold ``r``; all three
    are monotone under further deletions.  Levels below ``start`` are skipped.

    Raises:
        BudgetExceeded: more than ``MAX_EDGES`` edges, or the cumulative number of
            subsets scanned would pass ``budget``.
    """
    m = G.m
    if m > MAX_EDGES:
        raise BudgetExceeded(f"edge-subset search on m={m} edges", 2**m, 2**MAX_EDGES)
    threads = threads or os.cpu_count() or 1
    eu = np.array([e[0] for e in G.edges], dtype=np.int64)
    ev = np.array([e[1] for e in G.edges], dtype=np.int64)
    binom = _binom_table(m)
    visited = 0
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for c in range(max(start, 0), m + 1):
            total = math.comb(m, c)
            visited += total
            if visited > budget:
                raise BudgetExceeded(f"edge-subset search up to size {c}", visited, budget)
            bounds = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
            for g in range(0, len(bounds), threads):
                group = bounds[g : g + threads]
                if pool is None:
                    hits = [_scan(eu, ev, G.s, c, lo, hi, mode, r, binom) for lo, hi in group]
                else:
                    hits = list(pool.map(lambda b: _scan(eu, ev, G.s, c, b[0], b[1], mode, r, binom), group))
                for hit in hits:
                    if hit >= 0:
                        return _unrank(int(hit), m, c)
    finally:
        if pool is not None:
            pool.shutdown()
    raise AssertionError("predicate never satisfied, even with every edge deleted")


# -- the invariants -----------------------------------------------------------


def _check_r(r: int, lo: int, hi: int, name: str):
    if not (lo <= r <= hi):
        raise ValueError(f"{name}: r={r} outside [{lo}, {hi}]")


def _result(G: Graph, witness: EdgeSet) -> InvariantResult:
    return InvariantResult(len(witness), witness, component_summary(G, witness))


def lambda_r(G: Graph, r: int, *, lower: int = 0, budget: int = DEFAULT_BUDGET, threads: int | None = 1) -> InvariantResult:
    """r-th edge connectivity: fewest deletions leaving ``r + 1`` components.

    ``lower`` is a caller-supplied valid lower bound (e.g. ``lambda_{r-1} + 1``).
    """
    G.require_connected()
    _check_r(r, 1, G.s - 1, "lambda_r")

    w = search_min_deletion(G, MODE_COMPONENTS, r + 1, start=max(r, lower), budget=budget, threads=threads)
    res = _result(G, w)
    assert len(res.component_summary) == r + 1, res
    return res


def upsilon_r(G: Graph, r: int, *, lower: int = 0, budget: int = DEFAULT_BUDGET, threads: int | None = 1) -> InvariantResult:
    """r-th weak edge biparticity: fewest deletions leaving ``r`` bipartite components.

    Non-bipartite leftover components are allowed.
    """
    G.require_connected()
    _check_r(r, 1, G.s, "upsilon_r")
    start = r - 1
    if r == 1 and not G.is_bipartite():
        start = 1

    w = search_min_deletion(G, MODE_BIPARTITE, r, start=max(start, lower), budget=budget, threads=threads)
    res = _result(G, w)
    # a minimum deletion set leaves exactly r bipartite components
    assert sum(b for _, b in res.component_summary) == r, res
    return res


def edge_biparticity_subsets(G: Graph, *, budget: int = DEFAULT_BUDGET, threads: int | None = 1) -> InvariantResult:
    """Fewest deletions making every component bipartite."""

    w = search_min_deletion(G, MODE_ALL_BIPARTITE, 0, start=0, budget=budget, threads=threads)
    return _result(G, w)


def _sign_matrix(s: int) -> np.ndarray:
    # row i: vertex 0 is +1, vertex v > 0 is -1 iff bit (v-1) of i is set
    idx = np.arange(1 << (s - 1), dtype=np.int64)
    bits = (idx[:, None] >> np.arange(s - 1)) & 1
    return np.concatenate([np.zeros((len(idx), 1), dtype=np.int64), bits], axis=1)


MAX_SIGN_VERTICES = 24


def edge_biparticity_signs(G: Graph) -> tuple[int, SignAssignment]:
    """Edge biparticity as the least number of same-sign edges over vertex signings.

    Only surjective signings are scanned, one per global flip (vertex 0 is
    ``+``).  Ties go to the first signing in binary order of the other
    vertices' signs.
    """
    G.require_connected()
    if G.s < 2:
        raise ValueError("sign enumeration needs at least 2 vertices")
    if G.s > MAX_SIGN_VERTICES:
        raise BudgetExceeded("sign enumeration", 2 ** (G.s - 1), 2 ** (MAX_SIGN_VERTICES - 1))
    neg = _sign_matrix(G.s)[1:]  # drop the constant signing
    u = np.array([e[0] for e in G.edges], dtype=np.int64)
    v = np.array([e[1] for e in G.edges], dtype=np.int64)
    same = (neg[:, u] == neg[:, v]).sum(axis=1)
    i = int(np.argmin(same))
    signs = tuple(-1 if x else 1 for x in neg[i].tolist())
    return int(same[i]), SignAssignment(signs)


def signs_from_witness(G: Graph, witness: EdgeSet) -> SignAssignment:
    """Signing from a 2-colouring of ``G`` minus ``witness``.

    For a minimum bipartizing set the same-sign edges are exactly the witness.
    """
    signs = [0] * G.s
    for comp in components(G, witness):
        bp = bipartition(G, comp, witness)
        if bp is None:
            raise ValueError("witness does not make the graph bipartite")
        for x in bp.left:
            signs[x] = 1
        for x in bp.right:
            signs[x] = -1
    return SignAssignment(tuple(signs))


def min_cut_oracle(G: Graph) -> int:
    """Minimum edge boundary over nonempty proper vertex subsets."""
    G.require_connected()
    if G.s < 2:
        raise ValueError("cuts need at least 2 vertices")
    if G.s > MAX_SIGN_VERTICES:
        raise BudgetExceeded("vertex-subset cut enumeration", 2 ** (G.s - 1), 2 ** (MAX_SIGN_VERTICES - 1))
    side = _sign_matrix(G.s)[1:]
    u = np.array([e[0] for e in G.edges], dtype=np.int64)
    v = np.array([e[1] for e in G.edges], dtype=np.int64)
    return int((side[:, u] != side[:, v]).sum(axis=1).min())


def lambda_sequence(G: Graph, r_max: int, **kw) -> list[InvariantResult]:
    out = []
    lower = 0
    for r in range(1, r_max + 1):
        res = lambda_r(G, r, lower=lower, **kw)
        out.append(res)
        lower = res.value + 1
    return out


def upsilon_sequence(G: Graph, r_max: int, **kw) -> list[InvariantResult]:
    """upsilon_1..upsilon_{r_max}; each value seeds the next search's lower bound.

    Re-inserting one edge of a minimum witness for ``upsilon_{r+1}`` costs at
    most one bipartite component, so ``upsilon_r < upsilon_{r+1}``.
    """
    out = []
    lower = 0
    for r in range(1, r_max + 1):
        res = upsilon_r(G, r, lower=lower, **kw)
        out.append(res)
        lower = res.value + 1
    return out
