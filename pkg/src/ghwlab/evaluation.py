"""Reed-Muller-type evaluation codes on projective point sets.

For a point set X in P^{s-1}, ``C_X(d)`` is spanned by the evaluations of the
degree-d monomials at the points.  Points taken from a graph are the columns
of its incidence matrix, used as-is (support sizes do not change under
nonzero rescaling of a coordinate).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .codes import DEFAULT_BUDGET, LinearCode, delta_auto, from_generator, ghw, hierarchy_via_dual
from .fields import FMatrix, _as_field, nullspace
from .graphs import Graph, incidence_matrix

Monomial = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class PointSet:
    """``m`` projective points of P^{s-1}, stored as the columns of an s x m matrix."""

    matrix: FMatrix

    def __post_init__(self):
        a = self.matrix.data
        if a.shape[1] and np.any(~a.any(axis=0)):
            raise ValueError("the zero vector is not a projective point")
        # distinct points: no column is a scalar multiple of another
        norm = a.copy()
        for j in range(a.shape[1]):
            lead = int(a[np.flatnonzero(a[:, j])[0], j])
            norm[:, j] = norm[:, j] * self.field.inv(lead) % self.field.p
        cols = {tuple(c) for c in norm.T.tolist()}
        if len(cols) != a.shape[1]:
            raise ValueError("two points are scalar multiples of each other")

    @property
    def field(self):
        return self.matrix.field

    @property
    def s(self) -> int:
        return self.matrix.rows

    @property
    def m(self) -> int:
        return self.matrix.cols

    @property
    def points(self) -> np.ndarray:
        return self.matrix.data.T


def points_from_graph(G: Graph, field) -> PointSet:
    G.require_connected()
    return PointSet(incidence_matrix(G, _as_field(field)))


def monomial_basis(s: int, d: int) -> list[Monomial]:
    """Exponent vectors of the degree-d monomials in s variables, graded lex.

    ``t_1^d`` comes first, ``t_s^d`` last.
    """
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    out = []
    for idx in itertools.combinations_with_replacement(range(s), d):
        e = [0] * s
        for i in idx:
            e[i] += 1
        out.append(tuple(e))
    return out


def evaluate_monomials(X: PointSet, d: int) -> FMatrix:
    """One row per monomial of ``monomial_basis(s, d)``: its values at the points."""
    p = X.field.p
    pts = X.points
    rows = []
    for idx in itertools.combinations_with_replacement(range(X.s), d):
        val = np.ones(X.m, dtype=np.int64)
        for i in idx:
            val = val * pts[:, i] % p
        rows.append(val)
    return FMatrix(X.field, np.array(rows, dtype=np.int64).reshape(len(rows), X.m))


def evaluation_code(X: PointSet, d: int) -> LinearCode:
    if d < 1:
        raise ValueError("degree must be at least 1")
    return from_generator(evaluate_monomials(X, d))


def delta_X(
    X: PointSet,
    d: int,
    r: int,
    method: str = "auto",
    *,
    budget: int = DEFAULT_BUDGET,
    threads: int | None = 1,
) -> int:
    """Least number of points where r independent degree-d forms do not all vanish.

    Equal to the r-th generalized Hamming weight of ``C_X(d)``.  ``method`` is
    ``"bruteforce"`` (subspace enumeration), ``"duality"`` (dual hierarchy and
    Wei duality) or ``"auto"`` (whichever of the two enumerates fewer subspaces).
    """
    C = evaluation_code(X, d)
    if not (1 <= r <= C.k):
        raise ValueError(f"r={r} outside [1, {C.k}]")
    if method == "bruteforce":
        return ghw(C, r, budget=budget, threads=threads)[0]
    if method == "duality":
        return hierarchy_via_dual(C, budget=budget, threads=threads).deltas[r - 1]
    if method == "auto":
        return delta_auto(C, r, budget=budget, threads=threads)[0]
    raise ValueError(f"unknown method {method!r}")


def hyp_X(X: PointSet, d: int, r: int, **kw) -> int:
    """Most points where r independent degree-d forms all vanish."""
    return X.m - delta_X(X, d, r, **kw)


def vanishing_linear_forms(X: PointSet) -> FMatrix:
    """RREF basis of the linear forms ``c`` with ``c . P = 0`` for every point."""
    return nullspace(X.matrix.T)


MAX_FORM_VARIABLES = 16


def _check_graph_points(X: PointSet):
    a = X.matrix.data
    if not (np.all((a == 0) | (a == 1)) and np.all(a.sum(axis=0) == 2)):
        raise ValueError("points are not incidence columns of a graph")


def biparticity_via_forms(X: PointSet, coeff_domain: str = "pm_one") -> int:
    """Least number of points off the zero set of a linear form with small coefficients.

    With ``coeff_domain="pm_one"`` the coefficients range over {1, -1}; for a
    graph this is its edge biparticity.  With ``"zero_pm_one"`` they range
    over {0, 1, -1}, not all zero, which gives the minimum distance of the
    incidence code.  Forms are taken up to sign (the first nonzero
    coefficient is +1).  In ``"zero_pm_one"`` mode a form vanishing on all
    of X is skipped, since it yields the zero codeword; this only happens
    for bipartite graphs.

    Raises:
        ValueError: p = 2 (the two signs coincide) or X is not a graph point set.
    """
    p = X.field.p
    if p == 2:
        raise ValueError("signed forms need characteristic != 2")
    _check_graph_points(X)
    s = X.s
    if s > MAX_FORM_VARIABLES:
        raise ValueError(f"form enumeration limited to {MAX_FORM_VARIABLES} variables")
    if coeff_domain == "pm_one":
        tails = np.array(list(itertools.product((1, p - 1), repeat=s - 1)), dtype=np.int64)
        coeffs = np.concatenate([np.ones((len(tails), 1), dtype=np.int64), tails], axis=1)
    elif coeff_domain == "zero_pm_one":
        blocks = []
        for lead in range(s):
            tails = np.array(list(itertools.product((0, 1, p - 1), repeat=s - lead - 1)), dtype=np.int64)
            blk = np.zeros((len(tails), s), dtype=np.int64)
            blk[:, lead] = 1
            blk[:, lead + 1 :] = tails.reshape(len(tails), s - lead - 1)
            blocks.append(blk)
        coeffs = np.concatenate(blocks)
    else:
        raise ValueError(f"unknown coefficient domain {coeff_domain!r}")
    weights = (coeffs @ X.matrix.data % p != 0).sum(axis=1)
    if coeff_domain == "zero_pm_one":
        weights = weights[weights > 0]
    return int(weights.min())

