"""Linear codes over F_p and their generalized Hamming weights.

``delta_r(C)`` is the least support size of an r-dimensional subcode.  It is
computed by visiting every r-dimensional subspace of the message space
exactly once: each subspace has a unique r x k coefficient matrix in reduced
row echelon form, fixed by its pivot columns and the free entries to the
right of each pivot.  The support of a subspace is the union of the supports
of any basis, so for a fixed pivot pattern the support masks of every
possible basis row are tabulated once (as packed uint64 words) and the
subspace supports are their OR-combinations.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .fields import FieldSpec, FMatrix, _as_field, mat_mul, nullspace, rank, rref, vstack

DEFAULT_BUDGET = 10**8
CHUNK = 1 << 18


def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^k."""
    if not (0 <= r <= k):
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    if q < 2:
        raise ValueError("q must be at least 2")
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (r - i) - 1
    return num // den


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k] code held by its RREF generator matrix."""

    gen: FMatrix

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def p(self) -> int:
        return self.gen.p

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"

    def contains(self, vectors: FMatrix) -> bool:
        return rank(vstack(self.gen, vectors)) == self.k


def from_generator(M: FMatrix) -> LinearCode:
    """The row space of ``M``; dependent rows are dropped."""
    return LinearCode(rref(M)[0])


def full_space(field, n: int) -> LinearCode:
    return LinearCode(FMatrix.identity(_as_field(field), n))


def dual(C: LinearCode) -> LinearCode:
    if C.k == 0:
        return full_space(C.field, C.n)
    return LinearCode(nullspace(C.gen))


def _words(n: int) -> int:
    return max(1, (n + 63) // 64)


def support_masks(vectors: np.ndarray, n: int) -> np.ndarray:
    """Pack the nonzero pattern of each row into ``(rows, words)`` uint64."""
    bits = np.asarray(vectors) != 0
    w = _words(n)
    padded = np.zeros((bits.shape[0], 64 * w), dtype=bool)
    padded[:, :n] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view("<u8").reshape(bits.shape[0], w)


def popcount(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks).sum(axis=1, dtype=np.int64)


def support_weight(C: LinearCode, basis: FMatrix) -> int:
    """Size of the support of the subspace spanned by the rows of ``basis``.

    Raises:
        ValueError: some row of ``basis`` is not a codeword.
    """
    if basis.field != C.field or basis.cols != C.n:
        raise ValueError("basis does not live in the ambient space of the code")
    if basis.rows and not C.contains(basis):
        raise ValueError("basis rows are not all in the code")
    return int(np.any(basis.data != 0, axis=0).sum())


def hamming_weights(vectors: np.ndarray) -> np.ndarray:
    return (np.asarray(vectors) != 0).sum(axis=1)


def codewords(C: LinearCode) -> np.ndarray:
    """All p^k codewords in message order (first message coordinate most significant)."""
    p, k = C.p, C.k
    msgs = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64).reshape(-1, k)
    return msgs @ C.gen.data % p


def minimum_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Least weight of a nonzero codeword, by listing every codeword."""
    if C.k == 0:
        raise ValueError("the zero code has no minimum distance")
    total = C.p**C.k
    if total > budget:
        raise BudgetExceeded("codeword enumeration", total, budget)
    w = hamming_weights(codewords(C))
    return int(w[1:].min())


# -- subspace enumeration -------------------------------------------------------


def pivot_patterns(k: int, r: int):
    """Pivot column tuples of r x k RREF matrices, lexicographic."""
    return itertools.combinations(range(k), r)


def free_columns(k: int, pivots) -> list[list[int]]:
    """For each pivot row, the non-pivot columns to its right (the free entries)."""
    piv = set(pivots)
    return [[c for c in range(pc + 1, k) if c not in piv] for pc in pivots]


def count_subspaces(k: int, r: int, q: int) -> int:
    """Subspace count obtained by summing the canonical patterns (equals gaussian_binomial)."""
    return sum(q ** sum(len(f) for f in free_columns(k, P)) for P in pivot_patterns(k, r))


def _coefficients(p: int, f: int) -> np.ndarray:
    return np.array(list(itertools.product(range(p), repeat=f)), dtype=np.int64).reshape(p**f, f)


def _row_tables(gen: np.ndarray, p: int, pivots, frees) -> list[np.ndarray]:
    tables = []
    for pc, fc in zip(pivots, frees):
        coeffs = _coefficients(p, len(fc))
        rows = (gen[pc] + coeffs @ gen[fc]) % p if fc else gen[pc][None, :]
        tables.append(support_masks(rows, gen.shape[1]))
    return tables


def _or_product(tables: list[np.ndarray]) -> np.ndarray:
    acc = tables[0]
    for t in tables[1:]:
        acc = (acc[:, None, :] | t[None, :, :]).reshape(-1, acc.shape[1])
    return acc


def _scan(tables: list[np.ndarray], prefix: np.ndarray, floor: int) -> tuple[int, int]:
    sizes = [len(t) for t in tables]
    total = int(np.prod(sizes))
    if total <= CHUNK or len(tables) == 1:
        w = popcount(_or_product(tables) | prefix)
        i = int(np.argmin(w))
        return int(w[i]), i
    rest = total // sizes[0]
    best = (np.iinfo(np.int64).max, -1)
    for i0, row in enumerate(tables[0]):
        w, i = _scan(tables[1:], prefix | row, floor)
        if w < best[0]:
            best = (w, i0 * rest + i)
            if w <= floor:
                break
    return best


def _decode(k: int, p: int, pivots, frees, index: int) -> np.ndarray:
    """The RREF coefficient matrix for a flat index of the free-entry product."""
    r = len(pivots)
    coef = np.zeros((r, k), dtype=np.int64)
    sizes = [p ** len(f) for f in frees]
    digits = []
    for size in reversed(sizes):
        digits.append(index % size)
        index //= size
    digits.reverse()
    for j, (pc, fc, d) in enumerate(zip(pivots, frees, digits)):
        coef[j, pc] = 1
        for c in reversed(fc):
            coef[j, c] = d % p
            d //= p
    return coef


def ghw(
    C: LinearCode,
    r: int,
    *,
    budget: int = DEFAULT_BUDGET,
    floor: int | None = None,
    threads: int | None = 1,
) -> tuple[int, FMatrix]:
    """r-th generalized Hamming weight with a minimizing subspace basis.

    Args:
        C: the code.
        r: subspace dimension, ``1 <= r <= k``.
        budget: maximum number of subspaces to visit.
        floor: a known lower bound on the answer (``r`` if omitted); the scan
            stops once a subspace reaches it.  The result does not depend on
            it as long as it is valid.
        threads: workers scanning pivot patterns concurrently.

    Returns:
        ``(delta_r, basis)`` where ``basis`` is the first minimizer in the
        canonical enumeration order.

    Raises:
        ValueError: ``r`` out of range.
        BudgetExceeded: more than ``budget`` subspaces; ``count`` carries the
            Gaussian binomial so callers can fall back to duality.
    """
    k, n, p = C.k, C.n, C.p
    if not (1 <= r <= k):
        raise ValueError(f"r={r} outside [1, {k}]")
    count = gaussian_binomial(k, r, p)
    if count > budget:
        raise BudgetExceeded(f"subspaces of dimension {r} in F_{p}^{k}", count, budget)
    floor = r if floor is None else max(floor, r)
    gen = C.gen.data
    zero = np.zeros((1, _words(n)), dtype=np.uint64)
    patterns = list(pivot_patterns(k, r))

    def work(P):
        frees = free_columns(k, P)
        return _scan(_row_tables(gen, p, P, frees), zero, floor)

    threads = threads or os.cpu_count() or 1
    best = None
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for g in range(0, len(patterns), threads):
            group = patterns[g : g + threads]
            results = [work(group[0])] if pool is None else list(pool.map(work, group))
            for P, (w, i) in zip(group, results):
                if best is None or w < best[0]:
                    best = (w, P, i)
            if best[0] <= floor:
                break
    finally:
        if pool is not None:
            pool.shutdown()
    w, P, i = best
    coef = FMatrix(C.field, _decode(k, p, P, free_columns(k, P), i))
    return w, mat_mul(coef, C.gen)


# -- hierarchies --------------------------------------------------------------


@dataclass(frozen=True)
class WeightHierarchy:
    """delta_1..delta_len with a method tag per entry (bruteforce, duality, graph)."""

    deltas: tuple[int, ...]
    methods: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(int(d) for d in self.deltas))
        if not self.methods:
            object.__setattr__(self, "methods", ("bruteforce",) * len(self.deltas))
        if len(self.methods) != len(self.deltas):
            raise ValueError("one method tag per entry")

    def __len__(self):
        return len(self.deltas)

    def is_strictly_increasing(self) -> bool:
        d = self.deltas
        return all(a < b for a, b in zip(d, d[1:])) and (not d or d[0] >= 1)


def hierarchy_bruteforce(
    C: LinearCode, r_max: int | None = None, *, budget: int = DEFAULT_BUDGET, threads: int | None = 1
) -> WeightHierarchy:
    """delta_1..delta_{r_max} by subspace enumeration.

    Each level starts from the previous value plus one, which is a valid bound
    because weight hierarchies are strictly increasing.
    """
    r_max = C.k if r_max is None else r_max
    if not (0 <= r_max <= C.k):
        raise ValueError(f"r_max={r_max} outside [0, {C.k}]")
    out = []
    prev = 0
    for r in range(1, r_max + 1):
        d, _ = ghw(C, r, budget=budget, floor=prev + 1, threads=threads)
        out.append(d)
        prev = d
    return WeightHierarchy(tuple(out))


def wei_complete(
    n: int, k: int, primal_partial: WeightHierarchy | None, dual_full: WeightHierarchy
) -> WeightHierarchy:
    """Full hierarchy of a code from the full hierarchy of its dual (Wei duality).

    The primal weights are ``{1..n}`` minus ``{n + 1 - d : d in dual}``.

    Raises:
        ValueError: the dual hierarchy is not strictly increasing or has the
            wrong length, or the result disagrees with ``primal_partial``.
    """
    dd = dual_full.deltas
    if len(dd) != n - k:
        raise ValueError(f"dual hierarchy has {len(dd)} entries, expected n-k={n - k}")
    if not dual_full.is_strictly_increasing() or (dd and dd[-1] > n):
        raise ValueError(f"dual hierarchy {dd} is not strictly increasing within [1, {n}]")
    excluded = {n + 1 - d for d in dd}
    deltas = tuple(i for i in range(1, n + 1) if i not in excluded)
    if len(deltas) != k:
        raise ValueError(f"complement has {len(deltas)} elements, expected k={k}")
    if primal_partial is not None:
        for i, d in enumerate(primal_partial.deltas):
            if deltas[i] != d:
                raise ValueError(
                    f"Wei completion gives delta_{i + 1}={deltas[i]} but {d} was supplied"
                )
    return WeightHierarchy(deltas, ("duality",) * k)


def hierarchy_via_dual(C: LinearCode, *, budget: int = DEFAULT_BUDGET, threads: int | None = 1) -> WeightHierarchy:
    """Full hierarchy of ``C`` by brute-forcing its dual and applying Wei duality."""
    D = dual(C)
    return wei_complete(C.n, C.k, None, hierarchy_bruteforce(D, budget=budget, threads=threads))


def dual_route_cost(C: LinearCode) -> int:
    """Subspaces visited when the full dual hierarchy is enumerated."""
    nk = C.n - C.k
    return sum(gaussian_binomial(nk, r, C.p) for r in range(1, nk + 1))


def delta_auto(
    C: LinearCode, r: int, *, budget: int = DEFAULT_BUDGET, threads: int | None = 1, _dual_cache: dict | None = None
) -> tuple[int, str]:
    """delta_r by enumeration or via the dual hierarchy, whichever visits fewer subspaces.

    Returns ``(value, method)``.

    Raises:
        BudgetExceeded: both routes are over budget.
    """
    if not (1 <= r <= C.k):
        raise ValueError(f"r={r} outside [1, {C.k}]")
    direct = gaussian_binomial(C.k, r, C.p)
    via_dual = dual_route_cost(C)
    if direct <= budget and direct <= via_dual:
        return ghw(C, r, budget=budget, threads=threads)[0], "bruteforce"
    if via_dual > budget:
        raise BudgetExceeded(f"delta_{r} of {C!r} by either route", min(direct, via_dual), budget)
    cache = {} if _dual_cache is None else _dual_cache
    if "h" not in cache:
        cache["h"] = hierarchy_via_dual(C, budget=budget, threads=threads)
    return cache["h"].deltas[r - 1], "duality"
