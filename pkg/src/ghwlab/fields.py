"""Exact linear algebra over prime fields F_p.

Matrices are dense numpy arrays of canonical residues ``0 <= e < p``.  Over
F_2 row reduction runs on rows packed into Python integers (bit ``j`` is
column ``j``), so a row operation is a single XOR.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or isinstance(self.p, bool):
            raise TypeError(f"modulus must be an integer, got {self.p!r}")
        if not is_prime(int(self.p)):
            raise ValueError(f"{self.p} is not prime")
        if self.p > MAX_PRIME:
            raise ValueError(f"p={self.p} exceeds the supported maximum {MAX_PRIME}")
        object.__setattr__(self, "p", int(self.p))

    def inv(self, a: int) -> int:
        return inv_mod(int(a), self.p)

    def __repr__(self):
        return f"F{self.p}"


def _as_field(field) -> FieldSpec:
    return field if isinstance(field, FieldSpec) else FieldSpec(field)


class FMatrix:
    """Immutable dense matrix over a prime field.

    Args:
        field: a :class:`FieldSpec` or a prime.
        data: anything ``numpy.asarray`` accepts with two dimensions.  Entries
            are reduced modulo p on construction.
        shape: optional ``(rows, cols)``; needed to build empty matrices from
            an empty list.
    """

    __slots__ = ("field", "_data")

    def __init__(self, field, data, shape=None):
        field = _as_field(field)
        arr = np.array(data, dtype=np.int64)
        if shape is not None:
            arr = arr.reshape(shape)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        arr %= field.p
        arr.setflags(write=False)
        self.field = field
        self._data = arr

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> FMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, n: int) -> FMatrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the residues."""
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def T(self) -> FMatrix:
        return FMatrix(self.field, self._data.T.copy())

    def tolist(self) -> list[list[int]]:
        return self._data.tolist()

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self._data, other._data))
        )

    def __hash__(self):
        return hash((self.field.p, self.shape, self._data.tobytes()))

    def __repr__(self):
        return f"FMatrix({self.field!r}, {self.tolist()})"


# -- packed F_2 rows ---------------------------------------------------------


def pack_rows(a: np.ndarray) -> list[int]:
    """Pack each 0/1 row into an int, column j at bit j."""
    weights = [1 << j for j in range(a.shape[1])]
    return [sum(w for w, x in zip(weights, row) if x) for row in a.tolist()]


def unpack_rows(rows: list[int], ncols: int) -> np.ndarray:
    out = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        j = 0
        while r:
            if r & 1:
                out[i, j] = 1
            r >>= 1
            j += 1
    return out


def rref_packed(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over F_2 of bit-packed rows.

    Returns the nonzero reduced rows and the pivot columns.
    """
    rows = list(rows)
    pivots = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        for i in range(r, len(rows)):
            if rows[i] & bit:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= piv
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rref_residues(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, col])
        if piv != 1:
            a[r] = a[r] * inv_mod(piv, p) % p
        factors = a[:, col].copy()
        factors[r] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            a[rows] = (a[rows] - np.outer(factors[rows], a[r])) % p
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rref(M: FMatrix, method: str = "auto") -> tuple[FMatrix, int, list[int]]:
    """Reduced row echelon form.

    Pivots are taken as the first nonzero entry scanning columns left to right
    and rows top to bottom.  Zero rows are dropped, so ``R`` has ``rank`` rows.

    Args:
        M: input matrix; empty matrices are allowed.
        method: ``"packed"`` (F_2 only), ``"naive"`` or ``"auto"``, which picks
            the packed path over F_2.

    Returns:
        ``(R, rank, pivot_cols)``.
    """
    if method not in ("auto", "packed", "naive"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "packed" if M.p == 2 else "naive"
    if method == "packed":
        if M.p != 2:
            raise ValueError("packed elimination needs p = 2")
        rows, pivots = rref_packed(pack_rows(M.data), M.cols)
        R = unpack_rows(rows, M.cols)
    else:
        R, pivots = _rref_residues(M.data, M.p)
    return FMatrix(M.field, R, shape=(len(pivots), M.cols)), len(pivots), pivots


def rank(M: FMatrix) -> int:
    return rref(M)[1]


def nullspace(M: FMatrix) -> FMatrix:
    """Basis of ``{v : M v = 0}`` as the rows of a matrix in RREF.

    For the left kernel ``{c : c M = 0}`` pass ``M.T``.
    """
    p = M.p
    R, r, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-R.data[row, f]) % p
    K = FMatrix(M.field, basis, shape=(len(free), M.cols))
    return rref(K)[0]


def mat_mul(A: FMatrix, B: FMatrix) -> FMatrix:
    """Exact product over F_p."""
    if A.field != B.field:
        raise ValueError(f"field mismatch: {A.field!r} vs {B.field!r}")
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    if A.p == 2:
        brows = pack_rows(B.data)
        out = []
        for row in A.data.tolist():
            acc = 0
            for x, b in zip(row, brows):
                if x:
                    acc ^= b
            out.append(acc)
        return FMatrix(A.field, unpack_rows(out, B.cols), shape=(A.rows, B.cols))
    # p <= 2^16 keeps every partial product below 2^32; accumulate per column block
    # so the int64 sum cannot overflow for long inner dimensions.
    p = A.p
    a, b = A.data, B.data
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    step = 1 << 20
    for start in range(0, A.cols, step):
        out = (out + a[:, start : start + step] @ b[start : start + step]) % p
    return FMatrix(A.field, out)


def vstack(*mats: FMatrix) -> FMatrix:
    field = mats[0].field
    if any(m.field != field for m in mats):
        raise ValueError("field mismatch")
    return FMatrix(field, np.vstack([m.data for m in mats]), shape=(sum(m.rows for m in mats), mats[0].cols))
