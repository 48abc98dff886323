"""Dense linear algebra over GF(q).

Matrices store element indices in a numpy uint8 array.  Plain Gaussian
elimination throughout: fields are exact and every matrix in this package
has at most ~20 columns, so clarity wins over speed.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, RankDeficient
from .gf import FiniteField


class GfMatrix:
    """Immutable dense matrix over a FiniteField; entries are element indices."""

    def __init__(self, field: FiniteField, entries):
        data = np.asarray(entries, dtype=np.uint8)
        if data.ndim != 2:
            raise DimensionMismatch(f"expected 2-d entries, got shape {data.shape}")
        if data.size and int(data.max()) >= field.q:
            raise ValueError(f"entry {int(data.max())} out of range for {field}")
        self.field = field
        self.data = data
        self.data.setflags(write=False)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> "GfMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "GfMatrix":
        return cls(field, np.eye(n, dtype=np.uint8))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GfMatrix)
            and other.field is self.field
            and other.data.shape == self.data.shape
            and bool(np.array_equal(other.data, self.data))
        )

    def __hash__(self):
        return hash((id(self.field), self.data.tobytes(), self.data.shape))

    def __repr__(self):
        return f"GfMatrix({self.field}, {self.data.tolist()})"

    def row(self, i: int) -> np.ndarray:
        return self.data[i]


def transpose(M: GfMatrix) -> GfMatrix:
    return GfMatrix(M.field, M.data.T)


def mat_mul(A: GfMatrix, B: GfMatrix) -> GfMatrix:
    """Matrix product over GF(q)."""
    if A.field is not B.field:
        raise FieldMismatch("matrices over different fields")
    if A.cols != B.rows:
        raise DimensionMismatch(f"inner dimensions {A.cols} != {B.rows}")
    f = A.field
    out = np.zeros((A.rows, B.cols), dtype=np.uint8)
    for l in range(A.cols):
        # rank-1 update: column l of A times row l of B
        scaled = f.mul_table[A.data[:, l][:, None], B.data[l][None, :]]
        out = f.add_table[out, scaled]
    return GfMatrix(A.field, out)


def mat_vec(A: GfMatrix, v: np.ndarray) -> np.ndarray:
    f = A.field
    out = np.zeros(A.rows, dtype=np.uint8)
    for l in range(A.cols):
        out = f.add_table[out, f.mul_table[A.data[:, l], v[l]]]
    return out


def rref(M: GfMatrix) -> Tuple[GfMatrix, List[int]]:
    """Reduced row echelon form and pivot columns.

    Deterministic: first nonzero pivot scan, top-to-bottom, left-to-right.
    """
    f = M.field
    A = M.data.copy()
    A.setflags(write=True)
    nrows, ncols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if A[i, c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            A[[r, pivot_row]] = A[[pivot_row, r]]
        inv = f.inv_table[A[r, c]]
        A[r] = f.mul_table[inv, A[r]]
        for i in range(nrows):
            if i != r and A[i, c] != 0:
                factor = f.neg_table[A[i, c]]
                A[i] = f.add_table[A[i], f.mul_table[factor, A[r]]]
        pivots.append(c)
        r += 1
    return GfMatrix(f, A), pivots


def rank(M: GfMatrix) -> int:
    return len(rref(M)[1])


def nullspace(M: GfMatrix) -> GfMatrix:
    """Basis (as rows, in RREF) of the right kernel {x : M x^T = 0}."""
    f = M.field
    R, pivots = rref(M)
    ncols = M.cols
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.uint8)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            # pivot coordinate solves row ri: x_pc = -R[ri, fc] * x_fc
            basis[bi, pc] = f.neg_table[R.data[ri, fc]]
    # normalize to RREF so nullspace output is canonical
    out, _ = rref(GfMatrix(f, basis))
    return out


def _submatrix_rank(field: FiniteField, data: np.ndarray) -> int:
    A = data.copy()
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if A[i, c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            A[[r, pivot_row]] = A[[pivot_row, r]]
        inv = field.inv_table[A[r, c]]
        A[r] = field.mul_table[inv, A[r]]
        nz = np.nonzero(A[r + 1:, c])[0]
        for i in nz:
            factor = field.neg_table[A[r + 1 + i, c]]
            A[r + 1 + i] = field.add_table[A[r + 1 + i], field.mul_table[factor, A[r]]]
        r += 1
    return r


def all_k_subsets_nonsingular(M: GfMatrix, k: int) -> bool:
    """True iff every k x k column-submatrix of M is nonsingular.

    Standard MDS characterization of a rank-k generator matrix; iterates
    all C(cols, k) column subsets in lexicographic order.
    """
    if M.rows != k or rank(M) < k:
        raise RankDeficient(f"matrix must have k={k} independent rows")
    data = M.data
    for subset in combinations(range(M.cols), k):
        if _submatrix_rank(M.field, data[:, subset]) < k:
            return False
    return True


def first_singular_k_subset(M: GfMatrix, k: int):
    """Lexicographically first singular k-column subset, or None."""
    if M.rows != k or rank(M) < k:
        raise RankDeficient(f"matrix must have k={k} independent rows")
    for subset in combinations(range(M.cols), k):
        if _submatrix_rank(M.field, M.data[:, subset]) < k:
            return subset
    return None
