"""Linear codes over GF(q): duals, distances, set-difference weights,
shortening/puncturing/extension, full-weight codeword search.

All exact weight computations enumerate codewords.  Enumeration runs in
numpy chunks over lookup tables, in a fixed "message order": messages are
coefficient vectors (m_0, ..., m_{k-1}) against the canonical generator
rows, ordered lexicographically with m_0 most significant.  Every
"first found" witness refers to this order, so results are reproducible.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import (
    CapExceeded,
    FieldMismatch,
    LengthMismatch,
    NotStrictSubcode,
    PositionOutOfRange,
    PreconditionFailed,
    ZeroCode,
)
from .gf import FiniteField
from .matrix import GfMatrix, all_k_subsets_nonsingular, mat_vec, nullspace, rank, rref

DEFAULT_ENUM_CAP = 10 ** 7
_CHUNK_TARGET = 1 << 20


def enum_cap(cap: Optional[int] = None) -> int:
    """Effective enumeration cap: explicit arg, else AQMDS_MAX_ENUM, else default."""
    if cap is not None:
        return cap
    env = os.environ.get("AQMDS_MAX_ENUM")
    if env:
        return int(env)
    return DEFAULT_ENUM_CAP


@dataclass
class WeightReport:
    """Exact weight data for a code: A_0..A_n plus convenience extras."""

    min_weight: int
    full_weight_codeword: Optional[np.ndarray]
    distribution: Optional[np.ndarray]


class LinearCode:
    """An [n, k]_q code held as a canonical (RREF) generator matrix.

    Two codes are equal iff their canonical generator matrices coincide.
    Use :func:`from_generator` to build one from an arbitrary matrix.
    """

    def __init__(self, G: GfMatrix, _canonical: bool = False):
        if not _canonical:
            G, _ = rref(G)
            keep = np.any(G.data != 0, axis=1)
            G = GfMatrix(G.field, G.data[keep])
        self.field = G.field
        self.G = G
        self.n = G.cols
        self.k = G.rows
        self._H: Optional[GfMatrix] = None

    @property
    def H(self) -> GfMatrix:
        """Cached parity-check matrix (nullspace of G, canonical)."""
        if self._H is None:
            self._H = nullspace(self.G)
        return self._H

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.field is self.field
            and other.G == self.G
        )

    def __hash__(self):
        return hash(self.G)

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.field.q})"

    # -- basic operations -----------------------------------------------------

    def dual(self) -> "LinearCode":
        return LinearCode(self.H, _canonical=True)

    def contains_word(self, v: np.ndarray) -> bool:
        v = np.asarray(v, dtype=np.uint8)
        if v.shape != (self.n,):
            raise LengthMismatch(f"word length {v.shape} != {self.n}")
        if self.k == self.n:
            return True
        return not np.any(mat_vec(self.H, v))

    def codeword(self, message: np.ndarray) -> np.ndarray:
        """Encode one message vector (length k) against the canonical G."""
        f = self.field
        out = np.zeros(self.n, dtype=np.uint8)
        for i, m in enumerate(np.asarray(message, dtype=np.uint8)):
            out = f.add_table[out, f.mul_table[m, self.G.data[i]]]
        return out

    def min_distance(self, cap: Optional[int] = None) -> int:
        """Exact minimum weight by enumerating all q^k codewords."""
        if self.k == 0:
            raise ZeroCode("the zero code has no minimum distance")
        scan = _enumerate_scan(self.field, self.G.data, cap=enum_cap(cap))
        return scan["min_weight"]

    def is_mds(self) -> bool:
        """Every k columns of G independent; equivalent to d = n-k+1."""
        if self.k == 0:
            return False
        return all_k_subsets_nonsingular(self.G, self.k)

    def weight_distribution(self, cap: Optional[int] = None) -> WeightReport:
        if self.k == 0:
            raise ZeroCode("the zero code has no weight distribution")
        scan = _enumerate_scan(
            self.field, self.G.data, cap=enum_cap(cap), distribution=True
        )
        return WeightReport(
            min_weight=scan["min_weight"],
            full_weight_codeword=scan["full_weight_word"],
            distribution=scan["distribution"],
        )

    def full_weight_codeword(self, cap: Optional[int] = None) -> Optional[np.ndarray]:
        """First codeword of Hamming weight n in message order, if any."""
        if self.k == 0:
            return None
        return _find_full_weight(self.field, self.G.data, cap=enum_cap(cap))

    # -- coordinate surgery ---------------------------------------------------

    def shorten(self, pos: int) -> "LinearCode":
        """Restrict to codewords vanishing at pos, then delete the coordinate."""
        if not 0 <= pos < self.n:
            raise PositionOutOfRange(f"position {pos} not in [0, {self.n})")
        f = self.field
        rows = self.G.data.copy()
        nz = [i for i in range(self.k) if rows[i, pos] != 0]
        if nz:
            r0 = nz[0]
            inv = f.inv_table[rows[r0, pos]]
            rows[r0] = f.mul_table[inv, rows[r0]]
            for i in nz[1:]:
                factor = f.neg_table[rows[i, pos]]
                rows[i] = f.add_table[rows[i], f.mul_table[factor, rows[r0]]]
            rows = np.delete(rows, r0, axis=0)
        rows = np.delete(rows, pos, axis=1)
        if rows.shape[0] == 0:
            raise ZeroCode("shortening leaves only the zero codeword")
        return from_generator(GfMatrix(f, rows))

    def puncture(self, pos: int) -> "LinearCode":
        """Delete coordinate pos from all codewords."""
        if not 0 <= pos < self.n:
            raise PositionOutOfRange(f"position {pos} not in [0, {self.n})")
        rows = np.delete(self.G.data, pos, axis=1)
        return from_generator(GfMatrix(self.field, rows))


def from_generator(M: GfMatrix) -> LinearCode:
    """Canonicalize a generator matrix into a LinearCode; rank must be > 0."""
    C = LinearCode(M)
    if C.k == 0:
        raise ZeroCode("generator matrix has rank 0")
    return C


def full_space(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(GfMatrix.identity(field, n), _canonical=True)


def is_subcode(D: LinearCode, C: LinearCode) -> bool:
    """True iff D is a subcode of C (every row of D.G passes C's parity check)."""
    if D.field is not C.field:
        raise FieldMismatch("codes over different fields")
    if D.n != C.n:
        raise LengthMismatch(f"lengths differ: {D.n} != {C.n}")
    if C.k == C.n:
        return True
    for i in range(D.k):
        if np.any(mat_vec(C.H, D.G.data[i])):
            return False
    return True


def complement_rows(field: FiniteField, base: np.ndarray, full: np.ndarray) -> np.ndarray:
    """Rows of `full` extending rowspace(base), greedily in row order."""
    stack = base.copy() if base.size else np.zeros((0, full.shape[1]), dtype=np.uint8)
    out: List[np.ndarray] = []
    r = rank(GfMatrix(field, stack)) if stack.shape[0] else 0
    for row in full:
        cand = np.vstack([stack, row[None, :]])
        rc = rank(GfMatrix(field, cand))
        if rc > r:
            out.append(row)
            stack = cand
            r = rc
    if not out:
        return np.zeros((0, full.shape[1]), dtype=np.uint8)
    return np.array(out, dtype=np.uint8)


def _coset_check_rows(C: LinearCode, D: LinearCode) -> np.ndarray:
    """Rows orthogonal to D but not to all of C: dual(D) modulo dual(C).

    A codeword u of C lies in D iff u is orthogonal to every returned row
    (orthogonality to dual(C) is automatic).  Row count = k_C - k_D.
    """
    base = C.H.data if C.k < C.n else np.zeros((0, C.n), dtype=np.uint8)
    full = D.H.data
    return complement_rows(C.field, base, full)


def weight_of_difference(C: LinearCode, D: LinearCode, cap: Optional[int] = None) -> int:
    """min { wt(u) : u in C, u not in D } for a strict subcode D of C."""
    if not is_subcode(D, C) or D.k >= C.k:
        raise NotStrictSubcode("D must be a strict subcode of C")
    syn = _coset_check_rows(C, D)
    scan = _enumerate_scan(C.field, C.G.data, syn_rows=syn, cap=enum_cap(cap))
    return scan["min_weight_outside"]


def extend_by_codeword(C: LinearCode, Cprime: LinearCode, cap: Optional[int] = None) -> LinearCode:
    """Length-(n+1) MDS extension of a nested MDS pair C strictly inside C'.

    Picks the first w in C' \\ C (message order) and returns the code with
    generator [[0 | G], [1 | w]]; the result is verified MDS.
    """
    if C.field is not Cprime.field or C.n != Cprime.n:
        raise PreconditionFailed("codes must share field and length")
    if not is_subcode(C, Cprime):
        raise PreconditionFailed("C is not a subcode of C'")
    if Cprime.k != C.k + 1:
        raise PreconditionFailed(f"dim C' = {Cprime.k} != dim C + 1 = {C.k + 1}")
    if not C.is_mds():
        raise PreconditionFailed(f"C is not MDS [{C.n},{C.k},{C.n - C.k + 1}]")
    if not Cprime.is_mds():
        raise PreconditionFailed(
            f"C' is not MDS [{Cprime.n},{Cprime.k},{Cprime.n - Cprime.k}]"
        )
    syn = _coset_check_rows(Cprime, C)
    scan = _enumerate_scan(Cprime.field, Cprime.G.data, syn_rows=syn, cap=enum_cap(cap))
    w = scan["first_outside_word"]
    f = C.field
    top = np.hstack([np.zeros((C.k, 1), dtype=np.uint8), C.G.data])
    bottom = np.hstack([np.array([[1]], dtype=np.uint8), w[None, :]])
    ext = from_generator(GfMatrix(f, np.vstack([top, bottom])))
    if ext.k != C.k + 1 or not ext.is_mds():
        raise PreconditionFailed("extension did not produce an MDS code")
    return ext


# -- enumeration engine -------------------------------------------------------


def _grow_suffix(field: FiniteField, rows: np.ndarray) -> np.ndarray:
    """All q^t combinations of the given rows, in message-lex order."""
    q = field.q
    E = np.zeros((1, rows.shape[1]), dtype=np.uint8)
    for row in rows[::-1]:
        scaled = field.mul_table[np.arange(q, dtype=np.uint8)[:, None], row[None, :]]
        E = field.add_table[scaled[:, None, :], E[None, :, :]].reshape(-1, rows.shape[1])
    return E


def _iter_word_chunks(field: FiniteField, rows: np.ndarray, chunk_target: int = _CHUNK_TARGET):
    """Yield (start_index, chunk) covering all q^k words in message-lex order."""
    q = field.q
    k = rows.shape[0]
    if k == 0:
        yield 0, np.zeros((1, rows.shape[1]), dtype=np.uint8)
        return
    t = 0
    size = 1
    while t < k and size * q <= chunk_target:
        size *= q
        t += 1
    E = _grow_suffix(field, rows[k - t:])
    prefix_rows = rows[: k - t]
    n_prefix = q ** (k - t)
    digits = np.zeros(k - t, dtype=np.int64)
    for pi in range(n_prefix):
        offset = np.zeros(rows.shape[1], dtype=np.uint8)
        tt = pi
        for i in range(k - t - 1, -1, -1):
            d = tt % q
            tt //= q
            if d:
                offset = field.add_table[offset, field.mul_table[d, prefix_rows[i]]]
        if np.any(offset):
            yield pi * size, field.add_table[offset[None, :], E]
        else:
            yield pi * size, E


def _enumerate_scan(
    field: FiniteField,
    gen: np.ndarray,
    syn_rows: Optional[np.ndarray] = None,
    cap: int = DEFAULT_ENUM_CAP,
    distribution: bool = False,
):
    """Single pass over all codewords of the row space of `gen`.

    Computes the exact minimum nonzero weight, and optionally: the minimum
    weight among words outside the subcode cut out by `syn_rows` (rows
    orthogonal to the subcode but not the code), the full weight
    distribution, and the first word with nonzero syndrome.
    """
    k, n = gen.shape
    total = field.q ** k
    if total > cap:
        raise CapExceeded(
            f"enumeration of {field.q}^{k} codewords exceeds cap {cap}; "
            "raise AQMDS_MAX_ENUM or use the MDS k-subset oracle"
        )
    work = gen
    s = 0
    if syn_rows is not None and syn_rows.shape[0] > 0:
        s = syn_rows.shape[0]
        # T[i, t] = <gen_i, syn_t>: the syndrome is linear in the message,
        # so append syndrome columns and enumerate the augmented rows.
        T = np.zeros((k, s), dtype=np.uint8)
        for t_idx in range(s):
            acc = np.zeros(k, dtype=np.uint8)
            for l in range(n):
                acc = field.add_table[acc, field.mul_table[gen[:, l], syn_rows[t_idx, l]]]
            T[:, t_idx] = acc
        work = np.hstack([gen, T])

    min_w = n + 1
    min_w_out = n + 1
    dist = np.zeros(n + 1, dtype=np.int64) if distribution else None
    full_word = None
    first_out_word = None
    for start, chunk in _iter_word_chunks(field, work):
        words = chunk[:, :n]
        wts = np.count_nonzero(words, axis=1)
        nz = wts > 0
        if np.any(nz):
            w = int(wts[nz].min())
            if w < min_w:
                min_w = w
        if distribution:
            dist += np.bincount(wts, minlength=n + 1)
        if full_word is None and n > 0:
            hits = np.nonzero(wts == n)[0]
            if hits.size:
                full_word = words[hits[0]].copy()
        if s:
            outside = chunk[:, n:].any(axis=1)
            if np.any(outside):
                w = int(wts[outside].min())
                if w < min_w_out:
                    min_w_out = w
                if first_out_word is None:
                    first_out_word = words[np.nonzero(outside)[0][0]].copy()
    result = {
        "min_weight": min_w if min_w <= n else None,
        "full_weight_word": full_word,
        "distribution": dist,
    }
    if s:
        if min_w_out > n:
            raise NotStrictSubcode("no codeword outside the subcode")
        result["min_weight_outside"] = min_w_out
        result["first_outside_word"] = first_out_word
    return result


def _iter_nonzero_message_chunks(field: FiniteField, rows: np.ndarray, chunk_target: int = _CHUNK_TARGET):
    """Chunks of words whose message digits are all nonzero, in message order."""
    q = field.q
    k, w = rows.shape
    t = 0
    size = 1
    while t < k and size * (q - 1) <= chunk_target:
        size *= q - 1
        t += 1
    nonzero = np.arange(1, q, dtype=np.uint8)
    E = np.zeros((1, w), dtype=np.uint8)
    for row in rows[k - t:][::-1]:
        scaled = field.mul_table[nonzero[:, None], row[None, :]]
        E = field.add_table[scaled[:, None, :], E[None, :, :]].reshape(-1, w)
    prefix_rows = rows[: k - t]
    for pi in range((q - 1) ** (k - t)):
        offset = np.zeros(w, dtype=np.uint8)
        tt = pi
        for i in range(k - t - 1, -1, -1):
            d = 1 + tt % (q - 1)
            tt //= q - 1
            offset = field.add_table[offset, field.mul_table[d, prefix_rows[i]]]
        yield field.add_table[offset[None, :], E] if prefix_rows.size else E


def _find_full_weight(field: FiniteField, gen: np.ndarray, cap: int) -> Optional[np.ndarray]:
    """First full-weight codeword in message order; early exit on hit.

    Requires `gen` in RREF: a full-weight word is then nonzero at every
    pivot column, i.e. every message digit is nonzero, so only (q-1)^k
    messages need scanning.  The cap bounds the number of words scanned;
    CapExceeded is raised when the budget runs out before either a hit or
    exhaustion (which certifies absence).
    """
    k, n = gen.shape
    scanned = 0
    for chunk in _iter_nonzero_message_chunks(field, gen):
        wts = np.count_nonzero(chunk, axis=1)
        hits = np.nonzero(wts == n)[0]
        if hits.size:
            return chunk[hits[0]].copy()
        scanned += chunk.shape[0]
        if scanned > cap:
            raise CapExceeded(
                f"no full-weight codeword in the first {scanned} of "
                f"({field.q}-1)^{k} candidate words; raise AQMDS_MAX_ENUM"
            )
    return None
