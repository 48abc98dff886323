"""Builders for the explicit MDS families used by the CSS pipeline.

Evaluation-point convention: the default point order is 1, 2, ..., q-1, 0,
i.e. the zero element is placed last.  The length-(q+2) constructions need
the zero point in position q, and the first q-1 points invertible; with
this default no separate code path is required.  Column multipliers
default to all ones; custom nonzero multipliers are accepted everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .code import LinearCode, from_generator, is_subcode
from .errors import DegreeTooSmall, InvalidRange, InvalidSpec, NotCharTwo, VerificationFailed
from .gf import FiniteField, Poly, find_irreducible
from .matrix import GfMatrix, mat_mul, transpose


def default_alpha(f: FiniteField, n: int) -> Tuple[int, ...]:
    """First n evaluation points in index order, zero placed last."""
    order = list(range(1, f.q)) + [0]
    return tuple(order[:n])


def ones(n: int) -> Tuple[int, ...]:
    return (1,) * n


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points and column multipliers for a GRS code."""

    field: FiniteField
    n: int
    k: int
    alpha: Tuple[int, ...] = ()
    v: Tuple[int, ...] = ()

    def __post_init__(self):
        f = self.field
        if not 1 <= self.n <= f.q:
            raise InvalidSpec(f"n={self.n} must satisfy 1 <= n <= q={f.q}")
        if not 1 <= self.k <= self.n:
            raise InvalidSpec(f"k={self.k} must satisfy 1 <= k <= n={self.n}")
        alpha = self.alpha or default_alpha(f, self.n)
        v = self.v or ones(self.n)
        if len(alpha) != self.n or len(set(alpha)) != self.n:
            raise InvalidSpec("alpha must be n pairwise distinct elements")
        if any(not 0 <= a < f.q for a in alpha):
            raise InvalidSpec("alpha entries out of field range")
        if len(v) != self.n or any(not 1 <= x < f.q for x in v):
            raise InvalidSpec("v must be n nonzero field elements")
        object.__setattr__(self, "alpha", tuple(alpha))
        object.__setattr__(self, "v", tuple(v))


def _vandermonde_rows(f: FiniteField, alpha: Sequence[int], v: Sequence[int], nrows: int) -> np.ndarray:
    n = len(alpha)
    G = np.zeros((nrows, n), dtype=np.uint8)
    col = np.array(v, dtype=np.uint8)
    for i in range(nrows):
        G[i] = col
        col = np.array([f.mul(col[j], alpha[j]) for j in range(n)], dtype=np.uint8)
    return G


def grs(spec: GrsSpec, verify: bool = True) -> LinearCode:
    """The [n, k, n-k+1]_q code of polynomial evaluations deg < k."""
    f = spec.field
    G = _vandermonde_rows(f, spec.alpha, spec.v, spec.k)
    C = from_generator(GfMatrix(f, G))
    if verify and (C.k != spec.k or not C.is_mds()):
        raise VerificationFailed(f"GRS output is not MDS [{spec.n},{spec.k}]")
    return C


def extended_grs(
    f: FiniteField,
    k: int,
    alpha: Optional[Sequence[int]] = None,
    v: Optional[Sequence[int]] = None,
    verify: bool = True,
) -> LinearCode:
    """The [q+1, k, q-k+2]_q code: evaluations at all q points plus the
    top coefficient f_{k-1} scaled by v_{q+1}."""
    q = f.q
    if not 1 <= k <= q:
        raise InvalidSpec(f"k={k} must satisfy 1 <= k <= q={q}")
    alpha = tuple(alpha) if alpha is not None else default_alpha(f, q)
    v = tuple(v) if v is not None else ones(q + 1)
    if len(alpha) != q or len(set(alpha)) != q:
        raise InvalidSpec("alpha must cover q distinct points")
    if len(v) != q + 1 or any(x == 0 or not 0 <= x < q for x in v):
        raise InvalidSpec("v must be q+1 nonzero elements")
    G = _vandermonde_rows(f, alpha, v[:q], k)
    ext_col = np.zeros((k, 1), dtype=np.uint8)
    ext_col[k - 1, 0] = v[q]
    C = from_generator(GfMatrix(f, np.hstack([G, ext_col])))
    if verify and (C.k != k or not C.is_mds()):
        raise VerificationFailed(f"extended GRS output is not MDS [{q + 1},{k}]")
    return C


def grs_subcode_irreducible(
    f: FiniteField,
    k: int,
    r: int,
    alpha: Optional[Sequence[int]] = None,
    v: Optional[Sequence[int]] = None,
    verify: bool = True,
) -> Tuple[LinearCode, Poly]:
    """The [q+1, r, q-r+2]_q subcode of the extended GRS code of dimension k,
    generated by multiples of a monic irreducible polynomial of degree k-r.

    Returns (code, irreducible polynomial used).
    """
    q = f.q
    if not 1 <= k <= q:
        raise InvalidSpec(f"k={k} must satisfy 1 <= k <= q={q}")
    if not 1 <= r <= k - 2:
        raise InvalidRange(f"r={r} must satisfy 1 <= r <= k-2 = {k - 2}")
    alpha = tuple(alpha) if alpha is not None else default_alpha(f, q)
    v = tuple(v) if v is not None else ones(q + 1)
    if len(alpha) != q or len(set(alpha)) != q:
        raise InvalidSpec("alpha must cover q distinct points")
    if len(v) != q + 1 or any(x == 0 or not 0 <= x < q for x in v):
        raise InvalidSpec("v must be q+1 nonzero elements")
    p_poly = find_irreducible(f, k - r)
    # irreducible of degree >= 2 has no roots; degree-1 factor X only if r... guard anyway
    p_at = [f.poly_eval(p_poly, a) for a in alpha]
    if any(x == 0 for x in p_at):
        raise VerificationFailed("irreducible polynomial vanishes at an evaluation point")
    scaled_v = tuple(f.mul(v[j], p_at[j]) for j in range(q))
    G = _vandermonde_rows(f, alpha, scaled_v, r)
    ext_col = np.zeros((r, 1), dtype=np.uint8)
    ext_col[r - 1, 0] = v[q]
    C = from_generator(GfMatrix(f, np.hstack([G, ext_col])))
    if verify:
        if C.k != r or not C.is_mds():
            raise VerificationFailed(f"subcode output is not MDS [{q + 1},{r}]")
        E = extended_grs(f, k, alpha, v, verify=False)
        if not is_subcode(C, E):
            raise VerificationFailed("subcode is not contained in the extended GRS code")
    return C, p_poly


def _char_two_points(f: FiniteField, v: Optional[Sequence[int]]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if f.p != 2:
        raise NotCharTwo(f"construction requires characteristic 2, got p={f.p}")
    if f.m < 2:
        raise DegreeTooSmall("construction requires q = 2^m with m >= 2")
    q = f.q
    v = tuple(v) if v is not None else ones(q + 2)
    if len(v) != q + 2 or any(x == 0 or not 0 <= x < q for x in v):
        raise InvalidSpec("v must be q+2 nonzero elements")
    alpha = default_alpha(f, q)  # alpha_q = 0, first q-1 points invertible
    return alpha, v


def _q_plus_2_check_matrix(f: FiniteField, v: Sequence[int]) -> GfMatrix:
    """The 3 x (q+2) matrix with rows v_j alpha_j^i and tail identity block."""
    q = f.q
    alpha, _ = _char_two_points(f, v)
    H = np.zeros((3, q + 2), dtype=np.uint8)
    for j in range(q - 1):
        a = alpha[j]
        H[0, j] = v[j]
        H[1, j] = f.mul(v[j], a)
        H[2, j] = f.mul(v[j], f.mul(a, a))
    H[0, q - 1] = v[q - 1]  # the zero point contributes to row 0 only
    H[1, q] = v[q]
    H[2, q + 1] = v[q + 1]
    return GfMatrix(f, H)


def q_plus_2_high(f: FiniteField, v: Optional[Sequence[int]] = None, verify: bool = True) -> LinearCode:
    """The [2^m+2, 2^m-1, 4] code defined by the 3-row parity check matrix."""
    alpha, vv = _char_two_points(f, v)
    H = _q_plus_2_check_matrix(f, vv)
    C = LinearCode(H).dual()
    if verify and (C.k != f.q - 1 or not C.is_mds()):
        raise VerificationFailed(f"high code is not MDS [{f.q + 2},{f.q - 1}]")
    return C


def q_plus_2_low(f: FiniteField, v: Optional[Sequence[int]] = None, verify: bool = True) -> LinearCode:
    """The [2^m+2, 3, 2^m] code generated by the inverse-entry matrix.

    With the same multipliers v, this code is nested inside the high code;
    the builder checks G H^T = 0 against the parity-check matrix.
    """
    alpha, vv = _char_two_points(f, v)
    q = f.q
    G = np.zeros((3, q + 2), dtype=np.uint8)
    for j in range(q - 1):
        a_inv = f.inv(alpha[j])
        vj_inv = f.inv(vv[j])
        G[0, j] = vj_inv
        G[1, j] = f.mul(vj_inv, a_inv)
        G[2, j] = f.mul(vj_inv, f.mul(a_inv, a_inv))
    G[0, q - 1] = f.inv(vv[q - 1])
    G[1, q] = f.inv(vv[q])
    G[2, q + 1] = f.inv(vv[q + 1])
    M = GfMatrix(f, G)
    if verify:
        H = _q_plus_2_check_matrix(f, vv)
        prod = mat_mul(M, transpose(H))
        if np.any(prod.data):
            raise VerificationFailed("G H^T != 0 for the length-(q+2) pair")
    D = from_generator(M)
    if verify and (D.k != 3 or not D.is_mds()):
        raise VerificationFailed(f"low code is not MDS [{q + 2},3]")
    return D
