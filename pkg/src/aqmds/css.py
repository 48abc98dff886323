"""Asymmetric CSS construction from a nested classical pair.

Given linear codes C1, C2 with dual(C1) contained in C2, the derived
quantum parameters are

    n, k = k1 + k2 - n,
    d_z  = max(wt(C2 \\ C1^perp), wt(C1 \\ C2^perp)),
    d_x  = min of the same two set-difference weights,

with purity meaning {d_z, d_x} equals the pair of classical minimum
distances, and the AQMDS flag marking equality in the quantum Singleton
bound k <= n - d_x - d_z + 2.  Set-difference weights are computed by
exact enumeration; each enumeration pass also yields the classical
minimum distance of the enumerated code, so one pass per side suffices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .code import (
    LinearCode,
    _enumerate_scan,
    complement_rows,
    enum_cap,
    is_subcode,
)
from .errors import (
    CapExceeded,
    DegenerateInput,
    DimensionTooSmall,
    FieldMismatch,
    LengthMismatch,
    NoFullWeightWord,
    NotNested,
)
from .matrix import GfMatrix, mat_vec


@dataclass(frozen=True)
class AqcParams:
    """Verified parameters [[n, k, dz/dx]]_q of a CSS asymmetric quantum code."""

    q: int
    n: int
    k: int
    dz: int
    dx: int
    pure: bool
    aqmds: bool
    # which set difference achieved which value (None on the k = 0 path)
    wt_c2_minus_c1perp: Optional[int] = None
    wt_c1_minus_c2perp: Optional[int] = None
    d1: Optional[int] = None
    d2: Optional[int] = None

    def __str__(self):
        flags = []
        if self.pure:
            flags.append("pure")
        if self.aqmds:
            flags.append("AQMDS")
        tail = " " + " ".join(flags) if flags else ""
        return f"[[{self.n},{self.k},{self.dz}/{self.dx}]]_{self.q}{tail}"


@dataclass(frozen=True)
class NestedPair:
    """A classical pair (C1, C2) with dual(C1) verified inside C2."""

    c1: LinearCode
    c2: LinearCode

    @property
    def quantum_k(self) -> int:
        return self.c1.k + self.c2.k - self.c1.n


def make_pair(C1: LinearCode, C2: LinearCode) -> NestedPair:
    """Validate the nesting dual(C1) subseteq C2 and wrap the pair."""
    if C1.field is not C2.field:
        raise FieldMismatch("codes over different fields")
    if C1.n != C2.n:
        raise LengthMismatch(f"lengths differ: {C1.n} != {C2.n}")
    c1_dual = C1.dual()
    if c1_dual.k > 0 and not is_subcode(c1_dual, C2):
        for row in c1_dual.G.data:
            if C2.k < C2.n and np.any(mat_vec(C2.H, row)):
                raise NotNested(
                    f"dual(C1) not contained in C2; witness row {row.tolist()}"
                )
        raise NotNested("dual(C1) not contained in C2")
    # the reverse inclusion dual(C2) subseteq C1 is equivalent; assert it
    assert C2.dual().k == 0 or is_subcode(C2.dual(), C1)
    return NestedPair(C1, C2)


def _mds_backed_distance(C: LinearCode, cap: int) -> int:
    """Exact distance by enumeration, or via the MDS oracle when too large."""
    if C.field.q ** C.k <= cap:
        return C.min_distance(cap)
    if C.is_mds():
        return C.n - C.k + 1
    raise CapExceeded(
        f"cannot determine distance of [{C.n},{C.k}]_{C.field.q} within cap {cap}"
    )


def css_construct(pair: NestedPair, cap: Optional[int] = None) -> AqcParams:
    """Exact quantum parameters of the pair, by brute-force enumeration."""
    C1, C2 = pair.c1, pair.c2
    f = C1.field
    n = C1.n
    k = pair.quantum_k
    if k < 0:
        raise DegenerateInput(f"k1 + k2 - n = {k} < 0")  # impossible for valid pairs
    cap = enum_cap(cap)

    if k == 0:
        # C1^perp = C2: distances of the code and its dual, pure by convention
        d1 = _mds_backed_distance(C1, cap)
        d2 = _mds_backed_distance(C2, cap)
        dz, dx = max(d1, d2), min(d1, d2)
        return AqcParams(
            q=f.q, n=n, k=0, dz=dz, dx=dx, pure=True,
            aqmds=(0 == n - dx - dz + 2), d1=d1, d2=d2,
        )

    # one enumeration pass per side: weight outside the nested subcode
    # plus the code's own minimum distance
    syn2 = complement_rows(f, _dual_gen(C2), C1.G.data)
    scan2 = _enumerate_scan(f, C2.G.data, syn_rows=syn2, cap=cap)
    wt2 = scan2["min_weight_outside"]
    d2 = scan2["min_weight"]

    syn1 = complement_rows(f, _dual_gen(C1), C2.G.data)
    scan1 = _enumerate_scan(f, C1.G.data, syn_rows=syn1, cap=cap)
    wt1 = scan1["min_weight_outside"]
    d1 = scan1["min_weight"]

    dz, dx = max(wt2, wt1), min(wt2, wt1)
    pure = {dz, dx} == {d1, d2}
    return AqcParams(
        q=f.q, n=n, k=k, dz=dz, dx=dx, pure=pure,
        aqmds=(k == n - dx - dz + 2),
        wt_c2_minus_c1perp=wt2, wt_c1_minus_c2perp=wt1, d1=d1, d2=d2,
    )


def _dual_gen(C: LinearCode) -> np.ndarray:
    if C.k == C.n:
        return np.zeros((0, C.n), dtype=np.uint8)
    return C.H.data


def pair_from_full_weight(C: LinearCode, cap: Optional[int] = None) -> NestedPair:
    """The CSS pair realizing the full-weight-codeword construction:
    C1 = dual of the line spanned by the first full-weight codeword, C2 = C."""
    if C.k < 2:
        raise DimensionTooSmall(f"need k >= 2, got k={C.k}")
    u = C.full_weight_codeword(cap)
    if u is None:
        raise NoFullWeightWord(f"[{C.n},{C.k}]_{C.field.q} has no full-weight codeword")
    line = LinearCode(GfMatrix(C.field, u[None, :]))
    return make_pair(line.dual(), C)


def from_full_weight(C: LinearCode, cap: Optional[int] = None) -> AqcParams:
    """Quantum code [[n, k-1, d_z/2]] from a code with a full-weight codeword."""
    return css_construct(pair_from_full_weight(C, cap), cap)
