"""Classification catalog of pure CSS AQMDS parameters for a given q.

The admissible parameter tuples [[n, j, dz/dx]]_q form seven overlapping
families; the enumerator expands all of them over the conjecture-bounded
length range (n <= q+1 for odd q, n <= q+2 for even q), deduplicates
tuples, and emits one certificate per tuple.  A certificate carries a
replayable construction recipe plus the log of verification oracles that
were run on the rebuilt pair.

Family tags:
    PROP5  d_x = 1: an MDS code against the full space
    PROP6  j = 0: a code against its own dual
    TH7    nested GRS pair, length <= q
    TH8    irreducible-polynomial subcode inside the extended GRS code,
           length q+1, j >= 2
    COR10  length q+1, j = 1, even q: shorten/puncture of the length-(q+2)
           dimension-3 code
    TH11   length q+2, dz = dx = 4 nested pair
    TH12   full-weight-codeword construction, d_x = 2
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .code import LinearCode, _enumerate_scan, complement_rows, enum_cap, from_generator, full_space, is_subcode
from .css import AqcParams, NestedPair, _dual_gen, _mds_backed_distance, make_pair, pair_from_full_weight
from .errors import CapExceeded, NotPrimePower, RecipeInvalid, VerificationFailed
from .gf import FiniteField, _factor_prime_power, find_irreducible, make_field
from .matrix import GfMatrix
from .construct import (
    GrsSpec,
    default_alpha,
    extended_grs,
    grs,
    grs_subcode_irreducible,
    ones,
    q_plus_2_high,
    q_plus_2_low,
)

FAMILY_TAGS = ("PROP5", "PROP6", "TH7", "TH8", "COR10", "TH11", "TH12")
VERIFY_LEVELS = ("closed_form", "full_oracle")


@dataclass
class Certificate:
    """Replayable construction recipe plus verified quantum parameters."""

    params: AqcParams
    family: List[str]
    recipe: Dict
    verified: bool
    oracle_log: List[str]


@dataclass
class CatalogQuery:
    q: int
    n: Optional[int] = None
    j: Optional[int] = None
    dz: Optional[int] = None
    dx: Optional[int] = None
    dx_min: Optional[int] = None
    verify_level: str = "closed_form"

    def __post_init__(self):
        if self.verify_level not in VERIFY_LEVELS:
            raise ValueError(f"verify_level must be one of {VERIFY_LEVELS}")
        for name in ("n", "j", "dz", "dx"):
            val = getattr(self, name)
            if val is not None and not 0 <= val <= self.q + 2:
                raise ValueError(f"filter {name}={val} outside [0, q+2]")


@dataclass
class ExistsResult:
    exists: bool
    certificate: Optional[Certificate]
    reason: str


def is_prime_power(q: int) -> bool:
    try:
        _factor_prime_power(q)
        return True
    except NotPrimePower:
        return False


def length_bound(q: int) -> int:
    """Conjecture-conditional maximum length: q+1 for odd q, q+2 for even q."""
    return q + 2 if q % 2 == 0 else q + 1


# -- the seven parameter families ---------------------------------------------


def _case_triples(q: int, n: int):
    """Yield (case_no, k, j) for every family admitting length n over GF(q).

    k is the classical dimension parameter of the classification; the
    parameter tuple it encodes is [[n, j, dz/dx]] with
    {dz, dx} = {n-k-j+1, k+1}.
    """
    is_even = q % 2 == 0
    two_power = is_even and is_prime_power(q)
    if n >= 2:
        for k in dict.fromkeys((1, n - 1)):  # case 1, trivial MDS pairs
            for j in dict.fromkeys((0, n - k)):
                yield 1, k, j
    if q == 2 and n >= 2 and n % 2 == 0:  # case 2
        yield 2, 1, n - 2
    if q >= 3 and n >= 2:  # case 3
        yield 3, 1, n - 2
    if q >= 3 and 2 <= n <= q:  # case 4
        for k in range(1, n):
            for j in range(0, n - k + 1):
                yield 4, k, j
    if q >= 3 and n == q + 1:  # case 5
        for k in range(1, n):
            yield 5, k, 0
            for j in range(2, n - k + 1):
                yield 5, k, j
    if two_power and q >= 4 and n == q + 1:  # case 6
        for k in dict.fromkeys((2, q - 2)):
            yield 6, k, 1
    if two_power and q >= 4 and n == q + 2:  # case 7
        for j in dict.fromkeys((2, q - 2)):
            yield 7, 1, j
        for j in dict.fromkeys((0, q - 4, q - 1)):
            yield 7, 3, j
        for j in dict.fromkeys((0, 3)):
            yield 7, q - 1, j


def _tuple_of(n: int, k: int, j: int) -> Tuple[int, int, int, int]:
    a, b = n - k - j + 1, k + 1
    return (n, j, max(a, b), min(a, b))


def _family_tag(case_no: int, q: int, n: int, k: int, j: int) -> str:
    if j == 0:
        return "PROP6"
    if j == n - k:  # dx = 1
        return "PROP5"
    if case_no in (2, 3):
        return "TH12"
    if case_no == 4:
        return "TH7"
    if case_no == 5:
        return "TH8"
    if case_no == 6:
        return "COR10"
    if case_no == 7:
        if k == 3 and j == q - 4:
            return "TH11"
        return "TH12"
    raise AssertionError((case_no, k, j))  # unreachable


# -- recipes ------------------------------------------------------------------


def _mds_source(q: int, n: int, k: int) -> Dict:
    """Canonical construction recipe for an MDS [n, k, n-k+1]_q code."""
    if not 1 <= k <= n:
        raise RecipeInvalid(f"no MDS code with k={k}, n={n}")
    if k == n:
        return {"type": "full", "n": n}
    if k == 1:
        return {"type": "repetition", "n": n}
    if k == n - 1:
        return {"type": "repetition_dual", "n": n}
    if n <= q:
        return {"type": "grs", "n": n, "k": k,
                "alpha": list(default_alpha(make_field(q), n)), "v": list(ones(n))}
    if n == q + 1:
        return {"type": "extended_grs", "k": k,
                "alpha": list(default_alpha(make_field(q), q)), "v": list(ones(q + 1))}
    if n == q + 2 and q % 2 == 0 and k == 3:
        return {"type": "qplus2_low", "v": list(ones(q + 2))}
    if n == q + 2 and q % 2 == 0 and k == q - 1:
        return {"type": "qplus2_high", "v": list(ones(q + 2))}
    raise RecipeInvalid(f"no known MDS construction for [{n},{k}]_{q}")


def _designated_recipe(q: int, case_no: int, n: int, k: int, j: int) -> Dict:
    """Construction recipe for the (case, k, j) realization of a tuple."""
    f = make_field(q)
    base = {"q": q, "n": n, "j": j, "alpha_convention": "zero_last"}
    tag = _family_tag(case_no, q, n, k, j)
    if tag == "PROP6":
        return {**base, "construction": "PROP6", "k": k, "code": _mds_source(q, n, k)}
    if tag == "PROP5":
        # C1 is an MDS code of dimension j, C2 the full space
        return {**base, "construction": "PROP5", "k": j, "code": _mds_source(q, n, j)}
    if tag == "TH7":
        return {**base, "construction": "TH7", "k": k,
                "alpha": list(default_alpha(f, n)), "v": list(ones(n))}
    if tag == "TH8":
        kk = k + j  # dimension of the ambient extended GRS code
        poly = find_irreducible(f, j)  # degree = k - r
        return {**base, "construction": "TH8", "k": kk, "r": kk - j,
                "alpha": list(default_alpha(f, q)), "v": list(ones(q + 1)),
                "irreducible": list(poly)}
    if tag == "COR10":
        return {**base, "construction": "COR10", "k": k, "v": list(ones(q + 2))}
    if tag == "TH11":
        return {**base, "construction": "TH11", "k": 3, "v": list(ones(q + 2))}
    if tag == "TH12":
        if case_no in (2, 3):
            src = _mds_source(q, n, n - 1)
        elif k == 1 and j == 2:
            src = {"type": "qplus2_low", "v": list(ones(q + 2))}
        elif k == 1 and j == q - 2:
            src = {"type": "qplus2_high", "v": list(ones(q + 2))}
        else:
            raise RecipeInvalid(f"no TH12 realization for case {case_no}, k={k}, j={j}")
        return {**base, "construction": "TH12", "k": k, "source": src}
    raise AssertionError(tag)  # unreachable


def _build_source(f: FiniteField, src: Dict) -> LinearCode:
    kind = src.get("type")
    if kind == "full":
        return full_space(f, src["n"])
    if kind == "repetition":
        return from_generator(GfMatrix(f, np.ones((1, src["n"]), dtype=np.uint8)))
    if kind == "repetition_dual":
        rep = from_generator(GfMatrix(f, np.ones((1, src["n"]), dtype=np.uint8)))
        return rep.dual()
    if kind == "grs":
        return grs(GrsSpec(f, src["n"], src["k"],
                           tuple(src["alpha"]), tuple(src["v"])))
    if kind == "extended_grs":
        return extended_grs(f, src["k"], src["alpha"], src["v"])
    if kind == "qplus2_low":
        return q_plus_2_low(f, src["v"])
    if kind == "qplus2_high":
        return q_plus_2_high(f, src["v"])
    raise RecipeInvalid(f"unknown source type {kind!r}")


def build_pair_from_recipe(recipe: Dict) -> NestedPair:
    """Rebuild the classical nested pair described by a certificate recipe."""
    try:
        q = recipe["q"]
        construction = recipe["construction"]
        f = make_field(q)
        if construction == "PROP5":
            code = _build_source(f, recipe["code"])
            return make_pair(code, full_space(f, recipe["n"]))
        if construction == "PROP6":
            code = _build_source(f, recipe["code"])
            return make_pair(code.dual(), code)
        if construction == "TH7":
            n, k, j = recipe["n"], recipe["k"], recipe["j"]
            alpha, v = tuple(recipe["alpha"]), tuple(recipe["v"])
            c_low = grs(GrsSpec(f, n, k, alpha, v))
            c_high = grs(GrsSpec(f, n, k + j, alpha, v))
            return make_pair(c_low.dual(), c_high)
        if construction == "TH8":
            k, r = recipe["k"], recipe["r"]
            alpha, v = tuple(recipe["alpha"]), tuple(recipe["v"])
            sub, poly = grs_subcode_irreducible(f, k, r, alpha, v)
            if "irreducible" in recipe and tuple(recipe["irreducible"]) != poly:
                raise RecipeInvalid(
                    f"stored irreducible {recipe['irreducible']} does not match {list(poly)}"
                )
            amb = extended_grs(f, k, alpha, v)
            return make_pair(sub.dual(), amb)
        if construction == "COR10":
            d = q_plus_2_low(f, recipe["v"])
            shortened = d.shorten(d.n - 1)
            punctured = d.puncture(d.n - 1)
            return make_pair(shortened.dual(), punctured)
        if construction == "TH11":
            low = q_plus_2_low(f, recipe["v"])
            high = q_plus_2_high(f, recipe["v"])
            return make_pair(low.dual(), high)
        if construction == "TH12":
            src = _build_source(f, recipe["source"])
            return make_pair(*_th12_pair(src))
        raise RecipeInvalid(f"unknown construction {construction!r}")
    except (KeyError, TypeError) as exc:
        raise RecipeInvalid(f"malformed recipe: {exc}") from exc


def _th12_pair(src: LinearCode) -> Tuple[LinearCode, LinearCode]:
    pair = pair_from_full_weight(src)
    return pair.c1, pair.c2


# -- verification oracles -----------------------------------------------------


def _side_weights(pair: NestedPair, enumerate_c2: bool, cap: int):
    """One enumeration side of the CSS distance computation.

    Returns (set-difference weight, min distance of the enumerated code).
    """
    C1, C2 = pair.c1, pair.c2
    f = C1.field
    if enumerate_c2:
        big, other = C2, C1
    else:
        big, other = C1, C2
    syn = complement_rows(f, _dual_gen(big), other.G.data)
    scan = _enumerate_scan(f, big.G.data, syn_rows=syn, cap=cap)
    return scan["min_weight_outside"], scan["min_weight"]


def run_oracles(claimed: AqcParams, pair: NestedPair, level: str, cap: int):
    """Run verification oracles against the rebuilt pair.

    Returns (verified, oracle_log).  Oracles that would exceed the
    enumeration cap are marked skipped, never silently passed.
    """
    log: List[str] = []
    failures = 0

    def record(name: str, passed: bool):
        nonlocal failures
        log.append(f"{name}:{'pass' if passed else 'FAIL'}")
        if not passed:
            failures += 1

    record("nesting", is_subcode(pair.c1.dual(), pair.c2)
           if pair.c1.k < pair.c1.n else True)
    c1_dual = pair.c1.dual()
    record("mds_dual_c1", c1_dual.k > 0 and c1_dual.is_mds())
    record("mds_c2", pair.c2.is_mds())
    record("dimensions", pair.quantum_k == claimed.k)
    record("singleton_equality",
           claimed.k == claimed.n - claimed.dx - claimed.dz + 2)

    if level == "full_oracle":
        if claimed.k == 0:
            try:
                d1 = _mds_backed_distance(pair.c1, cap)
                d2 = _mds_backed_distance(pair.c2, cap)
                record("distances_exact",
                       {max(d1, d2), min(d1, d2)} == {claimed.dz, claimed.dx})
            except CapExceeded:
                log.append("distances_exact:skipped(cap)")
        else:
            wt2 = wt1 = d1 = d2 = None
            try:
                wt2, d2 = _side_weights(pair, enumerate_c2=True, cap=cap)
                record("distance_c2_side", wt2 in (claimed.dz, claimed.dx))
            except CapExceeded:
                log.append("distance_c2_side:skipped(cap)")
            try:
                wt1, d1 = _side_weights(pair, enumerate_c2=False, cap=cap)
                record("distance_c1_side", wt1 in (claimed.dz, claimed.dx))
            except CapExceeded:
                log.append("distance_c1_side:skipped(cap)")
            if wt2 is not None and wt1 is not None:
                record("distances_exact",
                       (max(wt2, wt1), min(wt2, wt1)) == (claimed.dz, claimed.dx))
                record("purity", {max(wt2, wt1), min(wt2, wt1)} == {d1, d2})
    return failures == 0, log


def make_certificate(
    q: int,
    n: int,
    j: int,
    dz: int,
    dx: int,
    tags: List[str],
    recipe: Dict,
    verify_level: str = "closed_form",
    cap: Optional[int] = None,
) -> Certificate:
    pair = build_pair_from_recipe(recipe)
    claimed = AqcParams(q=q, n=n, k=j, dz=dz, dx=dx, pure=True, aqmds=True)
    verified, log = run_oracles(claimed, pair, verify_level, enum_cap(cap))
    return Certificate(
        params=claimed,
        family=sorted(tags, key=FAMILY_TAGS.index),
        recipe=recipe,
        verified=verified,
        oracle_log=log,
    )


# -- public operations --------------------------------------------------------


def enumerate_catalog(query: CatalogQuery, cap: Optional[int] = None) -> List[Certificate]:
    """All admissible pure CSS AQMDS tuples for q, one certificate each.

    A tuple reachable by several families carries all their tags; its
    recipe comes from the first family in classification order.  Output is
    sorted by (n, j, dz, dx) and deterministic across runs.
    """
    q = query.q
    if not is_prime_power(q):
        raise NotPrimePower(f"{q} is not a prime power")
    rows: Dict[Tuple[int, int, int, int], Dict] = {}
    ns = [query.n] if query.n is not None else list(range(2, length_bound(q) + 1))
    for n in ns:
        if not 2 <= n <= length_bound(q):
            continue
        for case_no, k, j in _case_triples(q, n):
            key = _tuple_of(n, k, j)
            tag = _family_tag(case_no, q, n, k, j)
            if key not in rows:
                rows[key] = {
                    "tags": {tag},
                    "recipe": _designated_recipe(q, case_no, n, k, j),
                }
            else:
                rows[key]["tags"].add(tag)
    out = []
    for (n, j, dz, dx) in sorted(rows):
        if query.j is not None and j != query.j:
            continue
        if query.dz is not None and query.dx is not None:
            if {dz, dx} != {query.dz, query.dx}:
                continue
        elif query.dz is not None and query.dz not in (dz, dx):
            continue
        elif query.dx is not None and query.dx not in (dz, dx):
            continue
        if query.dx_min is not None and dx < query.dx_min:
            continue
        entry = rows[(n, j, dz, dx)]
        out.append(
            make_certificate(q, n, j, dz, dx, sorted(entry["tags"]),
                             entry["recipe"], query.verify_level, cap)
        )
    return out


def exists(
    q: int,
    n: int,
    j: int,
    dz: int,
    dx: int,
    verify_level: str = "closed_form",
    cap: Optional[int] = None,
) -> ExistsResult:
    """Decide whether a pure CSS AQMDS [[n, j, dz/dx]]_q exists; {dz, dx} is
    treated as unordered.  Positive answers carry a constructive certificate
    when one can be built within the enumeration cap."""
    if not is_prime_power(q):
        return ExistsResult(False, None, f"{q} is not a prime power")
    if min(dz, dx) < 1 or j < 0 or n < 1:
        return ExistsResult(False, None, "parameters out of range")
    dz, dx = max(dz, dx), min(dz, dx)
    # nontrivial MDS ingredients (distance outside {1, 2, n}) cap the length;
    # repetition codes, their duals, and the full space exist at any length
    if min(dz, dx) >= 3:
        if q % 2 == 1 and n > q + 1:
            return ExistsResult(False, None, "length exceeds q+1 for odd q")
        if n > q + 2:
            return ExistsResult(False, None, "length exceeds q+2")
    if j != n - dz - dx + 2:
        return ExistsResult(
            False, None,
            f"not quantum-Singleton-tight: j={j} != n-dz-dx+2={n - dz - dx + 2}",
        )
    matches = [
        (case_no, k, jj)
        for case_no, k, jj in _case_triples(q, n)
        if jj == j and _tuple_of(n, k, jj) == (n, j, dz, dx)
    ]
    if not matches:
        if n == q + 1 and j == 1 and dx >= 2:
            reason = "j=1 at length q+1 requires even q and {dz,dx}={3,q-1}"
        else:
            reason = "parameters fall outside the classification"
        return ExistsResult(False, None, reason)
    tags = sorted({_family_tag(c, q, n, k, jj) for c, k, jj in matches})
    case_no, k, jj = matches[0]
    recipe = _designated_recipe(q, case_no, n, k, jj)
    try:
        cert = make_certificate(q, n, j, dz, dx, tags, recipe, verify_level, cap)
    except CapExceeded as exc:
        return ExistsResult(True, None, f"exists; certificate construction skipped: {exc}")
    return ExistsResult(True, cert, "admitted by the classification")


def verify(cert: Certificate, cap: Optional[int] = None) -> Certificate:
    """Rebuild the pair from the recipe and rerun all oracles.

    Returns a refreshed certificate; raises VerificationFailed naming the
    first failing oracle.  Idempotent on valid certificates.
    """
    pair = build_pair_from_recipe(cert.recipe)
    verified, log = run_oracles(cert.params, pair, "full_oracle", enum_cap(cap))
    if not verified:
        first_fail = next(e.split(":")[0] for e in log if e.endswith("FAIL"))
        raise VerificationFailed(first_fail)
    return Certificate(
        params=cert.params,
        family=list(cert.family),
        recipe=cert.recipe,
        verified=True,
        oracle_log=log,
    )


# -- serialization ------------------------------------------------------------


def certificate_to_dict(cert: Certificate) -> Dict:
    p = cert.params
    return {
        "q": p.q,
        "n": p.n,
        "j": p.k,
        "dz": p.dz,
        "dx": p.dx,
        "pure": p.pure,
        "aqmds": p.aqmds,
        "family": list(cert.family),
        "recipe": cert.recipe,
        "verified": cert.verified,
        "oracle_log": list(cert.oracle_log),
    }


def certificate_from_dict(d: Dict) -> Certificate:
    try:
        params = AqcParams(
            q=d["q"], n=d["n"], k=d["j"], dz=d["dz"], dx=d["dx"],
            pure=d["pure"], aqmds=d["aqmds"],
        )
        return Certificate(
            params=params,
            family=list(d["family"]),
            recipe=dict(d["recipe"]),
            verified=bool(d["verified"]),
            oracle_log=list(d["oracle_log"]),
        )
    except (KeyError, TypeError) as exc:
        raise RecipeInvalid(f"malformed certificate: {exc}") from exc


def certificates_to_json(certs: List[Certificate]) -> str:
    return json.dumps([certificate_to_dict(c) for c in certs], indent=2)
