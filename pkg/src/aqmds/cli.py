"""Command-line front end.

Subcommands: construct (classical MDS builders), css (nested-pair families
with quantum parameters), enumerate (full catalog for a field size),
exists (single-tuple decision), verify (re-verify a certificate file).

Field elements are written as integer indices in 0..q-1: the base-p digits
of an index are the polynomial-basis coefficients of the element, so over
prime fields the index is the residue itself.  --alpha and --v take
comma-separated indices.

Exit codes: 0 success, 2 invalid arguments or specification,
3 verification failure.  The environment variable AQMDS_MAX_ENUM overrides
the default enumeration cap of 10^7 codewords.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from .catalog import (
    CatalogQuery,
    Certificate,
    FAMILY_TAGS,
    VERIFY_LEVELS,
    _mds_source,
    build_pair_from_recipe,
    certificate_from_dict,
    certificate_to_dict,
    certificates_to_json,
    enumerate_catalog,
    exists,
    make_certificate,
    verify as verify_certificate,
)
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
from .errors import AqmdsError, RecipeInvalid, VerificationFailed
from .gf import find_irreducible, make_field

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3


def _parse_indices(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")


def _print_code(C, label: str):
    d = C.min_distance() if C.field.q ** C.k <= 10**6 else C.n - C.k + 1
    print(f"[{C.n},{C.k},{d}]_{C.field.q} MDS={'true' if C.is_mds() else 'false'}  ({label})")
    print("generator matrix (canonical form, element indices):")
    for row in C.G.data:
        print("  " + " ".join(str(int(x)) for x in row))


def cmd_construct(args) -> int:
    f = make_field(args.q)
    alpha = _parse_indices(args.alpha)
    v = _parse_indices(args.v)
    which = args.builder
    if which == "grs":
        if args.n is None or args.k is None:
            raise RecipeInvalid("grs requires --n and --k")
        if args.n > args.q:
            raise RecipeInvalid("n exceeds q")
        C = grs(GrsSpec(f, args.n, args.k,
                        tuple(alpha) if alpha else (), tuple(v) if v else ()))
        _print_code(C, "GRS")
    elif which == "extended-grs":
        if args.k is None:
            raise RecipeInvalid("extended-grs requires --k")
        C = extended_grs(f, args.k, alpha, v)
        _print_code(C, "extended GRS")
    elif which == "grs-subcode":
        if args.k is None or args.r is None:
            raise RecipeInvalid("grs-subcode requires --k and --r")
        C, poly = grs_subcode_irreducible(f, args.k, args.r, alpha, v)
        _print_code(C, "irreducible-polynomial subcode")
        print(f"irreducible polynomial coefficients (low degree first): {list(poly)}")
    elif which == "qplus2-high":
        _print_code(q_plus_2_high(f, v), "length q+2, dimension q-1")
    elif which == "qplus2-low":
        _print_code(q_plus_2_low(f, v), "length q+2, dimension 3")
    else:  # unreachable via argparse choices
        raise RecipeInvalid(f"unknown builder {which!r}")
    return EXIT_OK


def _css_recipe(args) -> Dict:
    """Claimed parameters and recipe for a family selected on the css command.

    Returns {"n", "j", "dz", "dx", "recipe"} with dz >= dx.
    """
    q, fam = args.q, args.family
    f = make_field(q)

    def need(*names):
        missing = [m for m in names if getattr(args, m) is None]
        if missing:
            raise RecipeInvalid(
                f"--family {fam} requires {', '.join('--' + m for m in missing)}")

    base = {"q": q, "alpha_convention": "zero_last"}
    if fam == "th7":
        need("n", "k", "j")
        n, k, j = args.n, args.k, args.j
        if not (1 <= k and j >= 1 and k + j <= n - 1 and n <= q):
            raise RecipeInvalid(
                "th7 requires 1 <= k, j >= 1, k+j <= n-1, n <= q")
        recipe = {**base, "construction": "TH7", "n": n, "j": j, "k": k,
                  "alpha": list(default_alpha(f, n)), "v": list(ones(n))}
        a, b = n - k - j + 1, k + 1
        return {"n": n, "j": j, "dz": max(a, b), "dx": min(a, b), "recipe": recipe}
    if fam == "th8":
        need("k", "j")
        k, j = args.k, args.j
        if not 2 <= j <= k - 1:
            raise RecipeInvalid("th8 requires 2 <= j <= k-1")
        if not 3 <= k <= q:
            raise RecipeInvalid("th8 requires 3 <= k <= q")
        n = q + 1
        recipe = {**base, "construction": "TH8", "n": n, "j": j, "k": k, "r": k - j,
                  "alpha": list(default_alpha(f, q)), "v": list(ones(q + 1)),
                  "irreducible": list(find_irreducible(f, j))}
        a, b = q - k + 2, k - j + 1
        return {"n": n, "j": j, "dz": max(a, b), "dx": min(a, b), "recipe": recipe}
    if fam == "th11":
        if q % 2 == 1 or q < 4:
            raise RecipeInvalid("th11 requires q = 2^m with m >= 2")
        recipe = {**base, "construction": "TH11", "n": q + 2, "j": q - 4,
                  "k": 3, "v": list(ones(q + 2))}
        return {"n": q + 2, "j": q - 4, "dz": 4, "dx": 4, "recipe": recipe}
    if fam == "th12":
        need("n", "k")
        n, k = args.n, args.k
        if k < 2:
            raise RecipeInvalid("th12 requires k >= 2")
        src = _mds_source(q, n, k)
        recipe = {**base, "construction": "TH12", "n": n, "j": k - 1, "k": k,
                  "source": src}
        return {"n": n, "j": k - 1, "dz": n - k + 1, "dx": 2, "recipe": recipe}
    if fam == "prop5":
        need("n", "k")
        n, k = args.n, args.k
        recipe = {**base, "construction": "PROP5", "n": n, "j": k, "k": k,
                  "code": _mds_source(q, n, k)}
        return {"n": n, "j": k, "dz": n - k + 1, "dx": 1, "recipe": recipe}
    if fam == "prop6":
        need("n", "k")
        n, k = args.n, args.k
        recipe = {**base, "construction": "PROP6", "n": n, "j": 0, "k": k,
                  "code": _mds_source(q, n, k)}
        a, b = n - k + 1, k + 1
        return {"n": n, "j": 0, "dz": max(a, b), "dx": min(a, b), "recipe": recipe}
    if fam == "cor10":
        if q % 2 == 1 or q < 4:
            raise RecipeInvalid("cor10 requires q = 2^m with m >= 2")
        recipe = {**base, "construction": "COR10", "n": q + 1, "j": 1,
                  "k": 1, "v": list(ones(q + 2))}
        return {"n": q + 1, "j": 1, "dz": q - 1, "dx": 3, "recipe": recipe}
    raise RecipeInvalid(f"unknown family {fam!r}")  # unreachable via choices


_FAMILY_TO_TAG = {"th7": "TH7", "th8": "TH8", "th11": "TH11", "th12": "TH12",
                  "prop5": "PROP5", "prop6": "PROP6", "cor10": "COR10"}


def cmd_css(args) -> int:
    claim = _css_recipe(args)
    cert = make_certificate(
        args.q, claim["n"], claim["j"], claim["dz"], claim["dx"],
        [_FAMILY_TO_TAG[args.family]], claim["recipe"], args.verify_level)
    if not cert.verified:
        print(f"verification failed: {cert.oracle_log}", file=sys.stderr)
        return EXIT_VERIFY
    print(str(cert.params))
    print("oracles: " + " ".join(cert.oracle_log))
    if args.emit_cert:
        with open(args.emit_cert, "w") as fh:
            json.dump(certificate_to_dict(cert), fh, indent=2)
            fh.write("\n")
        print(f"certificate written to {args.emit_cert}")
    return EXIT_OK


def _rows_of(certs: Sequence[Certificate]) -> List[List[str]]:
    rows = []
    for c in certs:
        p = c.params
        rows.append([str(p.q), str(p.n), str(p.k), str(p.dz), str(p.dx),
                     str(p.pure).lower(), str(p.aqmds).lower(),
                     ";".join(c.family)])
    return rows


def _emit(certs: Sequence[Certificate], fmt: str):
    if fmt == "json":
        print(certificates_to_json(list(certs)))
        return
    header = ["q", "n", "j", "dz", "dx", "pure", "aqmds", "family"]
    rows = _rows_of(certs)
    if fmt == "csv":
        print(",".join(header))
        for r in rows:
            print(",".join(r))
        return
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        print("  ".join(x.ljust(w) for x, w in zip(r, widths)))


def cmd_enumerate(args) -> int:
    query = CatalogQuery(q=args.q, n=args.n, j=args.j, dz=args.dz, dx=args.dx,
                         dx_min=args.dx_min, verify_level=args.verify_level)
    certs = enumerate_catalog(query)
    _emit(certs, args.format)
    if args.format == "table":
        print(f"{len(certs)} tuples (lengths assume the MDS conjecture)")
    return EXIT_OK


def cmd_exists(args) -> int:
    result = exists(args.q, args.n, args.j, args.dz, args.dx,
                    verify_level=args.verify_level)
    if not result.exists:
        print(f"no ({result.reason})")
        return EXIT_OK
    print("yes")
    if result.certificate is not None:
        print(json.dumps(certificate_to_dict(result.certificate), indent=2))
    else:
        print(f"({result.reason})")
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        payload = json.load(fh)
    items = payload if isinstance(payload, list) else [payload]
    for item in items:
        cert = certificate_from_dict(item)
        refreshed = verify_certificate(cert)
        print(f"{refreshed.params}: verified")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqmds",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a classical MDS code")
    p.add_argument("builder", choices=["grs", "extended-grs", "grs-subcode",
                                       "qplus2-high", "qplus2-low"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--alpha", help="comma-separated evaluation-point indices")
    p.add_argument("--v", help="comma-separated nonzero column multipliers")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("css", help="build a nested pair and derive quantum parameters")
    p.add_argument("--family", required=True, choices=sorted(_FAMILY_TO_TAG))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--emit-cert", metavar="FILE")
    p.add_argument("--verify-level", default="closed_form", choices=VERIFY_LEVELS)
    p.set_defaults(func=cmd_css)

    p = sub.add_parser("enumerate", help="all admissible tuples for a field size")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--dz", type=int)
    p.add_argument("--dx", type=int)
    p.add_argument("--dx-min", type=int)
    p.add_argument("--format", default="table", choices=["table", "json", "csv"])
    p.add_argument("--verify-level", default="closed_form", choices=VERIFY_LEVELS)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("exists", help="decide one parameter tuple")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--dz", type=int, required=True)
    p.add_argument("--dx", type=int, required=True)
    p.add_argument("--verify-level", default="closed_form", choices=VERIFY_LEVELS)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("certificate", help="path to a certificate JSON file or array")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (AqmdsError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
