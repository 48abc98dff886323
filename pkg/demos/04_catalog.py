#!/usr/bin/env python3
"""The classification catalog.

For a field size q, `enumerate_catalog` lists every admissible pure CSS
AQMDS parameter tuple (assuming the MDS conjecture for the length range)
and attaches a replayable construction certificate to each.
"""
from aqmds import (
    CatalogQuery,
    certificate_to_dict,
    enumerate_catalog,
    exists,
    verify,
)

certs = enumerate_catalog(CatalogQuery(q=4))
print(f"q=4: {len(certs)} parameter tuples")
for c in certs[:8]:
    p = c.params
    print(f"  [[{p.n},{p.k},{p.dz}/{p.dx}]]_4  families={','.join(c.family)}")
print("  ...")

r = exists(8, 10, 4, 4, 4)
print(f"\n[[10,4,4/4]]_8 exists: {r.exists}  (families {r.certificate.family})")

r = exists(5, 7, 1, 3, 3)
print(f"[[7,1,3/3]]_5 exists: {r.exists}  ({r.reason})")

cert = exists(5, 5, 1, 3, 3).certificate
refreshed = verify(cert)  # rebuild pair from recipe, rerun all oracles
print("\nreplayed certificate oracle log:")
for entry in refreshed.oracle_log:
    print("  ", entry)
print("\nfull certificate record:")
import json
print(json.dumps(certificate_to_dict(refreshed), indent=2))
