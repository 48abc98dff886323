"""Classification catalog: enumeration, existence decisions, certificates."""
import json

import pytest

from aqmds.catalog import (
    CatalogQuery,
    FAMILY_TAGS,
    build_pair_from_recipe,
    certificate_from_dict,
    certificate_to_dict,
    certificates_to_json,
    enumerate_catalog,
    exists,
    length_bound,
    make_certificate,
    run_oracles,
    verify,
)
from aqmds.css import css_construct
from aqmds.errors import NotPrimePower, RecipeInvalid, VerificationFailed

import th14_expansion

GOLDEN_COUNT_Q4 = th14_expansion.GOLDEN_COUNT_Q4  # frozen: 29


class TestEnumerate:
    def test_q4_n5_j1_only_cor10_tuple(self):
        certs = enumerate_catalog(CatalogQuery(q=4, n=5, j=1))
        tuples = {(c.params.n, c.params.k, c.params.dz, c.params.dx) for c in certs}
        # j=1 at n=q+1 exists only as {dz,dx} = {3, q-1} = {3,3}, plus the
        # dx=1 trivial family which also has j = 1 at this length
        with_dx2 = {t for t in tuples if t[3] >= 2}
        assert with_dx2 == {(5, 1, 3, 3)}
        cor10 = [c for c in certs if "COR10" in c.family]
        assert len(cor10) == 1 and cor10[0].params.dx == 3

    def test_q5_n6_j1_dx2_empty(self):
        certs = enumerate_catalog(CatalogQuery(q=5, n=6, j=1, dx_min=2))
        assert certs == []

    def test_q4_count_matches_frozen_golden(self):
        certs = enumerate_catalog(CatalogQuery(q=4))
        assert len(certs) == GOLDEN_COUNT_Q4

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_matches_independent_expansion(self, q):
        certs = enumerate_catalog(CatalogQuery(q=q))
        got = {(c.params.n, c.params.k, c.params.dz, c.params.dx) for c in certs}
        assert got == th14_expansion.expand(q)

    def test_sorted_and_deduplicated(self):
        certs = enumerate_catalog(CatalogQuery(q=5))
        keys = [(c.params.n, c.params.k, c.params.dz, c.params.dx) for c in certs]
        assert keys == sorted(keys)
        assert len(keys) == len(set(keys))

    def test_family_tags_valid(self):
        for c in enumerate_catalog(CatalogQuery(q=4)):
            assert c.family and all(t in FAMILY_TAGS for t in c.family)

    def test_non_prime_power_rejected(self):
        with pytest.raises(NotPrimePower):
            enumerate_catalog(CatalogQuery(q=6))

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_length_bound(self, q):
        for c in enumerate_catalog(CatalogQuery(q=q)):
            assert c.params.n <= length_bound(q)

    @pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
    def test_case6_exclusivity(self, q):
        certs = enumerate_catalog(CatalogQuery(q=q, n=q + 1, j=1, dx_min=2))
        if q in (4, 8):
            assert {(c.params.dz, c.params.dx) for c in certs} == {(max(3, q - 1), min(3, q - 1))}
        else:
            assert certs == []

    def test_unordered_distance_filters(self):
        a = enumerate_catalog(CatalogQuery(q=5, dz=4, dx=2))
        b = enumerate_catalog(CatalogQuery(q=5, dz=2, dx=4))
        assert [certificate_to_dict(c) for c in a] == [certificate_to_dict(c) for c in b]
        assert a  # [[5,1,4/2]] and relatives exist


class TestExists:
    def test_th11_tuple_q8(self):
        r = exists(8, 10, 4, 4, 4)
        assert r.exists and r.certificate is not None
        assert "TH11" in r.certificate.family
        assert r.certificate.verified

    def test_odd_q_length_bound(self):
        r = exists(5, 7, 1, 3, 3)
        assert not r.exists
        assert r.reason == "length exceeds q+1 for odd q"

    def test_j1_at_q_plus_1_needs_cor10_shape(self):
        r = exists(4, 5, 1, 4, 2)
        assert not r.exists
        assert "{dz,dx}={3,q-1}" in r.reason

    def test_non_prime_power(self):
        r = exists(6, 5, 1, 3, 3)
        assert not r.exists and "prime power" in r.reason

    def test_unordered_query(self):
        assert exists(16, 17, 1, 15, 3).exists
        assert exists(16, 17, 1, 3, 15).exists

    def test_positive_matches_enumeration(self):
        for q in (3, 4, 5):
            admitted = th14_expansion.expand(q)
            for n in range(2, length_bound(q) + 1):
                for dz in range(1, n + 1):
                    for dx in range(1, dz + 1):
                        j = n - dz - dx + 2
                        if j < 0:
                            continue
                        r = exists(q, n, j, dz, dx, verify_level="closed_form")
                        assert r.exists == ((n, j, dz, dx) in admitted), (q, n, j, dz, dx)


class TestCertificates:
    def test_schema_keys_and_order(self):
        cert = exists(5, 5, 1, 3, 3).certificate
        d = certificate_to_dict(cert)
        assert list(d) == ["q", "n", "j", "dz", "dx", "pure", "aqmds",
                           "family", "recipe", "verified", "oracle_log"]

    def test_json_round_trip(self):
        cert = exists(4, 6, 0, 4, 4).certificate
        d = json.loads(json.dumps(certificate_to_dict(cert)))
        back = certificate_from_dict(d)
        assert certificate_to_dict(back) == certificate_to_dict(cert)

    def test_recipe_rebuilds_pair(self):
        cert = exists(5, 5, 1, 3, 3).certificate
        pair = build_pair_from_recipe(cert.recipe)
        p = css_construct(pair)
        assert (p.n, p.k, p.dz, p.dx) == (5, 1, 3, 3)

    def test_malformed_recipe(self):
        with pytest.raises(RecipeInvalid):
            build_pair_from_recipe({"q": 5, "construction": "NOPE"})
        with pytest.raises(RecipeInvalid):
            build_pair_from_recipe({"q": 5})

    def test_determinism_bytes(self):
        a = certificates_to_json(enumerate_catalog(CatalogQuery(q=5)))
        b = certificates_to_json(enumerate_catalog(CatalogQuery(q=5)))
        assert a == b

    def test_cap_skips_are_marked_not_passed(self):
        cert = exists(8, 10, 4, 4, 4).certificate
        _, log = run_oracles(
            cert.params, build_pair_from_recipe(cert.recipe), "full_oracle", cap=100)
        assert any(entry.endswith("skipped(cap)") for entry in log)
        assert not any("distance" in entry and entry.endswith("pass") for entry in log)


class TestVerify:
    def test_round_trip(self):
        cert = exists(5, 5, 1, 3, 3).certificate
        refreshed = verify(cert)
        assert refreshed.verified
        assert "purity:pass" in refreshed.oracle_log
        # idempotent
        again = verify(refreshed)
        assert again.oracle_log == refreshed.oracle_log

    def test_tampered_dz_detected(self):
        cert = exists(5, 5, 1, 3, 3).certificate
        d = certificate_to_dict(cert)
        d["dz"] += 1
        with pytest.raises(VerificationFailed) as exc:
            verify(certificate_from_dict(d))
        assert "singleton_equality" in str(exc.value)

    def test_prop6_certificate_gf3(self):
        cert = exists(3, 4, 0, 3, 3).certificate
        refreshed = verify(cert)
        assert refreshed.verified
        assert "PROP6" in cert.family

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_full_oracle_soundness(self, q):
        # every emitted certificate passes all oracles that fit the cap;
        # capped enumerations appear as skipped entries, never as passes
        for cert in enumerate_catalog(CatalogQuery(q=q, verify_level="full_oracle")):
            assert cert.verified, certificate_to_dict(cert)
            assert not any(e.endswith("FAIL") for e in cert.oracle_log)
