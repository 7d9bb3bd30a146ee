"""Claim registry, verification engine, claim files, and reports."""

import json
import re

import pytest

from qseries.claims import (
    Claim,
    ClaimKind,
    parse_claim_file,
    registry,
    registry_by_id,
    reports_to_csv,
    reports_to_json,
    verify,
)
from qseries.expr import parse_expr

EXPECTED_DEFECTS = {
    "thm5.1", "thm5.2", "thm5.3", "eq5.3", "thm5.4", "thm5.5", "eq6.3",
}


class TestRegistry:
    def test_size_and_uniqueness(self):
        claims = registry()
        assert len(claims) >= 30
        ids = [c.id for c in claims]
        assert len(ids) == len(set(ids))

    def test_citations_present(self):
        assert all(c.cite for c in registry())

    def test_expected_ids_present(self):
        table = registry_by_id()
        for cid in ("thm3.1", "thm3.3i", "remark3.6", "eq3.2", "lemma2.4a",
                    "thm3.3ii.p5", "thm5.6", "thm6.4"):
            assert cid in table

    def test_every_kind_represented(self):
        kinds = {c.kind for c in registry()}
        assert kinds == set(ClaimKind)

    def test_defective_claims_are_annotated(self):
        table = registry_by_id()
        for cid in EXPECTED_DEFECTS:
            assert table[cid].notes, cid


class TestVerify:
    def test_identity_pass(self):
        r = verify(registry_by_id()["thm3.1"])
        assert r.status == "pass"
        assert r.order >= 500
        assert r.first_failure is None

    def test_congruence_pass(self):
        r = verify(registry_by_id()["thm3.3i"])
        assert r.status == "pass"

    def test_mu_mod4_pass(self):
        r = verify(registry_by_id()["remark3.6"])
        assert r.status == "pass"

    def test_engineered_counterexample(self):
        claim = Claim(
            "bad.identity", ClaimKind.IDENTITY,
            lhs=parse_expr("l(1)"), rhs=parse_expr("l(1) + q^7"), order=50,
        )
        r = verify(claim)
        assert r.status == "fail"
        assert r.first_failure["n"] == 7

    def test_non_qualifying_family_is_skipped(self):
        claim = Claim(
            "skip.family", ClaimKind.CONGRUENCE_FAMILY,
            family="thm3.3iii", p=11, alpha=0, count=2,
        )
        r = verify(claim)
        assert r.status == "skipped"
        assert "11" in r.message

    def test_oversized_request_is_skipped(self):
        claim = Claim(
            "huge.congruence", ClaimKind.CONGRUENCE,
            expr=parse_expr("mock(v)"), A=10**6, B=1, M=2, count=100,
        )
        r = verify(claim)
        assert r.status == "skipped"

    def test_count_override(self):
        claim = registry_by_id()["thm3.3i"]
        r = verify(claim, count=5)
        assert r.status == "pass"
        assert r.order < 120

    def test_order_override(self):
        r = verify(registry_by_id()["thm3.1"], order=60)
        assert r.status == "pass" and 60 <= r.order < 120

    def test_documented_defects_fail_where_recorded(self):
        table = registry_by_id()
        failures = {
            "thm5.1": 0, "thm5.3": 0, "eq5.3": 0, "thm5.4": 0,
            "thm5.5": 0, "eq6.3": 0,
        }
        for cid, first_n in failures.items():
            r = verify(table[cid])
            assert r.status == "fail", cid
            assert r.first_failure["n"] == first_n, cid
        r = verify(table["thm5.2"])
        assert r.status == "fail"
        assert r.first_failure["n"] == 1

    def test_corrected_variants_pass(self):
        table = registry_by_id()
        for cid in ("thm5.1.corrected", "thm5.3.corrected", "eq5.3.corrected",
                    "thm5.4.corrected", "thm5.5.corrected", "eq6.3.corrected"):
            assert verify(table[cid]).status == "pass", cid

    def test_recurrence_routes_agree(self):
        table = registry_by_id()
        for cid in ("thm3.4", "thm3.5", "thm4.4", "thm5.6", "thm6.2", "thm6.3", "thm6.4"):
            claim = table[cid]
            lv = claim.direct_lhs(60)
            rv = claim.direct_rhs(60)
            assert lv == rv, cid
            series = verify(claim)
            assert series.status == "pass", cid

    def test_report_determinism(self):
        claim = registry_by_id()["eq2.5.psi"]
        a = verify(claim).to_dict()
        b = verify(claim).to_dict()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        assert a == b


CLAIM_FILE = """
# two user claims
[claim]
id=user.psi.square
type=identity
lhs=psi(q)^2
rhs=l(2)^4/l(1)^2
order=120
cite=square of the psi product form

[claim]
id=user.parity
type=congruence
expr=l(1) - l(2)  # trailing comment
A=1
B=0
M=2
count=60
"""


class TestClaimFiles:
    def test_parse_and_verify(self):
        claims = parse_claim_file(CLAIM_FILE)
        assert [c.id for c in claims] == ["user.psi.square", "user.parity"]
        assert verify(claims[0]).status == "pass"
        # l_1 and l_2 differ mod 2 (the congruence is l_1^2 = l_2)
        assert verify(claims[1]).status == "fail"

    def test_family_record(self):
        claims = parse_claim_file(
            "[claim]\nid=f\ntype=congruence-family\nfamily=thm4.3\np=5\nalpha=0\ncount=3\n"
        )
        assert verify(claims[0]).status == "pass"

    def test_interpretation_record(self):
        claims = parse_claim_file(
            "[claim]\nid=i\ntype=interpretation\nmock=v\nruleset=thm3.2\n"
            "A=2\nB=1\nbound=10\norder=40\n"
        )
        assert verify(claims[0]).status == "pass"

    def test_unknown_field_rejected(self):
        with pytest.raises(ValueError, match="unknown field"):
            parse_claim_file("[claim]\nid=x\ntype=identity\nfoo=1\n")

    def test_unknown_type_rejected(self):
        with pytest.raises(ValueError, match="unknown claim type"):
            parse_claim_file("[claim]\nid=x\ntype=conjecture\n")

    def test_field_outside_record(self):
        with pytest.raises(ValueError, match="outside"):
            parse_claim_file("id=x\n")

    def test_missing_required_field(self):
        with pytest.raises(ValueError, match="missing"):
            parse_claim_file("[claim]\nid=x\ntype=congruence\nexpr=l(1)\n")


class TestReports:
    def test_json_schema(self):
        reports = [verify(registry_by_id()["eq2.6.fneg"])]
        data = json.loads(reports_to_json(reports))
        assert set(data[0]) == {
            "id", "status", "order", "first_failure", "message", "elapsed_ms",
        }

    def test_json_stable_modulo_elapsed(self):
        claim = registry_by_id()["eq2.6.fneg"]
        scrub = lambda text: re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', text)
        a = scrub(reports_to_json([verify(claim)]))
        b = scrub(reports_to_json([verify(claim)]))
        assert a == b

    def test_csv_columns(self):
        text = reports_to_csv([verify(registry_by_id()["eq2.6.fneg"])])
        header, row = text.strip().splitlines()
        assert header == "id,status,order,first_n,elapsed_ms"
        assert row.startswith("eq2.6.fneg,pass,")
