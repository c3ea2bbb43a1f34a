import json

import numpy as np
import pytest

from liefp import harness, ringio
from liefp.corpus import FamilySpec, affine2, borel, heisenberg, sl2
from liefp.harness import CHECKS, MISMATCH, SuiteConfig, TheoremCheck, Verdict, check_ring, replay, run_check, verify_suite
from liefp.liering import LieRing


def test_insoluble_ring_is_skipped():
    out = run_check(sl2(5), "T1")
    assert out.verdict is Verdict.SKIPPED and out.detail == {"failed_hypothesis": "soluble"}
    assert out.hypotheses == [{"name": "soluble", "holds": False}]


def test_nilpotent_ring_skips_complement_check():
    out = run_check(heisenberg(3), "T2")
    assert out.verdict is Verdict.SKIPPED and out.detail["failed_hypothesis"] == "non-nilpotent"


def test_fitting_check_on_borel():
    out = run_check(borel(2, 5), "T4")
    assert out.verdict is Verdict.PASS
    assert out.detail["fitting"] == [[1, 0, 1], [0, 1, 0]]


def test_cartan_check_on_affine():
    out = run_check(affine2(5), "T1")
    assert out.verdict is Verdict.PASS
    assert out.detail["cartan"] == [[[1, lam]] for lam in range(5)]


def test_complement_check_on_affine():
    out = run_check(affine2(3), "T2")
    assert out.verdict is Verdict.PASS and out.detail["complements"] == 3


def test_invalid_ring_marks_everything_skipped():
    bad = LieRing.from_brackets(5, 3, {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]}, name="broken")
    report = verify_suite([bad])
    ring = report.rings[0]
    assert ring.validation["ok"] is False and ring.validation["where"] == [0, 1, 2]
    assert all(o.verdict is Verdict.SKIPPED for o in ring.outcomes)
    assert report.counts()["INVALID_RINGS"] == 1 and report.exit_status == 1


def test_every_check_reported_for_every_ring():
    report = verify_suite([FamilySpec("affine2", 1, 3), FamilySpec("sl2", 3, 3), heisenberg(2)])
    for ring in report.rings:
        assert [o.check for o in ring.outcomes] == list(CHECKS)
    assert sum(report.counts()[v.value] for v in Verdict) == 3 * len(CHECKS)
    assert len(report.lines()) == 3 * len(CHECKS)


def test_report_is_deterministic():
    corpus = [FamilySpec("random_soluble", 3, 5, s) for s in range(3)] + [FamilySpec("borel", 2, 3)]
    a = verify_suite(corpus).dumps()
    b = verify_suite(corpus).dumps()
    assert a == b
    doc = json.loads(a)
    assert doc["exit_status"] == 0 and "elapsed" not in a


def _always_fails(g, cfg):
    return False, {"subring": [[1] + [0] * (g.n - 1)]}, {"reason": "synthetic"}


def test_failure_carries_replayable_witness(monkeypatch):
    monkeypatch.setitem(CHECKS, "TX", TheoremCheck("TX", "synthetic failure", ("soluble",), _always_fails))
    out = run_check(borel(2, 3), "TX")
    assert out.verdict is Verdict.FAIL
    doc = out.to_document()
    assert doc["classification"] == MISMATCH
    stored = json.loads(json.dumps(doc["witness"]))
    assert ringio.from_document(stored["ring"]) == borel(2, 3)
    again = replay(stored, "TX")
    assert again.verdict is Verdict.FAIL and again.witness == out.witness
    report = verify_suite([borel(2, 3)], checks=["TX"])
    assert report.exit_status == 1


def test_tiny_guard_reports_guard_exceeded():
    cfg = SuiteConfig(subspace_guard=3)
    out = run_check(borel(2, 5), "T1", cfg)
    assert out.verdict is Verdict.GUARD_EXCEEDED
    assert out.detail["guard"] == 3 and out.detail["count"] > 3
    report = verify_suite([borel(2, 5)], cfg, checks=["T1", "T7"])
    assert report.exit_status == 3


def test_config_rejects_nonpositive_guard():
    with pytest.raises(ValueError):
        SuiteConfig(subspace_guard=0)


def test_load_corpus_dir(tmp_path):
    with pytest.raises(ringio.RingFormatError):
        harness.load_corpus_dir(tmp_path)
    ringio.dump(heisenberg(3), tmp_path / "b.json")
    ringio.dump(affine2(3), tmp_path / "a.json")
    rings = harness.load_corpus_dir(tmp_path)
    assert [g.name for g in rings] == ["affine2(3)", "heisenberg(3)"]


def test_all_checks_pass_on_small_corpus():
    report = verify_suite(harness.default_corpus((3, 5), max_dim=2))
    assert report.counts()["FAIL"] == 0 and report.exit_status == 0
    assert report.counts()["PASS"] > 0


def test_check_ring_subset():
    r = check_ring(affine2(5), checks=["T4", "T6"])
    assert [o.verdict for o in r.outcomes] == [Verdict.PASS, Verdict.PASS]
    assert np.array_equal(r.outcomes[0].detail["fitting"], [[0, 1]])
