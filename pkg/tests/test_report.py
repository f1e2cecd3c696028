import json

import pytest

from hopfinv import run_report, render_report
from hopfinv.report import ALL_SECTIONS


def test_full_reports_are_clean(corpus):
    for name, C in corpus.items():
        doc = run_report(C)
        assert doc["alarms"] == [], name
        assert set(doc["sections"]) == set(ALL_SECTIONS)


def test_report_bytes_are_deterministic(corpus):
    C = corpus["fix_g2"]
    assert render_report(run_report(C)) == render_report(run_report(C))


def test_report_is_valid_canonical_json(corpus):
    text = render_report(run_report(corpus["fix_sw"]))
    doc = json.loads(text)
    assert text == json.dumps(doc, sort_keys=True, separators=(",", ":"),
                              ensure_ascii=False) + "\n"
    assert doc["dim_hopf"] == 4


def test_section_selection(corpus):
    C = corpus["fix_g2"]
    doc = run_report(C, selections=["invariants", "galois"])
    assert set(doc["sections"]) == {"invariants", "galois"}
    assert doc["sections"]["galois"]["galois"] is True
    with pytest.raises(ValueError, match="unknown report sections"):
        run_report(C, selections=["nonesuch"])


def test_report_pinned_section_values(corpus):
    doc = run_report(corpus["fix_g2"])
    s = doc["sections"]
    assert s["invariants"]["dim"] == 1
    assert s["radical"]["h_reduced"] is True
    assert s["radical"]["h_simple"] is True
    assert s["galois"]["galois"] is True
    assert s["integral"]["has_total"] is True
    assert s["integral"]["trace_retraction"] is True
    assert s["reductivity"]["certificate"] == "a"
    assert s["freebasis"]["ranks"] == [2]
    assert s["correspondence"]["ok"] is True

    doc = run_report(corpus["fix_der"])
    s = doc["sections"]
    assert s["reductivity"]["certificate"] == "b"
    assert s["galois"]["galois"] is True

    doc = run_report(corpus["fix_trivial_nilp"])
    s = doc["sections"]
    assert s["radical"]["h_reduced"] is False
    # the module-freeness sections step aside rather than guess
    assert s["freebasis"] == {"skipped": "not H-reduced"}
    assert s["correspondence"] == {"skipped": "not H-reduced"}
    assert doc["alarms"] == []


def test_report_fiber_section_counts(corpus):
    doc = run_report(corpus["fix_ga"], selections=["fiber"])
    rows = doc["sections"]["fiber"]
    assert len(rows) == 1
    assert rows[0]["size"] == 3 and rows[0]["routes_agree"] is True
