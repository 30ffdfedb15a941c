from tuttemaps import verify
from tuttemaps.corpus import corpus, named_map
from tuttemaps.verify import ALL_OPS, CHECKS, verify_all, verify_corpus


def test_corpus_passes_with_full_coverage():
    report = verify_corpus(corpus(), seed=42)
    assert report.ok, [(r.map, r.check, r.witness) for r in report.failures()][:3]
    assert report.uncovered() == []
    assert set(report.census) >= {"k3", "torus6"}
    skips = {(r.map, r.check) for r in report.records if r.status == "skip"}
    assert all(check == "duality" for _, check in skips)
    assert ("torus6", "duality") in skips


def test_k5_torus_runs_selected_checks():
    report = verify_all(named_map("k5_torus"), "k5_torus", only={"map_invariants", "tutte_expansions", "duality"})
    statuses = {r.check: r.status for r in report.records}
    assert statuses == {"map_invariants": "pass", "tutte_expansions": "pass", "duality": "skip"}


def test_crashing_check_becomes_failure(monkeypatch):
    def boom(m):
        raise ValueError("broken")

    monkeypatch.setattr(verify, "CHECKS", [("boom", ("build_map",), boom)])
    report = verify_all(named_map("k3"), "k3")
    assert not report.ok
    assert report.failures()[0].witness == "ValueError: broken"


def test_registry_covers_every_operation():
    declared = {op for _, ops, _ in CHECKS for op in ops}
    assert declared == set(ALL_OPS)
