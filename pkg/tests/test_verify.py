import json
import random

from umbra import verify
from umbra.polys import UniPoly
from umbra.verify import SUITE_NAMES, Settings, letter_poly, run_suite


def test_failures_carry_a_counterexample(monkeypatch):
    real = verify.project_pi
    monkeypatch.setattr(verify, "project_pi", lambda p: real(p) + UniPoly([1]) if p.grade == 3 else real(p))
    report = run_suite("binomial", Settings(species="Lin", n=4))
    assert not report.passed
    failed = [c for c in report.checks if c.status == "fail"]
    assert failed and failed[0].detail["n"] == 3
    data = report.to_json()
    json.dumps(data)
    assert data["passed"] is False


def test_reports_are_deterministic():
    cfg = Settings(degree=3, seed=5)
    assert run_suite("taylor", cfg).to_json() == run_suite("taylor", cfg).to_json()


def test_all_runs_every_suite_at_tiny_size():
    report = run_suite("all", Settings(degree=2))
    assert report.passed
    assert set(report.by_criterion()) == set(range(1, 12))
    assert set(SUITE_NAMES) >= {"binomial", "hopf", "all"}


def test_letter_poly_reads_table_rows():
    assert letter_poly("ab+ac+bc") == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert letter_poly("2ab+a^2") == {(1, 1, 0): 2, (2, 0, 0): 1}


def test_samplers_respect_degree():
    rng = random.Random(3)
    p = verify.random_symfunc(rng, 4, 5, homogeneous=False)
    assert all(sum(lam) <= 4 for lam, _ in p.items())
    q = verify.random_symfunc(rng, 4, 5, homogeneous=True)
    assert q.is_homogeneous()
