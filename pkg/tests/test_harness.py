import pytest

from affine_fc.errors import UnknownSuite, WrongFamily
from affine_fc.harness import SUITES, SuiteConfig, SuiteReport, print_report, run_suite
from affine_fc.model import Family
from affine_fc.validation_common import CheckFailure

D = Family.AFFINE_D
B = Family.AFFINE_B


@pytest.mark.parametrize(
    "name, cfg",
    [
        ("cfnf-uniqueness", SuiteConfig(D, 2, 6)),
        ("heap-duality", SuiteConfig(B, 2, 5)),
        ("f-statistics", SuiteConfig(D, 2, 6)),
        ("antichain", SuiteConfig(D, 3, 5)),
        ("trace-length", SuiteConfig(B, 2, 5)),
        ("classification-D", SuiteConfig(D, 2, 7)),
        ("classification-B", SuiteConfig(B, 2, 7)),
        ("phi", SuiteConfig(B, 2, 6)),
        ("relations", SuiteConfig(D, 2, 4, seed=3, samples=20)),
        ("loop-census", SuiteConfig(D, 2, 6)),
        ("descents", SuiteConfig(D, 2, 5)),
        ("faithfulness", SuiteConfig(D, 2, 8)),
        ("a-function", SuiteConfig(D, 3, 5)),
        ("confluence", SuiteConfig(D, 2, 5, seed=1, samples=5)),
        ("worked-examples", SuiteConfig()),
    ],
)
def test_suites_pass_at_small_scale(name, cfg):
    report = run_suite(name, cfg)
    assert report.passed, [f.to_dict() for f in report.failures]
    assert report.checked > 0


def test_every_suite_is_covered():
    assert len(SUITES) == 15


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope", SuiteConfig())


def test_suite_checks_family():
    with pytest.raises(WrongFamily):
        run_suite("phi", SuiteConfig(D, 2, 3))
    with pytest.raises(WrongFamily):
        run_suite("a-function", SuiteConfig(B, 2, 3))


def test_seed_comes_from_environment(monkeypatch):
    monkeypatch.setenv("AFFINE_FC_SEED", "17")
    assert SuiteConfig().seed == 17


def test_report_to_dict():
    report = run_suite("antichain", SuiteConfig(D, 2, 3, seed=5))
    data = report.to_dict()
    assert data["suite"] == "antichain"
    assert data["config"] == {"family": "D", "n": 2, "max_length": 3, "seed": 5, "samples": 200}
    assert data["failures"] == []


def test_print_report_passed(capsys):
    print_report(run_suite("antichain", SuiteConfig(D, 2, 2)))
    out = capsys.readouterr().out
    assert "Suite antichain on D~4" in out
    assert "✓ No failures in antichain" in out


def test_print_report_groups_failures(capsys):
    failures = [
        CheckFailure("antichain", "width", "0 1", "expected 2, got 1"),
        CheckFailure("antichain", "width", "3 4", "expected 2, got 1"),
        CheckFailure("antichain", "a-tilde", "e", "expected 0, got 1"),
    ]
    print_report(SuiteReport("antichain", SuiteConfig(), 10, failures))
    out = capsys.readouterr().out
    assert "⚠ Found 3 failure(s) in antichain:" in out
    assert "WIDTH (2):" in out
    assert "A TILDE (1):" in out
    assert "  [0 1]" in out
    assert out.index("A TILDE") < out.index("WIDTH")
    assert failures[0].to_dict() == {"word": "0 1", "detail": "width: expected 2, got 1"}
