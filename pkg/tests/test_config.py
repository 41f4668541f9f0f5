import pytest

from affine_fc import config
from affine_fc.errors import ConfigError


def test_defaults_when_unset(monkeypatch):
    monkeypatch.delenv("AFFINE_FC_TRACE_CAP", raising=False)
    assert config.trace_cap() == 1_000_000


def test_blank_value_falls_back_to_default(monkeypatch):
    monkeypatch.setenv("AFFINE_FC_EXPRESSION_GUARD", "  ")
    assert config.expression_guard() == 12


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("AFFINE_FC_ELEMENT_BUDGET", "42")
    assert config.element_budget() == 42


@pytest.mark.parametrize("raw", ["many", "-3", "1.5"])
def test_bad_values(monkeypatch, raw):
    monkeypatch.setenv("AFFINE_FC_SEED", raw)
    with pytest.raises(ConfigError):
        config.default_seed()
