from __future__ import annotations

from pathlib import Path

import pytest

from src.config import load_config
from src.errors import AlgebraError, ConfigError

ENV_KEYS = ("QDR_PREC", "QDR_FORMAT", "QDR_LOG_DIR", "QDR_LOG_LEVEL", "QDR_MAX_WORD_LENGTH", "QDR_SHOW_NOTES")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch) -> None:
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults() -> None:
    config = load_config()
    assert config.precision == 12
    assert config.output_format == "text"
    assert config.log_dir is None
    assert config.log_level == "WARNING"
    assert config.max_word_length == 4
    assert config.show_notes is True


def test_environment_overrides(monkeypatch) -> None:
    monkeypatch.setenv("QDR_PREC", "20")
    monkeypatch.setenv("QDR_FORMAT", "JSON")
    monkeypatch.setenv("QDR_LOG_DIR", "runs")
    monkeypatch.setenv("QDR_LOG_LEVEL", "info")
    monkeypatch.setenv("QDR_SHOW_NOTES", "no")
    config = load_config()
    assert config.precision == 20
    assert config.output_format == "json"
    assert config.log_dir == Path("runs")
    assert config.log_level == "INFO"
    assert config.show_notes is False


@pytest.mark.parametrize(
    ("key", "raw", "fragment"),
    [
        ("QDR_PREC", "twelve", "must be an integer"),
        ("QDR_PREC", "3", "must be >= 4"),
        ("QDR_FORMAT", "xml", "must be one of text, json"),
        ("QDR_MAX_WORD_LENGTH", "-1", "must be >= 0"),
    ],
)
def test_invalid_values(monkeypatch, key: str, raw: str, fragment: str) -> None:
    monkeypatch.setenv(key, raw)
    with pytest.raises(ConfigError) as excinfo:
        load_config()
    assert fragment in str(excinfo.value)


def test_config_errors_share_the_library_root(monkeypatch) -> None:
    monkeypatch.setenv("QDR_FORMAT", "xml")
    with pytest.raises(AlgebraError):
        load_config()
