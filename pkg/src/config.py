from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from .errors import ConfigError

MIN_PRECISION = 4
FORMATS = ("text", "json")


def _as_bool(value: str | None, default: bool = False) -> bool:
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


def _as_int(name: str, default: int, minimum: int | None = None) -> int:
    raw = _optional(name, str(default))
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got '{raw}'") from exc
    if minimum is not None and value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def _optional(name: str, default: str = "") -> str:
    return os.getenv(name, default).strip()


@dataclass(frozen=True)
class AppConfig:
    precision: int
    output_format: str
    log_dir: Path | None
    log_level: str
    max_word_length: int
    show_notes: bool


def load_config() -> AppConfig:
    load_dotenv(override=False)

    output_format = _optional("QDR_FORMAT", "text").lower()
    if output_format not in FORMATS:
        raise ConfigError(f"QDR_FORMAT must be one of {', '.join(FORMATS)}, got '{output_format}'")

    log_dir = _optional("QDR_LOG_DIR")
    return AppConfig(
        precision=_as_int("QDR_PREC", 12, minimum=MIN_PRECISION),
        output_format=output_format,
        log_dir=Path(log_dir) if log_dir else None,
        log_level=_optional("QDR_LOG_LEVEL", "WARNING").upper(),
        max_word_length=_as_int("QDR_MAX_WORD_LENGTH", 4, minimum=0),
        show_notes=_as_bool(os.getenv("QDR_SHOW_NOTES"), default=True),
    )
