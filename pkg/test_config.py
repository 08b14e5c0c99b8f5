"""Configuration loading from environment variables."""

import pytest
from pydantic import ValidationError as PydanticValidationError

from src.config import Config, load_config

JSPEC_VARIABLES = [
    "HOST", "PORT", "DEBUG", "JSPEC_SEED", "JSPEC_MAX_WINDOW", "JSPEC_WINDOW_M", "JSPEC_WINDOW_N",
    "JSPEC_RANDOM_DATA_COUNT", "JSPEC_RANDOM_PAIR_COUNT", "JSPEC_SPECTRUM_P_MAX",
]


@pytest.fixture
def clean_env(monkeypatch):
    for name in JSPEC_VARIABLES:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_defaults(clean_env):
    settings = load_config()
    assert settings.SEED == 20100101
    assert (settings.WINDOW_M, settings.WINDOW_N) == (2, 2)
    assert settings.MAX_WINDOW == 4
    assert settings.RANDOM_DATA_COUNT == 50
    assert settings.RANDOM_PAIR_COUNT == 20
    assert settings.SPECTRUM_P_MAX == 2
    assert settings.DEBUG is False


def test_environment_overrides(clean_env):
    clean_env.setenv("JSPEC_SEED", "7")
    clean_env.setenv("JSPEC_WINDOW_M", "3")
    clean_env.setenv("DEBUG", "true")
    settings = load_config()
    assert settings.SEED == 7
    assert settings.WINDOW_M == 3
    assert settings.DEBUG is True


def test_window_above_max_is_rejected():
    with pytest.raises(PydanticValidationError):
        Config(MAX_WINDOW=3, WINDOW_M=4)


def test_negative_counts_are_rejected():
    with pytest.raises(PydanticValidationError):
        Config(RANDOM_DATA_COUNT=-1)
