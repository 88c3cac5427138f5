#!/usr/bin/env python3
"""
Tests for settings and the error hierarchy
"""

import pytest

from affweyl.config import Settings, load_settings
from affweyl.errors import (AffWeylError, BoxExceeded, DomainError, InternalInconsistency, MalformedSpec,
                            NotDominant, ParseError, UnknownLemma, UnknownVerb, UsageError)

ENV_NAMES = ["AFFWEYL_MAX_BOX", "AFFWEYL_PARABOLIC_CAP", "AFFWEYL_BRUHAT_CACHE", "AFFWEYL_JOBS",
             "AFFWEYL_DEFAULT_DATUM", "AFFWEYL_OUTPUT_DIR"]


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for name in ENV_NAMES:
        monkeypatch.delenv(name, raising=False)
    # keep a stray .env in the working directory out of the way
    monkeypatch.chdir(tmp_path)
    return monkeypatch


def test_defaults(clean_env, tmp_path):
    settings = load_settings(str(tmp_path / "missing.env"))
    assert settings == Settings()
    assert settings.max_box == 4
    assert settings.jobs == 1
    assert settings.default_datum == "GL2"


def test_environment_overrides(clean_env, tmp_path):
    clean_env.setenv("AFFWEYL_MAX_BOX", "6")
    clean_env.setenv("AFFWEYL_JOBS", "3")
    clean_env.setenv("AFFWEYL_DEFAULT_DATUM", "PGL3")
    clean_env.setenv("AFFWEYL_OUTPUT_DIR", str(tmp_path))
    settings = load_settings(str(tmp_path / "missing.env"))
    assert settings.max_box == 6
    assert settings.jobs == 3
    assert settings.default_datum == "PGL3"
    assert settings.output_dir == str(tmp_path)


def test_blank_value_falls_back(clean_env, tmp_path):
    clean_env.setenv("AFFWEYL_JOBS", " ")
    assert load_settings(str(tmp_path / "missing.env")).jobs == 1


@pytest.mark.parametrize("value", ["many", "0", "-2", "1.5"])
def test_bad_integers(clean_env, tmp_path, value):
    clean_env.setenv("AFFWEYL_MAX_BOX", value)
    with pytest.raises(UsageError):
        load_settings(str(tmp_path / "missing.env"))


def test_env_file(clean_env, tmp_path):
    env_file = tmp_path / "affweyl.env"
    env_file.write_text("AFFWEYL_MAX_BOX=5\nAFFWEYL_PARABOLIC_CAP=100\n")
    # load_dotenv writes into os.environ; register the names so monkeypatch removes them afterwards
    clean_env.setenv("AFFWEYL_MAX_BOX", "")
    clean_env.setenv("AFFWEYL_PARABOLIC_CAP", "")
    clean_env.delenv("AFFWEYL_MAX_BOX")
    clean_env.delenv("AFFWEYL_PARABOLIC_CAP")
    settings = load_settings(str(env_file))
    assert settings.max_box == 5
    assert settings.parabolic_cap == 100


def test_environment_wins_over_env_file(clean_env, tmp_path):
    env_file = tmp_path / "affweyl.env"
    env_file.write_text("AFFWEYL_JOBS=7\n")
    clean_env.setenv("AFFWEYL_JOBS", "2")
    assert load_settings(str(env_file)).jobs == 2


@pytest.mark.parametrize("error,base", [
    (NotDominant, DomainError),
    (BoxExceeded, DomainError),
    (ParseError, UsageError),
    (MalformedSpec, UsageError),
    (UnknownVerb, UsageError),
    (UnknownLemma, UsageError),
])
def test_error_hierarchy(error, base):
    assert issubclass(error, base)
    assert issubclass(error, AffWeylError)
    assert not issubclass(error, DomainError if base is UsageError else UsageError)


def test_internal_inconsistency_is_neither_domain_nor_usage():
    assert issubclass(InternalInconsistency, AffWeylError)
    assert issubclass(InternalInconsistency, ArithmeticError)
    assert not issubclass(InternalInconsistency, (DomainError, UsageError))
