import pytest

from sns2.config import DEFAULT_WITNESS_BUDGET, Settings

VARIABLES = ("SNS2_JOBS", "SNS2_WITNESS_BUDGET", "SNS2_SEED", "SNS2_LOG_LEVEL", "LOGGER_LEVEL")


@pytest.fixture()
def clean_env(monkeypatch):
    # setenv first so that teardown removes whatever an env file adds.
    for name in VARIABLES:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return monkeypatch


def test_defaults(clean_env):
    settings = Settings.from_env()
    assert settings == Settings()
    assert settings.jobs is None
    assert settings.witness_budget == DEFAULT_WITNESS_BUDGET
    assert settings.log_level == "WARNING"


def test_from_env(clean_env):
    clean_env.setenv("SNS2_JOBS", "4")
    clean_env.setenv("SNS2_WITNESS_BUDGET", "250")
    clean_env.setenv("SNS2_SEED", "17")
    clean_env.setenv("SNS2_LOG_LEVEL", "debug")
    assert Settings.from_env() == Settings(jobs=4, witness_budget=250, seed=17, log_level="DEBUG")


def test_logger_level_fallback(clean_env):
    clean_env.setenv("LOGGER_LEVEL", "info")
    assert Settings.from_env().log_level == "INFO"


def test_env_file(clean_env, tmp_path):
    path = tmp_path / ".env"
    path.write_text("SNS2_SEED=5\nSNS2_JOBS=0\n")
    settings = Settings.from_env(path_to_envfile=path)
    assert settings.seed == 5
    assert settings.jobs is None


def test_resolve_jobs():
    assert Settings().resolve_jobs(None) == 1
    assert Settings().resolve_jobs(3) == 3
    assert Settings().resolve_jobs(0) == 1
    assert Settings(jobs=2).resolve_jobs(8) == 2
