from preopt.config import Settings, get_settings


def test_settings_fields():
    assert set(Settings.model_fields) == {"budget", "log_level", "default_seed", "default_iters"}


def test_settings_read_the_environment(monkeypatch):
    monkeypatch.setenv("PREOPT_BUDGET", "42")
    monkeypatch.setenv("PREOPT_SEED", "7")
    monkeypatch.setenv("PREOPT_ITERS", "3")
    settings = get_settings()
    assert settings.budget == 42
    assert settings.default_seed == 7
    assert settings.default_iters == 3


def test_explicit_budget_wins(monkeypatch):
    monkeypatch.setenv("PREOPT_BUDGET", "42")
    assert get_settings().resolve_budget() == 42
    assert get_settings().resolve_budget(5) == 5
