"""Testy pro konfiguraci."""

import logging

import pytest

from permdiag.config import (
    DEFAULT_N_CAP,
    N_CAP_ENV,
    Settings,
    check_n,
    get_default_n_cap,
    setup_logging,
)
from permdiag.errors import PermdiagError


def test_default_n_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test výchozí meze bez env proměnné."""
    monkeypatch.delenv(N_CAP_ENV, raising=False)
    assert get_default_n_cap() == DEFAULT_N_CAP == 8


def test_n_cap_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test načtení meze z env proměnné."""
    monkeypatch.setenv(N_CAP_ENV, "5")
    assert get_default_n_cap() == 5


@pytest.mark.parametrize("value", ["abc", "0", "-3"])
def test_n_cap_invalid_env(monkeypatch: pytest.MonkeyPatch, value: str) -> None:
    """Test neplatné hodnoty env proměnné."""
    monkeypatch.setenv(N_CAP_ENV, value)
    with pytest.raises(PermdiagError):
        get_default_n_cap()


def test_check_n() -> None:
    """Test kontroly rozsahu n."""
    settings = Settings(n_cap=4)
    check_n(4, settings)
    with pytest.raises(PermdiagError, match="--n-cap"):
        check_n(5, settings)
    with pytest.raises(PermdiagError):
        check_n(-1, settings)


def test_errors_are_value_errors() -> None:
    """Test, že doménové chyby dědí z ValueError."""
    with pytest.raises(ValueError):
        check_n(-1, Settings(n_cap=4))


def test_setup_logging() -> None:
    """Test nastavení úrovně logování."""
    setup_logging(verbose=True)
    assert logging.getLogger().level == logging.DEBUG
    setup_logging(verbose=False)
    assert logging.getLogger().level == logging.WARNING
