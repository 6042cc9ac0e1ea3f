"""Konfigurace a nastavení logování."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from rich.logging import RichHandler

from permdiag.errors import PermdiagError

# Výchozí horní mez pro n (enumerace rostou superexponenciálně)
DEFAULT_N_CAP = 8

N_CAP_ENV = "PERMDIAG_N_CAP"


@dataclass
class Settings:
    """Nastavení běhu CLI."""

    n_cap: int  # maximální povolené n
    verbose: bool = False


def get_default_n_cap() -> int:
    """Vrátí výchozí horní mez pro n.

    Pořadí:
    1. PERMDIAG_N_CAP env proměnná
    2. DEFAULT_N_CAP
    """
    raw = os.environ.get(N_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_N_CAP
    try:
        value = int(raw)
    except ValueError as e:
        raise PermdiagError(f"{N_CAP_ENV} musí být celé číslo, ne {raw!r}") from e
    if value < 1:
        raise PermdiagError(f"{N_CAP_ENV} musí být kladné")
    return value


def check_n(n: int, settings: Settings) -> None:
    """Ověří, že n nepřekračuje nastavenou mez."""
    if n < 0:
        raise PermdiagError(f"n musí být nezáporné, ne {n}")
    if n > settings.n_cap:
        raise PermdiagError(
            f"n={n} překračuje mez {settings.n_cap} (zvyšte pomocí --n-cap)"
        )


def setup_logging(verbose: bool = False) -> None:
    """Nastaví logování přes RichHandler."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False)],
        force=True,
    )
