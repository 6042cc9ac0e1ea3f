"""Výjimky knihovny permdiag."""


class PermdiagError(ValueError):
    """Základní chyba všech doménových operací."""


class PartitionError(PermdiagError):
    """Neplatný rozklad nebo chybné použití stěnového operátoru."""


class MatrixError(PermdiagError):
    """Neplatná uspořádaná, kroková nebo konfigurační matice."""


class FaceWordError(PermdiagError):
    """Chybně utvořené slovo stěnových operátorů."""


class RelationError(PermdiagError):
    """Nesplněná podmínka v kalkulu permutaedrických množin."""


class ModelError(PermdiagError):
    """Nekonzistentní rozměry v číselném modelu."""
