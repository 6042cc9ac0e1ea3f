"""Uspořádané, krokové a konfigurační matice.

Indexy (i, j) jsou od 1, řádek 1 je nahoře. Sloupcová stěna c(O) čte sloupce zleva
doprava, řádková stěna r(O) čte řádky zdola nahoru.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Any, Literal

from rich.table import Table

from permdiag.core import OrderedPartition, partition_signs, shuffle_sign
from permdiag.errors import MatrixError

logger = logging.getLogger(__name__)

ShiftKind = Literal["down", "right"]
SHIFT_KINDS: tuple[ShiftKind, ...] = ("right", "down")
Moves = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class OrderedMatrix:
    """Uspořádaná matice q×p; nuly jsou prázdná políčka."""

    entries: tuple[tuple[int, ...], ...]  # řádky shora dolů

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise MatrixError("Matice nesmí být prázdná")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise MatrixError("Řádky matice mají různou délku")
        values = sorted(x for row in self.entries for x in row if x)
        if values != list(range(1, self.q + self.p)):
            raise MatrixError(f"Nenulové prvky nejsou přesně 1..{self.q + self.p - 1}")
        for line in (*self.rows(), *self.columns()):
            if not line:
                raise MatrixError("Každý řádek i sloupec musí obsahovat nenulový prvek")
            if any(a >= b for a, b in zip(line, line[1:])):
                raise MatrixError(f"Prvky {line} nejsou rostoucí")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> OrderedMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def q(self) -> int:
        return len(self.entries)

    @property
    def p(self) -> int:
        return len(self.entries[0])

    def at(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        """Nenulové prvky řádku i zleva doprava."""
        return tuple(x for x in self.entries[i - 1] if x)

    def column(self, j: int) -> tuple[int, ...]:
        """Nenulové prvky sloupce j shora dolů."""
        return tuple(row[j - 1] for row in self.entries if row[j - 1])

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(1, self.q + 1)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(1, self.p + 1)]

    def position(self, x: int) -> tuple[int, int]:
        """Pozice (i, j) prvku x."""
        for i, row in enumerate(self.entries, start=1):
            if x in row:
                return i, row.index(x) + 1
        raise MatrixError(f"Prvek {x} v matici není")

    def moved(self, x: int, i: int, j: int) -> OrderedMatrix:
        """Matice s prvkem x přesunutým na pozici (i, j)."""
        grid = [list(row) for row in self.entries]
        si, sj = self.position(x)
        grid[si - 1][sj - 1] = 0
        grid[i - 1][j - 1] = x
        return OrderedMatrix.from_rows(grid)


@dataclass(frozen=True)
class Derivation:
    """Odvození F = D_{N_{q-1}}...D_{N_1} R_{M_{p-1}}...R_{M_1} E."""

    base: OrderedMatrix  # kroková matice E
    right_moves: Moves  # M_j pro sloupce j = 1..p-1
    down_moves: Moves  # N_i pro řádky i = 1..q-1


@dataclass(frozen=True)
class Configuration:
    """Konfigurační matice s odvozením a znaménkem csgn."""

    matrix: OrderedMatrix
    derivation: Derivation
    sign: int


# --- Krokové matice ---


def _check_permutation(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise MatrixError(f"{tuple(sigma)} není permutace 1..{len(sigma)}")


def step_from_permutation(sigma: Sequence[int]) -> OrderedMatrix:
    """Kroková matice E_σ: x_1 vlevo dole, vzestup doprava, sestup nahoru."""
    _check_permutation(sigma)
    cells: list[tuple[int, int]] = [(0, 0)]
    for prev, cur in zip(sigma, sigma[1:]):
        r, c = cells[-1]
        cells.append((r, c + 1) if cur > prev else (r + 1, c))
    q = cells[-1][0] + 1
    p = cells[-1][1] + 1
    grid = [[0] * p for _ in range(q)]
    for (up, c), x in zip(cells, sigma):
        grid[q - 1 - up][c] = x
    return OrderedMatrix.from_rows(grid)


def permutation_from_step(matrix: OrderedMatrix) -> tuple[int, ...]:
    """Přečte permutaci ze schodů krokové matice.

    Raises:
        MatrixError: Pokud matice není kroková
    """
    i, j = matrix.q, 1
    total = matrix.p + matrix.q - 1
    sigma: list[int] = []
    while True:
        x = matrix.at(i, j)
        if not x:
            raise MatrixError("Matice není kroková")
        sigma.append(x)
        if len(sigma) == total:
            break
        if j < matrix.p and matrix.at(i, j + 1):
            j += 1
        elif i > 1:
            i -= 1
        else:
            raise MatrixError("Matice není kroková")
    if step_from_permutation(sigma) != matrix:
        raise MatrixError("Matice není kroková")
    return tuple(sigma)


def is_step_matrix(matrix: OrderedMatrix) -> bool:
    try:
        permutation_from_step(matrix)
    except MatrixError:
        return False
    return True


def faces_of_matrix(matrix: OrderedMatrix) -> tuple[OrderedPartition, OrderedPartition]:
    """Vrátí (c(O), r(O)): sloupce zleva doprava, řádky zdola nahoru."""
    column_face = OrderedPartition(tuple(matrix.columns()))
    row_face = OrderedPartition(tuple(reversed(matrix.rows())))
    return column_face, row_face


def transpose(matrix: OrderedMatrix) -> OrderedMatrix:
    return OrderedMatrix(tuple(zip(*matrix.entries)))


# --- Posuny ---


def shift(matrix: OrderedMatrix, kind: ShiftKind, i: int, j: int) -> OrderedMatrix | None:
    """Posun D_{i,j} (kind="down") nebo R_{i,j} (kind="right").

    Returns:
        Posunutá matice, nebo None pokud operátor nepůsobí
    """
    if not (1 <= i <= matrix.q and 1 <= j <= matrix.p):
        raise MatrixError(f"Pozice ({i}, {j}) mimo matici {matrix.q}×{matrix.p}")
    x = matrix.at(i, j)
    if not x:
        return None
    if kind == "down":
        if i == matrix.q or matrix.at(i + 1, j) or len(matrix.row(i)) < 2:
            return None
        below = matrix.entries[i]
        if any(y and x < y for y in below[: j - 1]):
            return None
        if any(y and y < x for y in below[j:]):
            return None
        return matrix.moved(x, i + 1, j)
    if j == matrix.p or matrix.at(i, j + 1) or len(matrix.column(j)) < 2:
        return None
    right = [row[j] for row in matrix.entries]
    if any(y and x < y for y in right[: i - 1]):
        return None
    if any(y and y < x for y in right[i:]):
        return None
    return matrix.moved(x, i, j + 1)


def shift_element(matrix: OrderedMatrix, kind: ShiftKind, x: int) -> OrderedMatrix | None:
    """Posune prvek x dolů nebo doprava."""
    i, j = matrix.position(x)
    return shift(matrix, kind, i, j)


def csgn_shift_update(matrix: OrderedMatrix, kind: ShiftKind, i: int, j: int) -> int:
    """Poměr csgn(posun F)·csgn(F) z počtu prvků v intervalech.

    Pro D_{i,j}: -(-1)^{#((x, V'_{i+1}] ∪ [V_i, x))}, pro R_{i,j} analogicky se sloupci.
    """
    image = shift(matrix, kind, i, j)
    if image is None:
        raise MatrixError(f"Posun {kind} na ({i}, {j}) nepůsobí")
    x = matrix.at(i, j)
    if kind == "down":
        larger, smaller = image.row(i + 1), matrix.row(i)
    else:
        larger, smaller = matrix.column(j), image.column(j + 1)
    count = sum(1 for y in larger if y > x) + sum(1 for y in smaller if y < x)
    return -((-1) ** (count % 2))


# --- Odvození a znaménko ---


def _apply_batch(
    matrix: OrderedMatrix, kind: ShiftKind, batch: Sequence[int]
) -> OrderedMatrix | None:
    """Posune prvky dávky v rostoucím pořadí; None pokud některý posun nepůsobí."""
    current = matrix
    for x in sorted(batch):
        shifted = shift_element(current, kind, x)
        if shifted is None:
            return None
        current = shifted
    return current


def derive(derivation: Derivation) -> OrderedMatrix:
    """Přehraje posuny odvození na krokové matici."""
    current: OrderedMatrix | None = derivation.base
    for batch in derivation.right_moves:
        current = _apply_batch(current, "right", batch) if current is not None else None
    for batch in derivation.down_moves:
        current = _apply_batch(current, "down", batch) if current is not None else None
    if current is None:
        raise MatrixError("Některý posun v odvození nepůsobí")
    return current


def csgn(matrix: OrderedMatrix, derivation: Derivation) -> int:
    """Konfigurační znaménko csgn(F).

    csgn(F) = (-1)^{C(q,2)}·rsgn(c(E))·sgn1(r(F))·sgn2(c(E))·sgn2(c(F))
    """
    if derive(derivation) != matrix:
        raise MatrixError("Odvození nevede na zadanou matici")
    column_e, _ = faces_of_matrix(derivation.base)
    column_f, row_f = faces_of_matrix(matrix)
    signs_e = partition_signs(column_e)
    return (
        (-1) ** (comb(matrix.q, 2) % 2)
        * signs_e.rsgn
        * partition_signs(row_f).sgn1
        * signs_e.sgn2
        * partition_signs(column_f).sgn2
    )


# --- Výčet konfigurací ---


def _batches(
    matrix: OrderedMatrix, kind: ShiftKind, index: int
) -> Iterator[tuple[OrderedMatrix, list[tuple[int, ...]]]]:
    """Všechny přípustné dávky od sloupce (řádku) index dál."""
    last = matrix.p if kind == "right" else matrix.q
    if index >= last:
        yield matrix, []
        return
    if kind == "right":
        line, following = matrix.column(index), matrix.column(index + 1)
    else:
        line, following = matrix.row(index), matrix.row(index + 1)
    candidates = [x for x in line if x > max(following)]
    for size in range(0, min(len(candidates), len(line) - 1) + 1):
        for chosen in combinations(candidates, size):
            current = _apply_batch(matrix, kind, chosen)
            if current is None:
                continue
            for result, rest in _batches(current, kind, index + 1):
                yield result, [chosen, *rest]


def configurations_from_step(base: OrderedMatrix) -> Iterator[tuple[OrderedMatrix, Derivation]]:
    """Kanonická odvození: nejdřív posuny doprava po sloupcích, pak dolů po řádcích."""
    for shifted, right in _batches(base, "right", 1):
        for final, down in _batches(shifted, "down", 1):
            yield final, Derivation(base=base, right_moves=tuple(right), down_moves=tuple(down))


def enumerate_configurations(n: int) -> list[Configuration]:
    """Všechny konfigurační matice nad {1..n+1} se znaménky.

    Raises:
        MatrixError: Pokud dvě odvození téže matice dávají různé csgn
    """
    if n < 0:
        raise MatrixError(f"n musí být nezáporné, ne {n}")
    found: dict[OrderedMatrix, Configuration] = {}
    for sigma in permutations(range(1, n + 2)):
        base = step_from_permutation(sigma)
        for matrix, derivation in configurations_from_step(base):
            sign = csgn(matrix, derivation)
            known = found.get(matrix)
            if known is None:
                found[matrix] = Configuration(matrix, derivation, sign)
            elif known.sign != sign:
                raise MatrixError(f"Nekonzistentní csgn pro matici {matrix.entries}")
    logger.debug("n=%d: %d konfiguračních matic", n, len(found))
    return sorted(found.values(), key=lambda c: (c.matrix.q, c.matrix.p, c.matrix.entries))


def passes_batch_rule(matrix: OrderedMatrix, kind: ShiftKind, i: int, j: int) -> bool:
    """Posouvaný prvek musí být větší než všechny prvky cílového řádku (sloupce)."""
    following = matrix.row(i + 1) if kind == "down" else matrix.column(j + 1)
    return not following or matrix.at(i, j) > max(following)


def enumerate_configurations_bruteforce(n: int) -> set[OrderedMatrix]:
    """Uzávěr přes jednotlivé posuny: R po neklesajících sloupcích, potom D po řádcích.

    Každý posun musí splnit pravidlo dávky min N_i > max V_{i+1} (pro R se sloupci).
    """
    result: set[OrderedMatrix] = set()
    for sigma in permutations(range(1, n + 2)):
        start: tuple[OrderedMatrix, ShiftKind, int] = (step_from_permutation(sigma), "right", 1)
        stack = [start]
        seen = {start}
        while stack:
            matrix, phase, index = stack.pop()
            result.add(matrix)
            for i in range(1, matrix.q + 1):
                for j in range(1, matrix.p + 1):
                    moves: list[tuple[ShiftKind, int]] = []
                    if phase == "right" and j >= index:
                        moves.append(("right", j))
                    if phase == "right" or i >= index:
                        moves.append(("down", i))
                    for kind, line in moves:
                        image = shift(matrix, kind, i, j)
                        if image is None or not passes_batch_rule(matrix, kind, i, j):
                            continue
                        state = (image, kind, line)
                        if state not in seen:
                            seen.add(state)
                            stack.append(state)
    return result


# --- Hranové matice ---


def enumerate_edge_matrices(m: int) -> list[OrderedMatrix]:
    """Krokové matice nad {1..m} s prvkem 1 v levém horním rohu."""
    return sorted(
        matrix
        for sigma in permutations(range(1, m + 1))
        if (matrix := step_from_permutation(sigma)).at(1, 1) == 1
    )


def edge_sign(matrix: OrderedMatrix) -> int:
    """shuff(b_2..b_q; a_2..a_p) pro hranovou matici."""
    if matrix.at(1, 1) != 1 or not is_step_matrix(matrix):
        raise MatrixError("Matice není hranová")
    return shuffle_sign(matrix.column(1)[1:], matrix.row(1)[1:])


# --- Výstup ---


def matrix_to_json(matrix: OrderedMatrix) -> dict[str, Any]:
    return {"q": matrix.q, "p": matrix.p, "rows": [list(row) for row in matrix.entries]}


def matrix_from_json(data: Mapping[str, Any]) -> OrderedMatrix:
    try:
        matrix = OrderedMatrix.from_rows(data["rows"])
    except (KeyError, TypeError) as e:
        raise MatrixError(f"Neplatný JSON matice: {data!r}") from e
    if (data.get("q", matrix.q), data.get("p", matrix.p)) != (matrix.q, matrix.p):
        raise MatrixError("Rozměry q, p neodpovídají řádkům")
    return matrix


def render_matrix(matrix: OrderedMatrix, title: str | None = None) -> Table:
    """Orámovaná tabulka matice."""
    table = Table(title=title, show_header=False, show_lines=True)
    for _ in range(matrix.p):
        table.add_column(justify="center", style="cyan")
    for row in matrix.entries:
        table.add_row(*(str(x) if x else "" for x in row))
    return table
