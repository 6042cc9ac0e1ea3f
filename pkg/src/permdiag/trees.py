"""Stromy, slova stěnových operátorů a projekce P -> J -> K.

Stěna P_N odpovídá stromu s úrovněmi (PLT) s N+1 listy; zapomenutím úrovní vzniká
planární kořenový strom (PRT), tedy stěna asociaedru K_{N+1}. Multiplihedron J_N leží
mezi nimi: úrovně pod úrovní obsahující značku 1 a nad ní se chovají jako v K.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Literal

from permdiag.core import (
    Chain,
    OrderedPartition,
    TensorChain,
    enumerate_faces,
    face_boundary,
    top_cell,
)
from permdiag.diagonal import diagonal_face, diagonal_top
from permdiag.errors import FaceWordError, PartitionError

logger = logging.getLogger(__name__)

Target = Literal["J", "K"]
Method = Literal["projection", "direct"]
WordPair = tuple[int, int]
Level = tuple[WordPair, ...]

SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
BULLET = "•"


# --- Slova stěnových operátorů ---


@dataclass(frozen=True, order=True)
class FaceWord:
    """Složení d_{(i,ℓ)} po úrovních; levels[0] je nejvnitřnější úroveň."""

    size: int  # počet prvků N (strom má N+1 listů)
    levels: tuple[Level, ...]

    def __post_init__(self) -> None:
        _walk(self)

    def __str__(self) -> str:
        return render_faceword(self)


def _walk(word: FaceWord) -> list[list[int]]:
    """Vrátí bloky rozkladu po úrovních a ověří tvar slova."""
    if word.size < 1:
        raise FaceWordError(f"Velikost slova musí být kladná, ne {word.size}")
    current = list(range(1, word.size + 1))
    blocks: list[list[int]] = []
    for depth, level in enumerate(word.levels, start=1):
        if not level:
            raise FaceWordError(f"Prázdná úroveň {depth}")
        taken: list[int] = []
        for index, (i, ell) in enumerate(level):
            if ell < 1 or i < 0:
                raise FaceWordError(f"Neplatná dvojice ({i},{ell}) na úrovni {depth}")
            if index + 1 < len(level) and i + ell + 1 > level[index + 1][0]:
                raise FaceWordError(f"Dvojice na úrovni {depth} se překrývají nebo dotýkají")
            if i + ell > len(current):
                raise FaceWordError(f"Dvojice ({i},{ell}) přesahuje {len(current)} prvků")
            taken.extend(current[i : i + ell])
        if len(taken) >= len(current):
            raise FaceWordError(f"Úroveň {depth} pohlcuje všechny prvky")
        blocks.append(taken)
        current = [x for x in current if x not in taken]
    blocks.append(current)
    return blocks


def partition_to_faceword(u: OrderedPartition) -> FaceWord:
    """Maximální úseky bloku mezi zbylými prvky se stanou dvojicemi (i, ℓ)."""
    current = list(range(1, u.ground_size + 1))
    levels: list[Level] = []
    for block in u.blocks[:-1]:
        members = set(block)
        positions = [k for k, x in enumerate(current) if x in members]
        pairs: list[WordPair] = []
        start = prev = positions[0]
        for k in positions[1:]:
            if k != prev + 1:
                pairs.append((start, prev - start + 1))
                start = k
            prev = k
        pairs.append((start, prev - start + 1))
        levels.append(tuple(pairs))
        current = [x for x in current if x not in members]
    return FaceWord(size=u.ground_size, levels=tuple(levels))


def faceword_to_partition(word: FaceWord) -> OrderedPartition:
    return OrderedPartition.from_blocks(_walk(word))


_PAIR = re.compile(r"\((\d+),(\d+)\)")


def parse_faceword(text: str, size: int) -> FaceWord:
    """Načte slovo ve tvaru "d(0,1)d(1,1)(4,2)" (nejvnitřnější úroveň vpravo)."""
    cleaned = text.replace(" ", "")
    if cleaned in ("", "1"):
        return FaceWord(size=size, levels=())
    if not cleaned.startswith("d"):
        raise FaceWordError(f"Slovo musí začínat 'd': {text!r}")
    levels: list[Level] = []
    for chunk in cleaned[1:].split("d"):
        pairs = tuple((int(i), int(ell)) for i, ell in _PAIR.findall(chunk))
        if not pairs or _PAIR.sub("", chunk):
            raise FaceWordError(f"Chybná úroveň {chunk!r} ve slově {text!r}")
        levels.append(pairs)
    return FaceWord(size=size, levels=tuple(reversed(levels)))


def render_faceword(word: FaceWord, latex: bool = False) -> str:
    """Text "d(0,1)d(1,1)(4,2)" nebo LaTeX "d_{(0,1)}d_{(1,1)(4,2)}"; prázdné slovo je "1"."""
    if not word.levels:
        return "1"
    parts = []
    for level in reversed(word.levels):
        pairs = "".join(f"({i},{ell})" for i, ell in level)
        parts.append(f"d_{{{pairs}}}" if latex else f"d{pairs}")
    return "".join(parts)


def faceword_to_json(word: FaceWord) -> dict[str, Any]:
    return {"size": word.size, "levels": [[list(pair) for pair in lvl] for lvl in word.levels]}


def faceword_from_json(data: Mapping[str, Any]) -> FaceWord:
    try:
        levels = tuple(tuple((int(i), int(ell)) for i, ell in lvl) for lvl in data["levels"])
        return FaceWord(size=int(data["size"]), levels=levels)
    except (KeyError, TypeError, ValueError) as e:
        raise FaceWordError(f"Neplatný JSON slova: {data!r}") from e


# --- Stromy ---


@dataclass(frozen=True, order=True)
class PlanarTree:
    """Planární kořenový strom; list nemá potomky."""

    children: tuple[PlanarTree, ...] = ()

    def is_leaf(self) -> bool:
        return not self.children

    @property
    def leaves(self) -> int:
        return 1 if self.is_leaf() else sum(child.leaves for child in self.children)

    @property
    def dim(self) -> int:
        """Dimenze stěny asociaedru: Σ (arita - 2) přes vnitřní uzly."""
        if self.is_leaf():
            return 0
        return len(self.children) - 2 + sum(child.dim for child in self.children)

    def __str__(self) -> str:
        if self.is_leaf():
            return BULLET
        return "(" + "".join(str(child) for child in self.children) + ")"


LEAF = PlanarTree()


def _group(word: FaceWord) -> Iterator[tuple[int, int, int]]:
    """Dvojice (úroveň, i, ℓ) v pořadí zpracování: úrovně zevnitř, dvojice zprava."""
    for depth, level in enumerate(word.levels, start=1):
        for i, ell in reversed(level):
            yield depth, i, ell


def faceword_to_tree(word: FaceWord) -> PlanarTree:
    items: list[PlanarTree] = [LEAF] * (word.size + 1)
    for _, i, ell in _group(word):
        items[i : i + ell + 1] = [PlanarTree(tuple(items[i : i + ell + 1]))]
    return PlanarTree(tuple(items))


def partition_to_tree(u: OrderedPartition) -> PlanarTree:
    """Tonksova projekce θ na úrovni stromů."""
    return faceword_to_tree(partition_to_faceword(u))


def render_parenthesization(u: OrderedPartition) -> str:
    """Uzávorkování s indexy úrovní, např. ((•(••)₁)₂•(•••)₁)."""
    word = partition_to_faceword(u)
    items = [BULLET] * (u.ground_size + 1)
    for depth, i, ell in _group(word):
        group = "".join(items[i : i + ell + 1])
        items[i : i + ell + 1] = [f"({group}){str(depth).translate(SUBSCRIPTS)}"]
    return "(" + "".join(items) + ")"


Span = tuple[int, int]


def _internal_nodes(
    tree: PlanarTree, start: int, out: list[tuple[Span, tuple[Span, ...]]]
) -> Span:
    """Rozsahy listů vnitřních uzlů (kořen je poslední)."""
    if tree.is_leaf():
        return start, start
    children: list[Span] = []
    position = start
    for child in tree.children:
        span = _internal_nodes(child, position, out)
        children.append(span)
        position = span[1] + 1
    span = (start, position - 1)
    out.append((span, tuple(children)))
    return span


def canonical_faceword(tree: PlanarTree) -> FaceWord:
    """Slovo s jednou dvojicí na úroveň: vždy nejlevější uzel s hotovými potomky."""
    if tree.is_leaf():
        raise FaceWordError("List není stěna asociaedru")
    nodes: list[tuple[Span, tuple[Span, ...]]] = []
    _internal_nodes(tree, 0, nodes)
    pending = dict(nodes[:-1])
    items: list[Span] = [(k, k) for k in range(tree.leaves)]
    levels: list[Level] = []
    while pending:
        span = min(s for s, kids in pending.items() if all(k in items for k in kids))
        kids = pending.pop(span)
        i = items.index(kids[0])
        levels.append(((i, len(kids) - 1),))
        items[i : i + len(kids)] = [span]
    return FaceWord(size=tree.leaves - 1, levels=tuple(levels))


@lru_cache(maxsize=None)
def tree_representative(tree: PlanarTree) -> OrderedPartition:
    """Nedegenerovaný rozklad kanonického slova stromu."""
    return faceword_to_partition(canonical_faceword(tree))


def catalan(n: int) -> int:
    result = 1
    for k in range(n):
        result = result * 2 * (2 * k + 1) // (k + 2)
    return result


# --- Degenerace ---


def is_degenerate(u: OrderedPartition, target: Target) -> bool:
    """Degenerace podle výjimečných bloků.

    Blok A_j (j < p) je výjimečný, pokud obkračuje prvek pozdějšího bloku.
    K: některý blok je výjimečný. J: výjimečný je některý blok bez značky 1.
    """
    for j, block in enumerate(u.blocks[:-1]):
        later = [x for b in u.blocks[j + 1 :] for x in b]
        if not any(block[0] < x < block[-1] for x in later):
            continue
        if target == "K" or 1 not in block:
            return True
    return False


def _marked_level(word: FaceWord) -> int | None:
    """Index úrovně, která odebírá značku 1 (první úroveň s i_1 = 0)."""
    return next((k for k, level in enumerate(word.levels) if level[0][0] == 0), None)


def is_degenerate_word(word: FaceWord, target: Target) -> bool:
    """Degenerace podle slova: úroveň s více dvojicemi (pro J mimo úroveň se značkou 1)."""
    marked = _marked_level(word) if target == "J" else None
    return any(len(level) > 1 and k != marked for k, level in enumerate(word.levels))


def image_dim(u: OrderedPartition, target: Target) -> int:
    """Dimenze buňky K nebo J, na kterou se stěna zobrazí.

    Každá dvojice slova je vnitřní vrchol stromu. V J tvoří dvojice úrovně se
    značkou 1 jediný obarvený řez, takže přispívají jen jednou.
    """
    word = partition_to_faceword(u)
    codim = sum(len(level) for level in word.levels)
    marked = _marked_level(word) if target == "J" else None
    if marked is not None:
        codim -= len(word.levels[marked]) - 1
    return u.ground_size - 1 - codim


# --- Multiplihedron ---


@dataclass(frozen=True, order=True)
class JClass:
    """Stěna J_n daná nejmenším nedegenerovaným rozkladem svého vlákna."""

    representative: OrderedPartition

    @property
    def dim(self) -> int:
        return self.representative.dim

    def __str__(self) -> str:
        return f"[{self.representative}]"


Cell = PlanarTree | JClass
JKey = tuple[PlanarTree, frozenset[int], frozenset[int]]


def j_key(u: OrderedPartition) -> JKey:
    """(strom, značky pod úrovní se značkou 1, blok úrovně se značkou 1)."""
    level = next(k for k, block in enumerate(u.blocks) if 1 in block)
    below = frozenset(x for block in u.blocks[:level] for x in block)
    return partition_to_tree(u), below, frozenset(u.blocks[level])


@lru_cache(maxsize=None)
def _fiber_index(n: int, target: Target) -> dict[Any, tuple[OrderedPartition, ...]]:
    index: dict[Any, list[OrderedPartition]] = {}
    for u in enumerate_faces(n):
        key = partition_to_tree(u) if target == "K" else j_key(u)
        index.setdefault(key, []).append(u)
    logger.debug("P_%d -> %s: %d buněk", n, target, len(index))
    return {key: tuple(members) for key, members in index.items()}


@lru_cache(maxsize=None)
def _j_classes(n: int) -> dict[JKey, JClass]:
    classes: dict[JKey, JClass] = {}
    for key, members in _fiber_index(n, "J").items():
        regular = [u for u in members if not is_degenerate(u, "J")]
        if not regular:
            logger.warning("Vlákno %s nemá nedegenerovaného člena", members[0])
        classes[key] = JClass(min(regular or members))
    return classes


def fibers(n: int, target: Target) -> list[list[OrderedPartition]]:
    """Rozklad všech stěn P_n na vlákna projekce θ (K) nebo π (J)."""
    if n < 1:
        raise PartitionError(f"n musí být kladné, ne {n}")
    return sorted(sorted(members) for members in _fiber_index(n, target).values())


@dataclass(frozen=True)
class Projection:
    """Obraz stěny; degenerate znamená pokles dimenze, sign je orientace vůči buňce."""

    cell: Cell
    degenerate: bool
    sign: int = 1


def _image_cell(u: OrderedPartition, target: Target) -> Cell:
    if target == "K":
        return partition_to_tree(u)
    return _j_classes(u.ground_size)[j_key(u)]


@lru_cache(maxsize=None)
def orientation(u: OrderedPartition, target: Target) -> int:
    """Znaménko ±1, se kterým nedegenerovaná stěna pokrývá svou buňku.

    Buňka je orientovaná svým reprezentantem. Ostatní členové vlákna dostanou
    znaménko z porovnání obrazů hranic, vrcholy mají vždy +1.

    Raises:
        PartitionError: Pokud je stěna degenerovaná nebo se obrazy hranic neliší jen znaménkem
    """
    if is_degenerate(u, target):
        raise PartitionError(f"Stěna {u} je pro {target} degenerovaná")
    representative = cell_representative(_image_cell(u, target))
    if u == representative or u.is_vertex():
        return 1
    mine = pushforward(face_boundary(u), target)
    theirs = pushforward(face_boundary(representative), target)
    if mine == theirs:
        return 1
    if mine == -theirs:
        return -1
    raise PartitionError(f"Hranice {u} a {representative} mají v {target} různé obrazy")


def project(u: OrderedPartition, target: Target) -> Projection:
    cell = _image_cell(u, target)
    if is_degenerate(u, target):
        return Projection(cell=cell, degenerate=True, sign=0)
    return Projection(cell=cell, degenerate=False, sign=orientation(u, target))


def j_to_k(cell: JClass) -> Projection:
    """Identifikace J -> K: buňka klesne, je-li strom menší dimenze než buňka J."""
    representative = cell.representative
    tree = partition_to_tree(representative)
    if tree.dim < cell.dim:
        return Projection(cell=tree, degenerate=True, sign=0)
    return Projection(cell=tree, degenerate=False, sign=orientation(representative, "K"))


# --- Řetězce na J a K ---


def pushforward(chain: Chain[OrderedPartition], target: Target) -> Chain[Cell]:
    """θ_* nebo π_*: degenerované stěny jdou na nulu, ostatní se svou orientací."""
    terms: list[tuple[Cell, int]] = []
    for u, coef in chain:
        image = project(u, target)
        if not image.degenerate:
            terms.append((image.cell, image.sign * coef))
    return Chain.from_terms(terms)


def pushforward_tensor(t: TensorChain, target: Target) -> Chain[tuple[Cell, Cell]]:
    terms: list[tuple[tuple[Cell, Cell], int]] = []
    for (u, v), coef in t:
        left, right = project(u, target), project(v, target)
        if not (left.degenerate or right.degenerate):
            terms.append(((left.cell, right.cell), left.sign * right.sign * coef))
    return Chain.from_terms(terms)


def cell_representative(cell: Cell) -> OrderedPartition:
    """Nedegenerovaná stěna P, která se na buňku zobrazí."""
    if isinstance(cell, JClass):
        return cell.representative
    return tree_representative(cell)


def target_of(cell: Cell) -> Target:
    return "J" if isinstance(cell, JClass) else "K"


def cell_boundary(cell: Cell) -> Chain[Cell]:
    return pushforward(face_boundary(cell_representative(cell)), target_of(cell))


def cell_diagonal(cell: Cell) -> Chain[tuple[Cell, Cell]]:
    return pushforward_tensor(diagonal_face(cell_representative(cell)), target_of(cell))


def cells_boundary(chain: Chain[Cell]) -> Chain[Cell]:
    return chain.apply(cell_boundary)


def cells_diagonal(chain: Chain[Cell]) -> Chain[tuple[Cell, Cell]]:
    return chain.apply(cell_diagonal)


def cells_tensor_boundary(t: Chain[tuple[Cell, Cell]]) -> Chain[tuple[Cell, Cell]]:
    """(∂⊗1 + 1⊗∂) na buňkách J nebo K."""

    def on_pair(pair: tuple[Cell, Cell]) -> Chain[tuple[Cell, Cell]]:
        u, v = pair
        sign = -1 if u.dim % 2 else 1
        terms = [((du, v), c) for du, c in cell_boundary(u)]
        terms += [((u, dv), sign * c) for dv, c in cell_boundary(v)]
        return Chain.from_terms(terms)

    return t.apply(on_pair)


def top_of(n: int, target: Target) -> Cell:
    """Vrchní buňka K_{n+2} nebo J_{n+1}."""
    return project(top_cell(n + 1), target).cell


def boundary_projected(n: int, target: Target) -> Chain[Cell]:
    """Obraz ∂ vrchní buňky P_{n+1} v K_{n+2} nebo J_{n+1}."""
    if n < 1:
        raise PartitionError(f"n musí být alespoň 1, ne {n}")
    return pushforward(face_boundary(top_cell(n + 1)), target)


def diagonal_multi(n: int) -> Chain[tuple[Cell, Cell]]:
    """Δ_J = (π_*⊗π_*)Δ_P na vrchní buňce J_{n+1}."""
    return pushforward_tensor(diagonal_top(n), "J")


def multi_to_assoc(t: Chain[tuple[Cell, Cell]]) -> Chain[tuple[Cell, Cell]]:
    """Posune tenzorový řetězec z J do K; K-degenerované členy vypadnou."""
    terms: list[tuple[tuple[Cell, Cell], int]] = []
    for (u, v), coef in t:
        if not (isinstance(u, JClass) and isinstance(v, JClass)):
            raise PartitionError(f"Člen ({u}, {v}) neleží v J")
        left, right = j_to_k(u), j_to_k(v)
        if not (left.degenerate or right.degenerate):
            terms.append(((left.cell, right.cell), left.sign * right.sign * coef))
    return Chain.from_terms(terms)


# --- Δ_K přímo ze soustavy nerovností ---


def _right_words(n: int, count: int) -> Iterator[list[WordPair]]:
    """Dvojice (i'_j, ℓ'_j) pro pravý faktor.

    1 ≤ i'_j < i'_{j-1} ≤ n+1 a 1 ≤ ℓ'_j ≤ n+1-i'_j-ℓ'_(j-1).
    """

    def extend(prefix: list[WordPair], prev: int, used: int) -> Iterator[list[WordPair]]:
        if len(prefix) == count:
            yield prefix
            return
        for i in range(1, prev):
            for ell in range(1, n + 2 - i - used):
                yield from extend([*prefix, (i, ell)], i, used + ell)

    yield from extend([], n + 1, 0)


def _left_words(n: int, p: int, right: Sequence[WordPair]) -> Iterator[list[WordPair]]:
    """Dvojice (i_k, ℓ_k) vynucené nerovnostmi (3) a rovností (4)."""
    q = len(right) + 1
    ip = [n + 1, *(i for i, _ in right), 0]
    lp = [0]
    for _, ell in right:
        lp.append(lp[-1] + ell)
    lp.append(n + 1)
    eps = [0, *sorted(set(range(1, n + 1)) - set(ip[1:q]))]

    def o(u: int) -> int:
        return max(r for r in range(q) if ip[r] >= eps[u])

    def t(u: int) -> int:
        ou = o(u)
        for r in range(1, q + 1):
            if ip[r] + lp[r] - lp[ou] > eps[u] > ip[r]:
                return r
        return q

    def o_prime(u: int) -> int:
        return max(r for r in range(p) if eps[r] <= ip[u])

    def extend(prefix: list[WordPair], lsum: list[int]) -> Iterator[list[WordPair]]:
        k = len(prefix) + 1
        if k == p:
            yield prefix
            return
        tk = t(k)
        ok = o_prime(tk)
        bound = min([prefix[r - 1][0] for r in range(ok + 1, k)] + [ip[tk] - lsum[ok]])
        for i in range(0, bound + 1):
            ell = eps[k] - i - lsum[k - 1]
            if ell >= 1:
                yield from extend([*prefix, (i, ell)], [*lsum, lsum[-1] + ell])

    yield from extend([], [0])


def _direct_sign(left: Sequence[WordPair], right: Sequence[WordPair]) -> int:
    q = len(right) + 1
    exponent = sum(i * (ell + 1) for i, ell in left)
    exponent += sum((i + k + q) * ell for k, (i, ell) in enumerate(right, start=1))
    return -1 if exponent % 2 else 1


def _single_pair_word(size: int, pairs: Sequence[WordPair]) -> FaceWord:
    return FaceWord(size=size, levels=tuple((pair,) for pair in pairs))


def diagonal_assoc_direct(n: int) -> Chain[tuple[Cell, Cell]]:
    """Δ_K(e^n) jako součet přes všechna řešení soustavy nerovností."""
    terms: list[tuple[tuple[Cell, Cell], int]] = []
    for p in range(1, n + 2):
        q = n + 2 - p
        for right in _right_words(n, q - 1):
            for left in _left_words(n, p, right):
                first = project(faceword_to_partition(_single_pair_word(n + 1, left)), "K")
                second = project(faceword_to_partition(_single_pair_word(n + 1, right)), "K")
                sign = _direct_sign(left, right) * first.sign * second.sign
                terms.append(((first.cell, second.cell), sign))
    return Chain.from_terms(terms)


def diagonal_assoc(n: int, method: Method = "projection") -> Chain[tuple[Cell, Cell]]:
    """Δ_K(e^n) na K_{n+2}, buď projekcí Δ_P, nebo přímo ze soustavy nerovností."""
    if n < 0:
        raise PartitionError(f"n musí být nezáporné, ne {n}")
    if method == "direct":
        return diagonal_assoc_direct(n)
    return pushforward_tensor(diagonal_top(n), "K")


# --- Výstup ---


def render_cell(cell: Cell, latex: bool = False) -> str:
    """Buňka K jako kanonické slovo, buňka J jako reprezentant."""
    if isinstance(cell, JClass):
        return str(cell)
    return render_faceword(canonical_faceword(cell), latex=latex)
