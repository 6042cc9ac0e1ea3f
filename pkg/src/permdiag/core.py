"""Uspořádané rozklady jako stěny permutaedru a celulární řetězce."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any, Generic, Literal, TypeVar

from permdiag.errors import PartitionError

logger = logging.getLogger(__name__)

K = TypeVar("K")
L = TypeVar("L")

Side = Literal["left", "right"]
Blocks = tuple[tuple[int, ...], ...]


# --- Znaménka ---


def inversion_sign(seq: Sequence[int]) -> int:
    """Vrátí znaménko permutace dané posloupností (parita inverzí)."""
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def shuffle_sign(first: Iterable[int], second: Iterable[int]) -> int:
    """Znaménko shuff(M; N) = (-1)^{#{(m, n): m > n}}."""
    second_list = list(second)
    count = sum(1 for m in first for n in second_list if m > n)
    return -1 if count % 2 else 1


# --- Uspořádané rozklady ---


@dataclass(frozen=True, order=True)
class OrderedPartition:
    """Stěna permutaedru P_n jako uspořádaný rozklad množiny {1..n}."""

    blocks: Blocks  # bloky U_1|...|U_p, každý rostoucí

    def __post_init__(self) -> None:
        if not self.blocks:
            raise PartitionError("Rozklad musí mít alespoň jeden blok")
        seen: list[int] = []
        for block in self.blocks:
            if not block:
                raise PartitionError("Prázdný blok v rozkladu")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise PartitionError(f"Blok {block} není ostře rostoucí")
            seen.extend(block)
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise PartitionError(
                f"Bloky {self.blocks} nepokrývají {{1..{len(seen)}}} právě jednou"
            )

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> OrderedPartition:
        """Vytvoří rozklad z libovolně seřazených bloků."""
        return cls(tuple(tuple(sorted(block)) for block in blocks))

    @classmethod
    def vertex(cls, permutation: Sequence[int]) -> OrderedPartition:
        """Vrchol u_1|u_2|...|u_n odpovídající permutaci."""
        return cls(tuple((x,) for x in permutation))

    @property
    def ground_size(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def dim(self) -> int:
        """Dimenze stěny: n - p."""
        return self.ground_size - self.num_blocks

    def is_vertex(self) -> bool:
        return self.dim == 0

    def permutation(self) -> tuple[int, ...]:
        """Vrátí permutaci vrcholu (jen pro vrcholy)."""
        if not self.is_vertex():
            raise PartitionError(f"{self} není vrchol")
        return tuple(block[0] for block in self.blocks)

    def flat(self) -> tuple[int, ...]:
        """Zřetězení bloků U_1 ∪ ... ∪ U_p."""
        return tuple(x for block in self.blocks for x in block)

    def __str__(self) -> str:
        return render_partition(self)


def top_cell(n: int) -> OrderedPartition:
    """Vrchní buňka P_n."""
    if n < 1:
        raise PartitionError(f"n musí být kladné, ne {n}")
    return OrderedPartition((tuple(range(1, n + 1)),))


def relabel_blocks(blocks: Iterable[Iterable[int]], labels: Sequence[int]) -> Blocks:
    """Přeznačí prvky i -> labels[i-1] a bloky znovu seřadí."""
    return tuple(tuple(sorted(labels[x - 1] for x in block)) for block in blocks)


def standardize_blocks(blocks: Iterable[Iterable[int]]) -> Blocks:
    """Vynechá prázdné bloky a přeznačí prvky rostoucí bijekcí na {1..k}."""
    kept = [tuple(sorted(block)) for block in blocks if block]
    ranks = {x: i + 1 for i, x in enumerate(sorted(x for b in kept for x in b))}
    return tuple(tuple(ranks[x] for x in block) for block in kept)


def restrict(u: OrderedPartition, subset: Iterable[int]) -> OrderedPartition:
    """Zúží rozklad na podmnožinu a standardizuje značky."""
    keep = set(subset)
    return OrderedPartition(standardize_blocks([x for x in b if x in keep] for b in u.blocks))


# --- Text a JSON ---


def render_partition(u: OrderedPartition, offset: int = 0) -> str:
    """Vykreslí rozklad jako text.

    Args:
        u: Rozklad
        offset: Posun všech značek (pro zobrazení v původních značkách)

    Returns:
        Např. "12|3", nebo "1,10|2,...,9" pokud je některá značka větší než 9
    """
    top = u.ground_size + offset
    sep = "" if top <= 9 else ","
    return "|".join(sep.join(str(x + offset) for x in block) for block in u.blocks)


def parse_partition(text: str) -> OrderedPartition:
    """Načte rozklad z textu ve tvaru "12|3" nebo "1,10|2,3,...".

    Raises:
        PartitionError: Při chybném formátu nebo chybějících/duplicitních prvcích
    """
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise PartitionError("Prázdný rozklad")
    comma_form = "," in cleaned
    blocks: list[list[int]] = []
    for raw in cleaned.split("|"):
        if not raw:
            raise PartitionError(f"Prázdný blok v {text!r}")
        parts = raw.split(",") if comma_form else list(raw)
        if any(not part.isdigit() for part in parts):
            raise PartitionError(f"Neplatný blok {raw!r} v {text!r}")
        blocks.append([int(part) for part in parts])
    elements = [x for block in blocks for x in block]
    if len(set(elements)) != len(elements):
        raise PartitionError(f"Duplicitní prvky v {text!r}")
    if sorted(elements) != list(range(1, len(elements) + 1)):
        raise PartitionError(f"Rozklad {text!r} nepokrývá 1..{len(elements)}")
    return OrderedPartition.from_blocks(blocks)


def partition_to_json(u: OrderedPartition) -> dict[str, Any]:
    """Převede rozklad na JSON objekt."""
    return {"n": u.ground_size, "blocks": [list(block) for block in u.blocks]}


def partition_from_json(data: Mapping[str, Any]) -> OrderedPartition:
    """Načte rozklad z JSON objektu."""
    try:
        u = OrderedPartition.from_blocks(data["blocks"])
    except (KeyError, TypeError) as e:
        raise PartitionError(f"Neplatný JSON rozkladu: {data!r}") from e
    if "n" in data and data["n"] != u.ground_size:
        raise PartitionError(f"Pole n={data['n']} neodpovídá blokům")
    return u


# --- Řetězce ---


def _first(item: tuple[Any, int]) -> Any:
    return item[0]


class Chain(Generic[K]):
    """Z-lineární kombinace buněk; nulové koeficienty se neukládají."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, int] | None = None) -> None:
        self._terms: dict[K, int] = {}
        if terms:
            for key, coef in terms.items():
                if coef:
                    self._terms[key] = coef

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[K, int]]) -> Chain[K]:
        """Sečte dvojice (buňka, koeficient), stejné buňky sloučí."""
        acc: dict[K, int] = {}
        for key, coef in terms:
            acc[key] = acc.get(key, 0) + coef
        return cls(acc)

    @classmethod
    def single(cls, key: K, coef: int = 1) -> Chain[K]:
        return cls({key: coef})

    def items(self) -> list[tuple[K, int]]:
        """Členy seřazené podle buněk."""
        return sorted(self._terms.items(), key=_first)

    def keys(self) -> list[K]:
        return [key for key, _ in self.items()]

    def coefficient(self, key: K) -> int:
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[K, int]]:
        return iter(self.items())

    def __contains__(self, key: object) -> bool:
        return key in self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Chain[K]) -> Chain[K]:
        return Chain.from_terms([*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> Chain[K]:
        return self.scale(-1)

    def __sub__(self, other: Chain[K]) -> Chain[K]:
        return self + (-other)

    def scale(self, factor: int) -> Chain[K]:
        return Chain({key: coef * factor for key, coef in self._terms.items()})

    def mod2(self) -> Chain[K]:
        """Redukce koeficientů modulo 2."""
        return Chain({key: coef % 2 for key, coef in self._terms.items()})

    def apply(self, func: Callable[[K], Chain[L]]) -> Chain[L]:
        """Lineární rozšíření zobrazení definovaného na buňkách."""
        out: list[tuple[L, int]] = []
        for key, coef in self._terms.items():
            out.extend((image, coef * c) for image, c in func(key)._terms.items())
        return Chain.from_terms(out)

    def __repr__(self) -> str:
        return f"Chain({self.items()!r})"


TensorPair = tuple[OrderedPartition, OrderedPartition]
TensorChain = Chain[TensorPair]


def chain_to_json(chain: Chain[OrderedPartition]) -> list[dict[str, Any]]:
    """Řetězec jako pole {"coef", "face"}."""
    return [{"coef": coef, "face": partition_to_json(u)} for u, coef in chain]


def chain_from_json(data: Iterable[Mapping[str, Any]]) -> Chain[OrderedPartition]:
    return Chain.from_terms((partition_from_json(t["face"]), int(t["coef"])) for t in data)


def tensor_chain_to_json(chain: TensorChain) -> list[dict[str, Any]]:
    """Tenzorový řetězec jako pole {"coef", "face": [levý, pravý]}."""
    return [
        {"coef": coef, "face": [partition_to_json(u), partition_to_json(v)]}
        for (u, v), coef in chain
    ]


def tensor_chain_from_json(data: Iterable[Mapping[str, Any]]) -> TensorChain:
    return Chain.from_terms(
        (
            (partition_from_json(t["face"][0]), partition_from_json(t["face"][1])),
            int(t["coef"]),
        )
        for t in data
    )


# --- Stěnové operátory a hranice ---


@dataclass(frozen=True)
class SignedFace:
    """Stěna s koeficientem ±1."""

    coefficient: int
    face: OrderedPartition


@dataclass(frozen=True)
class PartitionSigns:
    """Skalární znaménka rozkladu."""

    psgn: int  # znaménko permutace n -> U_1 ∪ ... ∪ U_p
    rsgn: int  # součin znamének obracejících permutací bloků
    sgn1: int  # pravostranný postup dělení
    sgn2: int  # levostranný postup dělení


def partition_signs(u: OrderedPartition) -> PartitionSigns:
    """Spočítá psgn, rsgn, sgn1 a sgn2."""
    p = u.num_blocks
    sizes = [len(block) for block in u.blocks]
    psgn = inversion_sign(u.flat())
    rsgn = (-1) ** (sum(m * (m - 1) // 2 for m in sizes) % 2)
    # Σ i·#U_{p-i} pro i = 1..p-1
    eps1 = sum(i * sizes[p - i - 1] for i in range(1, p))
    sgn1 = (-1) ** (eps1 % 2) * psgn
    sgn2 = sgn1 * (-1) ** (comb(p - 1, 2) % 2)
    return PartitionSigns(psgn=psgn, rsgn=rsgn, sgn1=sgn1, sgn2=sgn2)


def face(u: OrderedPartition, k: int, subset: Iterable[int], side: Side = "left") -> SignedFace:
    """Stěnový operátor d_M^k (side="left") nebo d_k^N (side="right").

    Args:
        u: Rozklad U_1|...|U_p
        k: Index bloku od 1; pro side="right" se počítá zprava (V_k = U_{p-k+1})
        subset: Vlastní neprázdná podmnožina M (resp. N) bloku
        side: "left" odštěpí M vlevo, "right" odštěpí N vpravo

    Returns:
        Stěna s Milgramovým znaménkem
    """
    p = u.num_blocks
    if not 1 <= k <= p:
        raise PartitionError(f"Index bloku {k} mimo rozsah 1..{p}")
    index = k if side == "left" else p - k + 1
    block = u.blocks[index - 1]
    chosen = set(subset)
    if not chosen or not chosen < set(block):
        raise PartitionError(
            f"Množina {sorted(chosen)} není vlastní neprázdná podmnožina bloku {block}"
        )
    if side == "left":
        first = tuple(x for x in block if x in chosen)
    else:
        first = tuple(x for x in block if x not in chosen)
    second = tuple(x for x in block if x not in first)
    exponent = sum(len(b) - 1 for b in u.blocks[: index - 1]) + len(first)
    sign = (-1) ** (exponent % 2) * shuffle_sign(first, second)
    blocks = (*u.blocks[: index - 1], first, second, *u.blocks[index:])
    return SignedFace(coefficient=sign, face=OrderedPartition(blocks))


def face_boundary(u: OrderedPartition) -> Chain[OrderedPartition]:
    """Hranice jedné stěny: součet d_M^k přes všechna k a M."""
    terms: list[tuple[OrderedPartition, int]] = []
    for k, block in enumerate(u.blocks, start=1):
        for size in range(1, len(block)):
            for subset in combinations(block, size):
                signed = face(u, k, subset)
                terms.append((signed.face, signed.coefficient))
    return Chain.from_terms(terms)


def boundary(c: Chain[OrderedPartition]) -> Chain[OrderedPartition]:
    """Celulární hranice řetězce (Milgramova znaménka)."""
    return c.apply(face_boundary)


def tensor_boundary(t: TensorChain) -> TensorChain:
    """(∂⊗1 + 1⊗∂) s Koszulovým znaménkem (-1)^{dim u}."""

    def on_pair(pair: TensorPair) -> TensorChain:
        u, v = pair
        terms: list[tuple[TensorPair, int]] = []
        for du, c in face_boundary(u):
            terms.append(((du, v), c))
        sign = -1 if u.dim % 2 else 1
        for dv, c in face_boundary(v):
            terms.append(((u, dv), sign * c))
        return Chain.from_terms(terms)

    return t.apply(on_pair)


# --- Výčet stěn ---


def _ordered_partitions(elems: tuple[int, ...]) -> Iterator[Blocks]:
    if not elems:
        yield ()
        return
    for size in range(1, len(elems) + 1):
        for first in combinations(elems, size):
            rest = tuple(x for x in elems if x not in first)
            for tail in _ordered_partitions(rest):
                yield (first, *tail)


def enumerate_faces(n: int, p: int | None = None) -> list[OrderedPartition]:
    """Všechny stěny P_n (s právě p bloky, je-li zadáno), lexikograficky.

    Raises:
        PartitionError: Pokud n < 1 nebo p mimo 1..n
    """
    if n < 1:
        raise PartitionError(f"n musí být kladné, ne {n}")
    if p is not None and not 1 <= p <= n:
        raise PartitionError(f"Počet bloků {p} mimo rozsah 1..{n}")
    faces = [
        OrderedPartition(blocks)
        for blocks in _ordered_partitions(tuple(range(1, n + 1)))
        if p is None or len(blocks) == p
    ]
    faces.sort()
    logger.debug("P_%d: %d stěn", n, len(faces))
    return faces
