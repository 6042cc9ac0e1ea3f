"""Kalkul permutaedrických množin: zobrazení na vrcholech a strukturní relace.

Vrcholy P_n se předávají jako permutace (n-tice). Dvoublokové rozklady A|B jsou
OrderedPartition se dvěma bloky. Značení: k̲ = {1..k}, k̄ = {n-k+1..n}.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import permutations, product

from permdiag.core import (
    OrderedPartition,
    render_partition,
    restrict,
    shuffle_sign,
    standardize_blocks,
)
from permdiag.errors import PartitionError, RelationError

Permutation = tuple[int, ...]
Pair = tuple[int, int]


# --- Pomocné množiny ---


def lower_set(k: int) -> frozenset[int]:
    """k̲ = {1..k}."""
    return frozenset(range(1, k + 1))


def upper_set(k: int, n: int) -> frozenset[int]:
    """k̄ = {n-k+1..n}."""
    return frozenset(range(n - k + 1, n + 1))


def index_map(ground: Iterable[int], subset: Iterable[int]) -> frozenset[int]:
    """I_M: obraz podmnožiny při rostoucí bijekci M -> {1..#M}."""
    ranks = {x: i for i, x in enumerate(sorted(ground), start=1)}
    try:
        return frozenset(ranks[x] for x in subset)
    except KeyError as e:
        raise RelationError(f"Prvek {e.args[0]} neleží v {sorted(ranks)}") from e


def index_map_inverse(ground: Iterable[int], subset: Iterable[int]) -> frozenset[int]:
    """I_M^{-1}: {1..#M} -> M."""
    ordered = sorted(ground)
    if any(not 1 <= x <= len(ordered) for x in subset):
        raise RelationError(f"Indexy {sorted(subset)} mimo 1..{len(ordered)}")
    return frozenset(ordered[x - 1] for x in subset)


def translate(subset: Iterable[int], z: int) -> frozenset[int]:
    """M + z."""
    return frozenset(x + z for x in subset)


def two_blocks(u: OrderedPartition) -> tuple[frozenset[int], frozenset[int]]:
    if u.num_blocks != 2:
        raise RelationError(f"{u} není dvoublokový rozklad")
    return frozenset(u.blocks[0]), frozenset(u.blocks[1])


def partition_of(*blocks: Iterable[int]) -> OrderedPartition:
    """Rozklad z bloků; prázdný blok je chyba."""
    listed = [sorted(block) for block in blocks]
    if any(not block for block in listed):
        raise RelationError(f"Prázdný blok v {listed}")
    return OrderedPartition.from_blocks(listed)


def in_q(u: OrderedPartition, p: int, q: int) -> bool:
    """A|B ∈ 𝒬_{p,q}(n): p̲ i q̄ leží každá celá v A nebo v B."""
    a, b = two_blocks(u)
    n = u.ground_size
    low, high = lower_set(p), upper_set(q, n)
    return (low <= a or low <= b) and (high <= a or high <= b)


# --- Δ_{r,s} ---


@dataclass(frozen=True)
class RestrictedPair:
    """Obraz stěny v P_r × P_s."""

    left: OrderedPartition  # zúžení na {1..r}
    right: OrderedPartition  # zúžení na {r..n}, přeznačené o -(r-1)
    offset: int  # r - 1, posun pro zobrazení pravého faktoru
    degenerate: bool  # dimenze klesla

    def __str__(self) -> str:
        right = render_partition(self.right, offset=self.offset)
        return f"{self.left} × {right}"


def delta_rs_face(u: OrderedPartition, r: int, s: int) -> RestrictedPair:
    """Kanonická projekce Δ_{r,s}: P_n -> P_r × P_s na stěně u."""
    n = u.ground_size
    if r < 1 or s < 1 or r + s != n + 1:
        raise RelationError(f"Musí platit r + s = n + 1, zde r={r}, s={s}, n={n}")
    left = restrict(u, range(1, r + 1))
    right = restrict(u, range(r, n + 1))
    return RestrictedPair(
        left=left,
        right=right,
        offset=r - 1,
        degenerate=left.dim + right.dim < u.dim,
    )


def coassociativity_holds(u: OrderedPartition, r: int, s: int, t: int) -> bool:
    """(Δ_{r,s}×1)Δ_{r+s-1,t} = (1×Δ_{s,t})Δ_{r,s+t-1} na stěně u."""
    first = delta_rs_face(u, r + s - 1, t)
    inner_left = delta_rs_face(first.left, r, s)
    second = delta_rs_face(u, r, s + t - 1)
    inner_right = delta_rs_face(second.right, s, t)
    return (inner_left.left, inner_left.right, first.right) == (
        second.left,
        inner_right.left,
        inner_right.right,
    )


# --- ρ a γ ---


@dataclass(frozen=True)
class CubicalVertex:
    """Vrchol krychle: pro každé i dvojice {i, i+1} v pořadí výskytu."""

    n: int
    choices: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if len(self.choices) != max(self.n - 1, 0):
            raise RelationError(f"Očekáváno {self.n - 1} dvojic, ne {len(self.choices)}")
        for i, pair in enumerate(self.choices, start=1):
            if pair not in ((i, i + 1), (i + 1, i)):
                raise RelationError(f"Dvojice {pair} není i|i+1 ani i+1|i pro i={i}")

    def __str__(self) -> str:
        if not self.choices:
            return "1"
        return " × ".join(f"{a}|{b}" for a, b in self.choices)


def _check_vertex(v: Sequence[int], n: int | None = None) -> None:
    size = len(v) if n is None else n
    if sorted(v) != list(range(1, size + 1)):
        raise RelationError(f"{tuple(v)} není vrchol P_{size}")


def rho(v: Sequence[int]) -> CubicalVertex:
    """ρ_n: vrchol P_n -> vrchol krychle I^{n-1}."""
    _check_vertex(v)
    position = {x: k for k, x in enumerate(v)}
    pairs = tuple(
        (i, i + 1) if position[i] < position[i + 1] else (i + 1, i) for i in range(1, len(v))
    )
    return CubicalVertex(n=len(v), choices=pairs)


def gamma(c: CubicalVertex) -> Permutation:
    """γ_n: A_2 je první dvojice, k se připojí vpravo pokud v_{k-1} = k-1|k, jinak vlevo."""
    if c.n <= 1:
        return (1,)
    current = list(c.choices[0])
    for k in range(3, c.n + 1):
        if c.choices[k - 2] == (k - 1, k):
            current.append(k)
        else:
            current.insert(0, k)
    return tuple(current)


def cubical_vertices(n: int) -> list[Permutation]:
    """Kubické vrcholy P_n: pevné body γ_n∘ρ_n, je jich 2^{n-1}."""
    options = [((i, i + 1), (i + 1, i)) for i in range(1, n)]
    return sorted(gamma(CubicalVertex(n, choice)) for choice in product(*options))


# --- h, φ, δ, β ---


def _ell_block(ab: OrderedPartition) -> tuple[frozenset[int], frozenset[int]]:
    """Vrátí (blok bez n, blok s n)."""
    a, b = two_blocks(ab)
    return (b, a) if ab.ground_size in a else (a, b)


def embed_h(ab: OrderedPartition) -> tuple[OrderedPartition, OrderedPartition]:
    """Podkomplex P_ℓ × P_m v P_n určený A|B.

    Returns:
        Dvojice stěn; v první zůstává celý blok bez n (faktor P_ℓ), v druhé blok s n
    """
    ell, em = _ell_block(ab)

    def spread(keep: frozenset[int]) -> OrderedPartition:
        blocks: list[tuple[int, ...]] = []
        for block in ab.blocks:
            if frozenset(block) == keep:
                blocks.append(block)
            else:
                blocks.extend((x,) for x in block)
        return OrderedPartition(tuple(blocks))

    return spread(ell), spread(em)


def h_vertex(ab: OrderedPartition, x: Sequence[int], y: Sequence[int]) -> Permutation:
    """h_{A|B}(x, y): x značí blok bez n, y blok s n; prvky A předcházejí prvky B."""
    ell, em = _ell_block(ab)
    _check_vertex(x, len(ell))
    _check_vertex(y, len(em))
    xs, ys = sorted(ell), sorted(em)
    labelled = {frozenset(ell): [xs[i - 1] for i in x], frozenset(em): [ys[i - 1] for i in y]}
    return tuple(labelled[frozenset(ab.blocks[0])] + labelled[frozenset(ab.blocks[1])])


def project_phi(ab: OrderedPartition, c: Sequence[int]) -> tuple[Permutation, Permutation]:
    """φ_{A|B}: rozdělí vrchol na prvky bloku bez n a zbytek, oba standardizuje."""
    _check_vertex(c, ab.ground_size)
    ell, _ = _ell_block(ab)

    def standard(seq: list[int]) -> Permutation:
        ranks = {x: i for i, x in enumerate(sorted(seq), start=1)}
        return tuple(ranks[x] for x in seq)

    return standard([x for x in c if x in ell]), standard([x for x in c if x not in ell])


def coface_delta(ab: OrderedPartition, x: Sequence[int]) -> Permutation:
    """δ_{A|B} = h_{A|B}∘(γ_ℓ×γ_m)∘ρ_{n-1} na vrcholech."""
    n = ab.ground_size
    if len(x) != n - 1:
        raise RelationError(f"δ_{{{ab}}} očekává vrchol P_{n - 1}, ne {tuple(x)}")
    ell = len(_ell_block(ab)[0])
    pairs = rho(x).choices
    first = CubicalVertex(ell, pairs[: ell - 1])
    second = CubicalVertex(
        n - ell, tuple((a - ell + 1, b - ell + 1) for a, b in pairs[ell - 1 :])
    )
    return h_vertex(ab, gamma(first), gamma(second))


def codegeneracy_beta(ab: OrderedPartition, y: Sequence[int]) -> Permutation:
    """β_{A|B} = γ_{n-1}∘(ρ_ℓ×ρ_m)∘φ_{A|B} na vrcholech."""
    n = ab.ground_size
    if len(y) != n:
        raise RelationError(f"β_{{{ab}}} očekává vrchol P_{n}, ne {tuple(y)}")
    u, v = project_phi(ab, y)
    shift = len(u) - 1
    pairs = rho(u).choices + tuple((a + shift, b + shift) for a, b in rho(v).choices)
    return gamma(CubicalVertex(n - 1, pairs))


# --- Disjunktní sjednocení a □ ---


def disjoint_unions(
    a: Iterable[int], b: Iterable[int], ground: Iterable[int]
) -> tuple[frozenset[int], frozenset[int]]:
    """Dolní a horní disjunktní sjednocení A⊔̲B a A⊔̄B vzhledem k U."""
    sa, sb, u = frozenset(a), frozenset(b), frozenset(ground)
    if sa & sb or not (sa | sb) <= u:
        raise RelationError("A a B musí být disjunktní podmnožiny U")
    if not sa or not sb:
        return sa | sb, sa | sb
    rest_a, rest_b = u - sa, u - sb
    lower = translate(index_map(rest_a, sb), len(sa) - 1)
    if min(sb) == min(rest_a):
        lower |= lower_set(len(sa))
    upper = index_map(rest_b, sa)
    if max(sa) == max(rest_b):
        upper |= translate(upper_set(len(sb), len(u)), -1)
    return lower, upper


def box_op(a: Iterable[int], fragment: Sequence[Iterable[int]]) -> OrderedPartition:
    """A□(B_1|...|B_k), stejně (B_1|...|B_k)□A."""
    sa = frozenset(a)
    blocks = [frozenset(block) for block in fragment]
    ground = sa.union(*blocks)
    if sum(len(block) for block in blocks) + len(sa) != len(ground):
        raise RelationError("Bloky operace □ nejsou disjunktní")
    if max(sa) < max(ground):
        images = [disjoint_unions(sa, block, ground)[0] for block in blocks]
    else:
        images = [disjoint_unions(block, sa, ground)[1] for block in blocks]
    return partition_of(*images)


# --- Faktorizace na δ ---


def faceword_factorizations(
    u: OrderedPartition,
) -> tuple[list[OrderedPartition], list[OrderedPartition]]:
    """Dvě δ-slova pro stěnu s k+1 bloky; δ vpravo se aplikuje první."""
    if u.num_blocks < 2:
        raise RelationError(f"{u} musí mít alespoň dva bloky")
    word_upper: list[OrderedPartition] = []
    current = u
    while True:
        head, *tail = current.blocks
        word_upper.append(partition_of(head, [x for block in tail for x in block]))
        if len(tail) == 1:
            break
        current = box_op(head, tail)
    word_lower: list[OrderedPartition] = []
    current = u
    while True:
        *init, last = current.blocks
        word_lower.append(partition_of([x for block in init for x in block], last))
        if len(init) == 1:
            break
        current = box_op(last, init)
    return word_upper, word_lower


def compose_word(word: Sequence[OrderedPartition], x: Sequence[int]) -> Permutation:
    """Hodnota složení δ_1∘...∘δ_k na vrcholu x."""
    current = tuple(x)
    for ab in reversed(word):
        current = coface_delta(ab, current)
    return current


def words_agree(u: OrderedPartition) -> bool:
    """Zda obě δ-faktorizace dávají stejné zobrazení na vrcholech P_{n-k}.

    Pro n <= 3 platí vždy; od n = 4 ne, např. na 1|2|34 se liší ve vrcholu 2|1.
    """
    first, second = faceword_factorizations(u)
    size = u.ground_size - len(first)
    return all(
        compose_word(first, x) == compose_word(second, x)
        for x in permutations(range(1, size + 1))
    )


# --- Kvadratické relace ---


def quadratic_condition(ab: OrderedPartition, cd: OrderedPartition) -> OrderedPartition | None:
    """Závorka [A|B; C|D] = X|Y|Z, nebo None pokud C|D neleží v potřebné 𝒬-množině."""
    a, b = two_blocks(ab)
    c, d = two_blocks(cd)
    n = cd.ground_size
    if ab.ground_size != n + 1:
        raise RelationError(f"A|B musí rozkládat {n + 1} prvků, C|D {n}")
    p, q = len(a), len(b)
    candidates: list[tuple[frozenset[int], frozenset[int], frozenset[int]]] = []
    if n + 1 in b:
        if in_q(cd, p, 1):
            high = upper_set(q, n)
            candidates.append(
                (
                    a,
                    index_map_inverse(b, translate(high & c, -(p - 1))),
                    index_map_inverse(b, translate(high & d, -(p - 1))),
                )
            )
        if in_q(cd, 1, q):
            low = lower_set(p)
            candidates.append((index_map_inverse(a, low & c), index_map_inverse(a, low & d), b))
    else:
        if in_q(cd, 1, p):
            low = lower_set(q)
            candidates.append((a, index_map_inverse(b, low & c), index_map_inverse(b, low & d)))
        if in_q(cd, q, 1):
            high = upper_set(p, n)
            candidates.append(
                (
                    index_map_inverse(a, translate(high & c, -(q - 1))),
                    index_map_inverse(a, translate(high & d, -(q - 1))),
                    b,
                )
            )
    for x, y, z in candidates:
        if x and y and z:
            return partition_of(x, y, z)
    return None


@dataclass(frozen=True)
class MultipSplit:
    """Rozklady K|L, M|N a C|D vyšší strukturní relace."""

    kl: OrderedPartition
    mn: OrderedPartition
    cd: OrderedPartition


def multip_split(ab: OrderedPartition, r: int, s: int) -> MultipSplit:
    """Rozklad A|B ∉ 𝒬_{r,1}(n) ∪ 𝒬_{1,s}(n) na K|L, M|N a C|D.

    Raises:
        RelationError: Pokud A|B leží v 𝒬_{r,1}(n) nebo 𝒬_{1,s}(n)
    """
    a, b = two_blocks(ab)
    n = ab.ground_size
    if r + s != n + 1:
        raise RelationError(f"Musí platit r + s = n + 1, zde r={r}, s={s}, n={n}")
    if in_q(ab, r, 1) or in_q(ab, 1, s):
        raise RelationError(f"{ab} leží v 𝒬_{{{r},1}} nebo 𝒬_{{1,{s}}}")
    low, high, whole = lower_set(r), upper_set(s, n), lower_set(n - 1)
    if r in a:
        k_block, l_block = (low & a) | high, low & b
    else:
        k_block, l_block = low & a, (low & b) | high
    if r in b:
        m_block = translate(high & a, -1)
        n_block = whole - m_block
    elif n in a:
        n_block = translate(high & b, -len(l_block))
        m_block = whole - n_block
    else:
        m_block = index_map(lower_set(n) - l_block, a)
        n_block = whole - m_block
    if r in b and n in b:
        c_block = index_map(a, low & a)
        d_block = whole - c_block
    elif r in a and n in b:
        c_block = index_map(b, high & b)
        d_block = whole - c_block
    elif r in b:
        d_block = index_map(a, high & a)
        c_block = whole - d_block
    else:
        d_block = index_map(b, low & b)
        c_block = whole - d_block
    return MultipSplit(
        kl=partition_of(k_block, l_block),
        mn=partition_of(m_block, n_block),
        cd=partition_of(c_block, d_block),
    )


# --- Diferenciál ---


@dataclass(frozen=True)
class Decomposition:
    """Rozklad n - 1 = n_1 + ... + n_k."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(x < 0 for x in self.parts):
            raise RelationError(f"Neplatný rozklad {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts) + 1

    def p(self, i: int) -> int:
        return 1 + sum(self.parts[: i - 1])

    def q(self, i: int) -> int:
        return 1 + sum(self.parts[i:])

    def segment(self, i: int) -> frozenset[int]:
        """C_i = {p_i..p_i + n_i}."""
        start = self.p(i)
        return frozenset(range(start, start + self.parts[i - 1] + 1))


@dataclass(frozen=True)
class FormalTerm:
    """Člen formální derivace: A_i|B_i na C_i a nový rozklad."""

    split: OrderedPartition
    decomposition: Decomposition
    sign: int


def _check_membership(ab: OrderedPartition, d: Decomposition, i: int) -> None:
    if ab.ground_size != d.n:
        raise RelationError(f"{ab} nerozkládá {d.n} prvků")
    if not 1 <= i <= len(d.parts):
        raise RelationError(f"Index {i} mimo 1..{len(d.parts)}")
    if not in_q(ab, d.p(i), d.q(i)):
        raise RelationError(f"{ab} neleží v 𝒬_{{{d.p(i)},{d.q(i)}}}({d.n})")


def differential_sign(ab: OrderedPartition, d: Decomposition, i: int) -> int:
    """-(-1)^{n_(i-1) + n_i'}·shuff(C_i∩A; C_i∩B)."""
    _check_membership(ab, d, i)
    a, b = two_blocks(ab)
    segment = d.segment(i)
    n_prime = len(segment & a) - 1
    exponent = sum(d.parts[: i - 1]) + n_prime
    return -((-1) ** (exponent % 2)) * shuffle_sign(sorted(segment & a), sorted(segment & b))


def formal_derivation(ab: OrderedPartition, d: Decomposition, i: int) -> FormalTerm:
    """Rozštěpí n_i na n_i' + n_i'' podle C_i∩A a C_i∩B."""
    sign = differential_sign(ab, d, i)
    a, b = two_blocks(ab)
    segment = d.segment(i)
    part_a, part_b = segment & a, segment & b
    if not part_a or not part_b:
        raise RelationError(f"C_{i} leží celé v jednom bloku {ab}")
    try:
        split = OrderedPartition(standardize_blocks([sorted(part_a), sorted(part_b)]))
    except PartitionError as e:
        raise RelationError(str(e)) from e
    parts = (
        *d.parts[: i - 1],
        len(part_a) - 1,
        len(part_b) - 1,
        *d.parts[i:],
    )
    return FormalTerm(split=split, decomposition=Decomposition(parts), sign=sign)
