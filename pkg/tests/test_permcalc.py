"""Testy pro kalkul permutaedrických množin."""

from itertools import permutations

import pytest

from permdiag.core import OrderedPartition, enumerate_faces, parse_partition
from permdiag.errors import RelationError
from permdiag.permcalc import (
    CubicalVertex,
    Decomposition,
    box_op,
    codegeneracy_beta,
    coassociativity_holds,
    coface_delta,
    compose_word,
    cubical_vertices,
    delta_rs_face,
    differential_sign,
    disjoint_unions,
    embed_h,
    faceword_factorizations,
    formal_derivation,
    gamma,
    h_vertex,
    in_q,
    index_map,
    index_map_inverse,
    multip_split,
    project_phi,
    quadratic_condition,
    rho,
    words_agree,
)


def P(text: str) -> OrderedPartition:
    return parse_partition(text)


def test_index_maps() -> None:
    """Test rostoucí bijekce I_M a její inverze."""
    assert index_map({2, 5, 7}, {5, 7}) == {2, 3}
    assert index_map_inverse({2, 5, 7}, {1, 3}) == {2, 7}
    with pytest.raises(RelationError):
        index_map({2, 5}, {3})


def test_in_q() -> None:
    """Test příslušnosti do 𝒬_{p,q}(n)."""
    assert in_q(P("12|34"), 2, 2)
    assert not in_q(P("13|24"), 2, 1)
    with pytest.raises(RelationError):
        in_q(P("1|2|3"), 1, 1)


def test_delta_rs_face() -> None:
    """Test projekce Δ_{2,3}(2|4|1|3)."""
    pair = delta_rs_face(P("2|4|1|3"), 2, 3)
    assert pair.left == P("2|1")
    assert pair.right == P("1|3|2")
    assert str(pair) == "2|1 × 2|4|3"
    assert not pair.degenerate


def test_delta_rs_degenerate() -> None:
    """Test degenerovaného obrazu Δ_{2,2}(13|2)."""
    assert delta_rs_face(P("13|2"), 2, 2).degenerate


def test_delta_rs_invalid() -> None:
    """Test chybných r, s."""
    with pytest.raises(RelationError):
        delta_rs_face(P("12|3"), 2, 3)


def test_coassociativity() -> None:
    """Test koasociativity Δ_{r,s} na všech stěnách P_5."""
    for u in enumerate_faces(5):
        assert coassociativity_holds(u, 2, 2, 3)
        assert coassociativity_holds(u, 1, 3, 3)


def test_rho_gamma() -> None:
    """Test ρ a γ na příkladech."""
    assert str(rho((2, 3, 1))) == "2|1 × 2|3"
    assert gamma(CubicalVertex(4, ((2, 1), (3, 2), (3, 4)))) == (3, 2, 1, 4)
    assert gamma(CubicalVertex(1, ())) == (1,)


def test_cubical_vertex_invalid() -> None:
    """Test neplatného vrcholu krychle."""
    with pytest.raises(RelationError):
        CubicalVertex(3, ((1, 2), (1, 3)))
    with pytest.raises(RelationError):
        rho((1, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cubical_vertices(n: int) -> None:
    """Test, že kubických vrcholů je 2^{n-1} a jsou pevnými body γρ."""
    fixed = cubical_vertices(n)
    assert len(fixed) == 2 ** (n - 1)
    assert all(gamma(rho(v)) == v for v in fixed)
    others = [v for v in permutations(range(1, n + 1)) if v not in fixed]
    assert all(gamma(rho(v)) != v for v in others)


def test_embed_h() -> None:
    """Test podkomplexu P_ℓ × P_m."""
    assert embed_h(P("14|23")) == (P("1|4|23"), P("14|2|3"))


def test_h_vertex() -> None:
    """Test vložení dvojice vrcholů."""
    assert h_vertex(P("13|2"), (1,), (1, 2)) == (1, 3, 2)
    assert h_vertex(P("12|34"), (1, 2), (2, 1)) == (1, 2, 4, 3)


def test_project_phi() -> None:
    """Test projekce φ_{12|34}."""
    assert project_phi(P("12|34"), (2, 4, 1, 3)) == ((2, 1), (2, 1))


def test_coface_word_is_constant() -> None:
    """Test, že δ_{12|34}δ_{13|2} je konstantní."""
    values = {compose_word([P("12|34"), P("13|2")], x) for x in permutations((1, 2))}
    assert values == {(1, 2, 4, 3)}


def test_codegeneracy_after_coface() -> None:
    """Test β∘δ = γ∘ρ na vrcholech."""
    ab = P("12|34")
    for x in permutations((1, 2, 3)):
        assert codegeneracy_beta(ab, coface_delta(ab, x)) == gamma(rho(x))


def test_coface_invalid_size() -> None:
    """Test vrcholu špatné velikosti."""
    with pytest.raises(RelationError):
        coface_delta(P("12|34"), (1, 2))
    with pytest.raises(RelationError):
        codegeneracy_beta(P("12|34"), (1, 2, 3))


def test_disjoint_unions() -> None:
    """Test dolního a horního disjunktního sjednocení."""
    lower, upper = disjoint_unions({1, 2}, {3, 4, 5}, range(1, 9))
    assert lower == {1, 2, 3, 4}
    with pytest.raises(RelationError):
        disjoint_unions({1, 2}, {2, 3}, range(1, 5))


def test_box_op() -> None:
    """Test operace □."""
    assert box_op({1, 2}, [{3, 4, 5}, {6, 7, 8}]) == P("1234|567")
    assert box_op({6, 7, 8}, [{1, 2}, {3, 4, 5}]) == P("12|34567")


@pytest.mark.parametrize(
    ("face", "upper", "lower"),
    [
        ("12|345|678", ["12|345678", "1234|567"], ["12345|678", "12|34567"]),
        ("345|12|678", ["345|12678", "1234|567"], ["12345|678", "34567|12"]),
        ("2|1|3", ["2|13", "1|2"], ["12|3", "2|1"]),
    ],
)
def test_faceword_factorizations(face: str, upper: list[str], lower: list[str]) -> None:
    """Test obou δ-faktorizací."""
    first, second = faceword_factorizations(P(face))
    assert first == [P(x) for x in upper]
    assert second == [P(x) for x in lower]


def test_factorization_needs_two_blocks() -> None:
    """Test stěny s jediným blokem."""
    with pytest.raises(RelationError):
        faceword_factorizations(P("123"))


def _check_bracket_identities(n: int) -> None:
    for u in enumerate_faces(n):
        if u.num_blocks != 3:
            continue
        upper, lower = faceword_factorizations(u)
        assert quadratic_condition(upper[0], upper[1]) == u
        assert quadratic_condition(lower[0], lower[1]) == u


@pytest.mark.parametrize("n", [3, 4, 5])
def test_bracket_identities(n: int) -> None:
    """Test [X|Y∪Z; X□(Y|Z)] = X|Y|Z a [X∪Y|Z; (X|Y)□Z] = X|Y|Z."""
    _check_bracket_identities(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_bracket_identities_large(n: int) -> None:
    """Test závorkových identit pro n = 6, 7."""
    _check_bracket_identities(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_phi_after_h(n: int) -> None:
    """Test φ_{A|B}∘h_{A|B} = φ_{B|A}∘h_{A|B} = id na vrcholech."""
    for ab in enumerate_faces(n):
        if ab.num_blocks != 2:
            continue
        first, second = ab.blocks
        ba = OrderedPartition((second, first))
        ell = len(first) if n in second else len(second)
        for x in permutations(range(1, ell + 1)):
            for y in permutations(range(1, n - ell + 1)):
                c = h_vertex(ab, x, y)
                assert project_phi(ab, c) == (x, y)
                assert project_phi(ba, c) == (x, y)


@pytest.mark.parametrize("n", [2, 3])
def test_words_agree_small(n: int) -> None:
    """Test shody obou faktorizací na vrcholech pro n <= 3."""
    for u in enumerate_faces(n):
        if u.num_blocks >= 2:
            assert words_agree(u)


def test_words_differ_on_1_2_34() -> None:
    """Test neshody: horní slovo končí kubickým vrcholem na bloku 234."""
    upper, lower = faceword_factorizations(P("1|2|34"))
    assert upper == [P("1|234"), P("1|23")]
    assert lower == [P("12|34"), P("1|23")]
    assert compose_word(upper, (2, 1)) == (1, 4, 2, 3)
    assert compose_word(lower, (2, 1)) == (1, 2, 4, 3)
    assert not words_agree(P("1|2|34"))


@pytest.mark.parametrize(
    ("ab", "cd", "expected"),
    [
        ("12|345678", "1234|567", "12|345|678"),
        ("12345|678", "12|34567", "12|345|678"),
        ("12345|678", "34567|12", "345|12|678"),
        ("345|12678", "1234|567", "345|12|678"),
    ],
)
def test_quadratic_condition(ab: str, cd: str, expected: str) -> None:
    """Test závorky kvadratické relace."""
    assert quadratic_condition(P(ab), P(cd)) == P(expected)


def test_quadratic_condition_sizes() -> None:
    """Test nesouhlasících velikostí."""
    with pytest.raises(RelationError):
        quadratic_condition(P("12|34"), P("1|234"))


def test_multip_split() -> None:
    """Test rozkladu K|L, M|N, C|D."""
    split = multip_split(P("13|2"), 2, 2)
    assert split.kl == P("1|23")
    assert split.mn == P("2|1")
    assert split.cd == P("1|2")


def test_multip_split_precondition() -> None:
    """Test rozkladu ležícího v 𝒬_{r,1}."""
    with pytest.raises(RelationError):
        multip_split(P("12|3"), 2, 2)
    with pytest.raises(RelationError):
        multip_split(P("13|2"), 1, 2)


def test_decomposition() -> None:
    """Test indexů p_i, q_i a úseků C_i."""
    d = Decomposition((3, 2))
    assert d.n == 6
    assert (d.p(1), d.q(1), d.p(2), d.q(2)) == (1, 3, 4, 1)
    assert d.segment(2) == {4, 5, 6}
    with pytest.raises(RelationError):
        Decomposition(())


def test_differential_sign() -> None:
    """Test koeficientu diferenciálu."""
    assert differential_sign(P("1234|56"), Decomposition((3, 2)), 2) == 1


@pytest.mark.parametrize("r", [1, 2, 3])
def test_differential_sign_trivial_decomposition(r: int) -> None:
    """Test triviálního rozkladu (n - 1)."""
    head = "".join(str(x) for x in range(1, r + 1))
    tail = "".join(str(x) for x in range(r + 1, 5))
    ab = P(f"{head}|{tail}")
    assert differential_sign(ab, Decomposition((3,)), 1) == -((-1) ** (r - 1))


def test_differential_sign_membership() -> None:
    """Test rozkladu mimo 𝒬_{p_i,q_i}."""
    with pytest.raises(RelationError):
        differential_sign(P("135|246"), Decomposition((3, 2)), 2)


def test_formal_derivation() -> None:
    """Test formální derivace: rozštěpení n_i."""
    term = formal_derivation(P("1234|56"), Decomposition((3, 2)), 2)
    assert term.split == P("1|23")
    assert term.decomposition == Decomposition((3, 0, 1))
    assert term.sign == 1
