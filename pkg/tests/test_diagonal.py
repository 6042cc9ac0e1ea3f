"""Testy pro diagonálu Δ_P."""

from pathlib import Path

import pytest

from permdiag.core import Chain, TensorChain, parse_partition, top_cell
from permdiag.diagonal import (
    diagonal,
    diagonal_face,
    diagonal_top,
    primitive_terms,
    tensor_transpose,
    verify_coderivation,
)
from permdiag.errors import PartitionError

GOLDEN = Path(__file__).parent / "golden"


def T(*terms: tuple[str, str, int]) -> TensorChain:
    return Chain.from_terms(
        ((parse_partition(u), parse_partition(v)), coef) for u, v, coef in terms
    )


def render(chain: TensorChain) -> str:
    return "".join(f"{'+' if c > 0 else '-'} {u} (x) {v}\n" for (u, v), c in chain)


def test_diagonal_of_point() -> None:
    """Test Δ_P na bodu."""
    assert diagonal_top(0) == T(("1", "1", 1))


def test_diagonal_of_edge() -> None:
    """Test Δ_P(2) = 1|2⊗12 + 12⊗2|1."""
    assert diagonal_top(1) == T(("1|2", "12", 1), ("12", "2|1", 1))


def test_diagonal_of_hexagon() -> None:
    """Test osmi členů Δ_P(3) se znaménky."""
    expected = T(
        ("1|2|3", "123", 1),
        ("123", "3|2|1", 1),
        ("1|23", "13|2", -1),
        ("2|13", "23|1", 1),
        ("13|2", "3|12", -1),
        ("12|3", "2|13", 1),
        ("1|23", "3|12", -1),
        ("12|3", "23|1", 1),
    )
    assert diagonal_top(2) == expected


def test_diagonal_of_hexagon_golden() -> None:
    """Test bajtové shody s uloženým výstupem Δ_P(3)."""
    golden = (GOLDEN / "perm_diagonal_3.txt").read_text(encoding="utf-8")
    assert render(diagonal_top(2)) == golden


@pytest.mark.parametrize(
    ("u", "v", "coef"),
    [
        ("1234", "4|3|2|1", 1),
        ("1|234", "14|3|2", 1),
        ("12|34", "2|14|3", -1),
        ("12|34", "24|1|3", -1),
        ("14|23", "4|3|12", -1),
        ("134|2", "4|3|12", 1),
        ("123|4", "3|2|14", 1),
        ("3|124", "34|2|1", 1),
        ("24|13", "4|23|1", 1),
    ],
)
def test_diagonal_of_p4_terms(u: str, v: str, coef: int) -> None:
    """Test vybraných členů Δ_P(4)."""
    assert diagonal_top(3).coefficient((parse_partition(u), parse_partition(v))) == coef


def test_diagonal_face_product() -> None:
    """Test Δ_P na součinové stěně 12|3."""
    assert diagonal_face(parse_partition("12|3")) == T(
        ("1|2|3", "12|3", 1), ("12|3", "2|1|3", 1)
    )


def test_diagonal_face_vertex_and_top() -> None:
    """Test Δ_P na vrcholu a na vrchní buňce."""
    vertex = parse_partition("2|3|1")
    assert diagonal_face(vertex) == Chain.single((vertex, vertex))
    assert diagonal_face(top_cell(4)) == diagonal_top(3)


def test_diagonal_is_linear() -> None:
    """Test lineárního rozšíření na řetězce."""
    chain = Chain.from_terms([(parse_partition("12|3"), 2), (top_cell(3), -1)])
    expected = diagonal_face(parse_partition("12|3")).scale(2) - diagonal_top(2)
    assert diagonal(chain) == expected


def test_diagonal_negative() -> None:
    """Test záporného n."""
    with pytest.raises(PartitionError):
        diagonal_top(-1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coderivation(n: int) -> None:
    """Test Δ_P∘∂ = (∂⊗1 + 1⊗∂)∘Δ_P."""
    report = verify_coderivation(n)
    assert report.ok
    assert report.residual.is_zero()


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_coderivation_large(n: int) -> None:
    """Test koderivace pro větší permutaedry."""
    assert verify_coderivation(n).ok


def test_coderivation_invalid() -> None:
    """Test n < 1."""
    with pytest.raises(PartitionError):
        verify_coderivation(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_transpose_closure(n: int) -> None:
    """Test uzavřenosti členů Δ_P na transpozici."""
    terms = diagonal_top(n)
    assert set(tensor_transpose(terms).keys()) == set(terms.keys())


def test_tensor_transpose() -> None:
    """Test transpozice jednoho členu."""
    flipped = tensor_transpose(T(("1|23", "13|2", -1)))
    assert flipped == T(("2|13", "23|1", -1))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_primitive_terms(n: int) -> None:
    """Test, že vrchol se objeví právě jednou vlevo a jednou vpravo."""
    terms = primitive_terms(diagonal_top(n))
    top = top_cell(n + 1)
    identity = parse_partition("|".join(str(x) for x in range(1, n + 2)))
    reverse = parse_partition("|".join(str(x) for x in range(n + 1, 0, -1)))
    assert sorted(pair for pair, _ in terms) == sorted([(identity, top), (top, reverse)])
