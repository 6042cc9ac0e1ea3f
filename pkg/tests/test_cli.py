"""Testy pro CLI."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from permdiag.cli import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner() -> CliRunner:
    """CliRunner pro volání příkazů."""
    return CliRunner()


def test_version(runner: CliRunner) -> None:
    """Test zobrazení verze."""
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "0.3.0" in result.output


# --- Diagonály ---


def test_perm_diagonal_golden(runner: CliRunner) -> None:
    """Test Δ_P na P_3 proti uloženému výstupu."""
    result = runner.invoke(main, ["perm-diagonal", "3"])
    assert result.exit_code == 0
    expected = (GOLDEN / "perm_diagonal_3.txt").read_text(encoding="utf-8")
    assert result.output == expected


def test_perm_diagonal_json(runner: CliRunner) -> None:
    """Test JSON výstupu diagonály."""
    result = runner.invoke(main, ["perm-diagonal", "2", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["n"] == 2
    assert len(data["terms"]) == 2


def test_perm_diagonal_output_file(runner: CliRunner, tmp_path: Path) -> None:
    """Test zápisu do souboru."""
    target = tmp_path / "diag.txt"
    result = runner.invoke(main, ["perm-diagonal", "3", "--output", str(target)])
    assert result.exit_code == 0
    assert "Zapsáno do" in result.output
    expected = (GOLDEN / "perm_diagonal_3.txt").read_text(encoding="utf-8")
    assert target.read_text(encoding="utf-8") == expected


def test_perm_diagonal_zero(runner: CliRunner) -> None:
    """Test N = 0."""
    result = runner.invoke(main, ["perm-diagonal", "0"])
    assert result.exit_code == 2


def test_n_cap(runner: CliRunner) -> None:
    """Test překročení meze --n-cap."""
    result = runner.invoke(main, ["--n-cap", "2", "perm-diagonal", "3"])
    assert result.exit_code == 2
    assert "--n-cap" in result.output


def test_n_cap_env(runner: CliRunner) -> None:
    """Test meze z proměnné prostředí."""
    result = runner.invoke(main, ["perm-diagonal", "3"], env={"PERMDIAG_N_CAP": "2"})
    assert result.exit_code == 2


def test_assoc_diagonal_both(runner: CliRunner) -> None:
    """Test shody projekce a přímého výpočtu na K_4."""
    result = runner.invoke(main, ["assoc-diagonal", "2", "--method", "both"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[-1] == "OK"
    assert len(lines) == 7


def test_multi_diagonal_json(runner: CliRunner) -> None:
    """Test JSON výstupu Δ_J."""
    result = runner.invoke(main, ["multi-diagonal", "2", "--format", "json"])
    assert result.exit_code == 0
    assert len(json.loads(result.output)["terms"]) == 8


# --- Stěny a slova ---


def test_boundary(runner: CliRunner) -> None:
    """Test hranice hrany P_2."""
    result = runner.invoke(main, ["boundary", "12"])
    assert result.exit_code == 0
    assert result.output == "+ 2|1  - 1|2\n"


def test_boundary_vertex(runner: CliRunner) -> None:
    """Test hranice vrcholu."""
    result = runner.invoke(main, ["boundary", "2|1"])
    assert result.output == "0\n"


def test_boundary_bad_partition(runner: CliRunner) -> None:
    """Test chybného zápisu stěny."""
    result = runner.invoke(main, ["boundary", "1|1"])
    assert result.exit_code == 2
    assert "Chyba" in result.output


def test_configs_count(runner: CliRunner) -> None:
    """Test počtu konfigurací pro n = 2."""
    result = runner.invoke(main, ["configs", "2", "--count"])
    assert result.exit_code == 0
    assert result.output.strip() == "8"


def test_faceword_latex(runner: CliRunner) -> None:
    """Test LaTeX zápisu slova stěny."""
    result = runner.invoke(main, ["faceword", "13|2", "--format", "latex"])
    assert result.exit_code == 0
    assert result.output.strip() == "d_{(0,1)(2,1)}"


def test_tonks_classes(runner: CliRunner) -> None:
    """Test jediné netriviální třídy v P_3."""
    result = runner.invoke(main, ["tonks-classes", "3"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["[1|3|2, 13|2, 3|1|2] -> d(1,1)d(0,1)"]


# --- Relace ---


def test_relations_agree(runner: CliRunner) -> None:
    """Test obou faktorizací stěny 2|1|3."""
    result = runner.invoke(main, ["relations", "2|1|3"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "δ(2|13) δ(1|2)",
        "δ(12|3) δ(2|1)",
        "vrcholy: shoda",
    ]


def test_relations_disagree(runner: CliRunner) -> None:
    """Test neshody na 1|2|34 s kódem 1."""
    result = runner.invoke(main, ["relations", "1|2|34"])
    assert result.exit_code == 1
    assert "vrcholy: neshoda" in result.output.splitlines()
    assert "liší" in result.output


def test_relations_single_block(runner: CliRunner) -> None:
    """Test stěny s jediným blokem."""
    result = runner.invoke(main, ["relations", "123"])
    assert result.exit_code == 2


def test_qcheck(runner: CliRunner) -> None:
    """Test kvadratické podmínky."""
    result = runner.invoke(main, ["qcheck", "12|345678", "1234|567"])
    assert result.exit_code == 0
    assert result.output.strip() == "12|345|678"


def test_qcheck_sizes(runner: CliRunner) -> None:
    """Test nesouhlasících velikostí."""
    result = runner.invoke(main, ["qcheck", "12|34", "1|234"])
    assert result.exit_code == 2


# --- A∞ ---


def test_tensor_ops(runner: CliRunner) -> None:
    """Test výpisu Ψ^3."""
    result = runner.invoke(main, ["tensor-ops", "3"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "Ψ³ = σ_{3,2}"
    assert set(lines[1:]) == {"  + ψ²₀ψ²₀ (x) ψ³", "  + ψ³ (x) ψ²₁ψ²₀"}


def test_tensor_ops_algebra_json(runner: CliRunner) -> None:
    """Test JSON výstupu Φ^2."""
    result = runner.invoke(main, ["tensor-ops", "2", "--variance", "alg", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["variance"] == "algebra"
    assert len(data["terms"]) == 1


# --- Ověření ---


def test_verify_small(runner: CliRunner) -> None:
    """Test ověřovací sady do n = 2."""
    result = runner.invoke(main, ["verify", "--max-n", "2"])
    assert result.exit_code == 0
    assert "prošlo" in result.output


def test_verify_rows(runner: CliRunner) -> None:
    """Test, že sada obsahuje projekce, konfigurace i relace."""
    result = runner.invoke(main, ["verify", "--max-n", "3"])
    assert result.exit_code == 0
    for name in ("hrubá síla", "π zjemňuje θ", "φ∘h = id", "Přírůstkové csgn"):
        assert name in result.output


@pytest.mark.slow
def test_verify_full(runner: CliRunner) -> None:
    """Test celé ověřovací sady do n = 5."""
    result = runner.invoke(main, ["verify", "--max-n", "5"])
    assert result.exit_code == 0
    assert "CHYBA" not in result.output


def test_verify_invalid(runner: CliRunner) -> None:
    """Test --max-n 0."""
    result = runner.invoke(main, ["verify", "--max-n", "0"])
    assert result.exit_code == 2
