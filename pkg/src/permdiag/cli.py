"""Hlavní CLI rozhraní."""

from __future__ import annotations

import json
from collections.abc import Callable, Iterable
from itertools import permutations
from math import factorial
from pathlib import Path
from typing import Any, NoReturn, TypeVar

import click
import numpy as np
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from permdiag import __version__
from permdiag.ainfty import (
    SUPERSCRIPTS,
    Variance,
    interval_model,
    quadratic_relations,
    relation_matrix,
    render_tensor_term,
    tensor_model,
    tensor_operations,
    tensor_term_to_json,
)
from permdiag.config import Settings, check_n, get_default_n_cap, setup_logging
from permdiag.core import (
    Chain,
    OrderedPartition,
    boundary,
    chain_to_json,
    enumerate_faces,
    face_boundary,
    parse_partition,
    partition_to_json,
    tensor_chain_to_json,
    top_cell,
)
from permdiag.diagonal import (
    diagonal_top,
    primitive_terms,
    tensor_transpose,
    verify_coderivation,
)
from permdiag.errors import PermdiagError
from permdiag.matrices import (
    SHIFT_KINDS,
    Derivation,
    OrderedMatrix,
    csgn,
    csgn_shift_update,
    edge_sign,
    enumerate_configurations,
    enumerate_configurations_bruteforce,
    enumerate_edge_matrices,
    faces_of_matrix,
    matrix_to_json,
    passes_batch_rule,
    permutation_from_step,
    render_matrix,
    shift,
    step_from_permutation,
    transpose,
)
from permdiag.permcalc import (
    box_op,
    coassociativity_holds,
    cubical_vertices,
    faceword_factorizations,
    gamma,
    h_vertex,
    project_phi,
    quadratic_condition,
    rho,
    words_agree,
)
from permdiag.trees import (
    Cell,
    JClass,
    Target,
    boundary_projected,
    canonical_faceword,
    catalan,
    cells_boundary,
    cells_diagonal,
    cells_tensor_boundary,
    diagonal_assoc,
    diagonal_multi,
    faceword_to_json,
    faceword_to_partition,
    faceword_to_tree,
    fibers,
    image_dim,
    is_degenerate,
    is_degenerate_word,
    j_to_k,
    multi_to_assoc,
    partition_to_faceword,
    partition_to_tree,
    project,
    pushforward,
    render_cell,
    render_faceword,
    render_parenthesization,
)

console = Console()

FORMATS = ["text", "json", "latex"]
# Počty stěn P_n (uspořádaná Bellova čísla)
FUBINI = [1, 1, 3, 13, 75, 541, 4683, 47293]

F = TypeVar("F", bound=Callable[..., Any])


def format_option(func: F) -> F:
    return click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="text", help="Výstupní formát"
    )(func)


def output_option(func: F) -> F:
    return click.option(
        "--output", "-o", type=click.Path(dir_okay=False), default=None, help="Zapsat do souboru"
    )(func)


def mod2_option(func: F) -> F:
    return click.option("--mod2", is_flag=True, help="Koeficienty modulo 2")(func)


# --- Pomocné funkce výstupu ---


def _fail(e: Exception) -> NoReturn:
    console.print(f"[red]Chyba: {e}[/red]")
    raise SystemExit(2)


def _emit(lines: Iterable[str], output: str | None) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if output:
        Path(output).write_text(text, encoding="utf-8")
        console.print(f"[green]Zapsáno do {output}[/green]")
    else:
        click.echo(text, nl=False)


def _emit_json(data: Any, output: str | None) -> None:
    _emit([json.dumps(data, ensure_ascii=False, indent=2)], output)


def _sign(coef: int) -> str:
    return "+" if coef > 0 else "-"


def _tensor_lines(
    chain: Chain[Any], render: Callable[[Any], str], latex: bool = False
) -> list[str]:
    tensor = r" \otimes " if latex else " (x) "
    return [f"{_sign(coef)} {render(u)}{tensor}{render(v)}" for (u, v), coef in chain]


def _cell_json(cell: Cell) -> dict[str, Any]:
    if isinstance(cell, JClass):
        return partition_to_json(cell.representative)
    return faceword_to_json(canonical_faceword(cell))


def _cells_json(chain: Chain[tuple[Cell, Cell]]) -> list[dict[str, Any]]:
    return [{"coef": coef, "face": [_cell_json(u), _cell_json(v)]} for (u, v), coef in chain]


def _settings(ctx: click.Context) -> Settings:
    settings = ctx.find_object(Settings)
    return settings if settings is not None else Settings(n_cap=get_default_n_cap())


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", is_flag=True, help="Podrobné logování")
@click.option("--n-cap", type=int, default=None, help="Horní mez pro n (výchozí 8)")
@click.pass_context
def main(ctx: click.Context, verbose: bool, n_cap: int | None) -> None:
    """PERMDIAG - Diagonály na permutaedrech, multiplihedrech a asociaedrech."""
    setup_logging(verbose)
    try:
        cap = n_cap if n_cap is not None else get_default_n_cap()
        if cap < 1:
            raise PermdiagError("--n-cap musí být kladné")
    except PermdiagError as e:
        _fail(e)
    ctx.obj = Settings(n_cap=cap, verbose=verbose)


@main.command("perm-diagonal")
@click.argument("n", type=int)
@format_option
@output_option
@mod2_option
@click.pass_context
def perm_diagonal(ctx: click.Context, n: int, fmt: str, output: str | None, mod2: bool) -> None:
    """Vypíše Δ_P na vrchní buňce P_N."""
    try:
        check_n(n, _settings(ctx))
        if n < 1:
            raise PermdiagError("N musí být alespoň 1")
        chain = diagonal_top(n - 1)
        if mod2:
            chain = chain.mod2()
        if fmt == "json":
            _emit_json({"n": n, "terms": tensor_chain_to_json(chain)}, output)
        else:
            _emit(_tensor_lines(chain, str, latex=fmt == "latex"), output)
    except PermdiagError as e:
        _fail(e)


@main.command("assoc-diagonal")
@click.argument("n", type=int)
@click.option(
    "--method",
    type=click.Choice(["projection", "direct", "both"]),
    default="projection",
    help="Projekcí z P, přímo ze soustavy nerovností, nebo obojí s porovnáním",
)
@format_option
@output_option
@mod2_option
@click.pass_context
def assoc_diagonal(
    ctx: click.Context, n: int, method: str, fmt: str, output: str | None, mod2: bool
) -> None:
    """Vypíše Δ_K(e^N) na asociaedru K_{N+2}."""
    try:
        check_n(n + 1, _settings(ctx))
        chain = diagonal_assoc(n, "direct" if method == "direct" else "projection")
        other = diagonal_assoc(n, "direct") if method == "both" else chain
        if mod2:
            chain, other = chain.mod2(), other.mod2()
        if fmt == "json":
            _emit_json({"n": n, "terms": _cells_json(chain)}, output)
        else:
            latex = fmt == "latex"
            _emit(_tensor_lines(chain, lambda c: render_cell(c, latex), latex), output)
    except PermdiagError as e:
        _fail(e)
    if method == "both":
        if chain != other:
            console.print("[red]Projekce a přímý výpočet se liší[/red]")
            raise SystemExit(1)
        click.echo("OK")


@main.command("multi-diagonal")
@click.argument("n", type=int)
@format_option
@output_option
@mod2_option
@click.pass_context
def multi_diagonal(ctx: click.Context, n: int, fmt: str, output: str | None, mod2: bool) -> None:
    """Vypíše Δ_J na vrchní buňce J_{N+1}."""
    try:
        check_n(n + 1, _settings(ctx))
        chain = diagonal_multi(n)
        if mod2:
            chain = chain.mod2()
        if fmt == "json":
            _emit_json({"n": n, "terms": _cells_json(chain)}, output)
        else:
            _emit(_tensor_lines(chain, render_cell, latex=fmt == "latex"), output)
    except PermdiagError as e:
        _fail(e)


@main.command("boundary")
@click.argument("part")
@format_option
@output_option
@mod2_option
def boundary_cmd(part: str, fmt: str, output: str | None, mod2: bool) -> None:
    """Vypíše hranici stěny PART (např. "12|3")."""
    try:
        u = parse_partition(part)
        chain = face_boundary(u)
        if mod2:
            chain = chain.mod2()
        if fmt == "json":
            _emit_json({"face": partition_to_json(u), "boundary": chain_to_json(chain)}, output)
            return
        ordered = sorted(chain.items(), key=lambda item: (item[1] < 0, item[0]))
        line = "  ".join(f"{_sign(coef)} {face}" for face, coef in ordered)
        _emit([line or "0"], output)
    except PermdiagError as e:
        _fail(e)


@main.command()
@click.argument("n", type=int)
@click.option("--count", is_flag=True, help="Vypsat jen počet matic")
@format_option
@output_option
@click.pass_context
def configs(ctx: click.Context, n: int, count: bool, fmt: str, output: str | None) -> None:
    """Vypíše konfigurační matice nad {1..N+1} se znaménky csgn."""
    try:
        check_n(n + 1, _settings(ctx))
        found = enumerate_configurations(n)
        if count:
            _emit([str(len(found))], output)
            return
        if fmt == "json":
            data = [
                {"sign": c.sign, "matrix": matrix_to_json(c.matrix)}
                for c in found
            ]
            _emit_json(data, output)
            return
        if output:
            lines = []
            for c in found:
                column, row = faces_of_matrix(c.matrix)
                rows = "; ".join(" ".join(str(x) for x in r) for r in c.matrix.entries)
                lines.append(f"{_sign(c.sign)} [{rows}] {column} (x) {row}")
            _emit(lines, output)
            return
        for c in found:
            column, row = faces_of_matrix(c.matrix)
            console.print(render_matrix(c.matrix, title=f"{_sign(c.sign)} {column} ⊗ {row}"))
    except PermdiagError as e:
        _fail(e)


@main.command()
@click.argument("part")
@format_option
def faceword(part: str, fmt: str) -> None:
    """Zobrazí slovo stěnových operátorů, strom a degenerace stěny PART."""
    try:
        u = parse_partition(part)
        word = partition_to_faceword(u)
        if fmt == "json":
            data = {
                "face": partition_to_json(u),
                "faceword": faceword_to_json(word),
                "tree": render_parenthesization(u),
                "degenerate": {"K": is_degenerate(u, "K"), "J": is_degenerate(u, "J")},
            }
            click.echo(json.dumps(data, ensure_ascii=False, indent=2))
            return
        if fmt == "latex":
            click.echo(render_faceword(word, latex=True))
            return
        table = Table(title=f"Stěna {u}")
        table.add_column("Vlastnost", style="cyan")
        table.add_column("Hodnota", style="yellow")
        table.add_row("Slovo", render_faceword(word))
        table.add_row("Strom", render_parenthesization(u))
        table.add_row("Dimenze", str(u.dim))
        table.add_row("Degenerovaná v K", "ano" if is_degenerate(u, "K") else "ne")
        table.add_row("Degenerovaná v J", "ano" if is_degenerate(u, "J") else "ne")
        console.print(table)
    except PermdiagError as e:
        _fail(e)


@main.command("tonks-classes")
@click.argument("n", type=int)
@click.option("--target", type=click.Choice(["K", "J"]), default="K", help="Cílový polytop")
@click.option("--all", "-a", "show_all", is_flag=True, help="Včetně jednoprvkových tříd")
@format_option
@output_option
@click.pass_context
def tonks_classes(
    ctx: click.Context, n: int, target: str, show_all: bool, fmt: str, output: str | None
) -> None:
    """Vypíše vlákna projekce stěn P_N do K_{N+1} (nebo J_N)."""
    try:
        check_n(n, _settings(ctx))
        kind: Target = "K" if target == "K" else "J"
        classes = [c for c in fibers(n, kind) if show_all or len(c) > 1]
        if fmt == "json":
            data = [
                {
                    "members": [partition_to_json(u) for u in c],
                    "cell": _cell_json(project(c[0], kind).cell),
                }
                for c in classes
            ]
            _emit_json(data, output)
            return
        lines = [
            f"[{', '.join(str(u) for u in c)}] -> {render_cell(project(c[0], kind).cell)}"
            for c in classes
        ]
        _emit(lines, output)
    except PermdiagError as e:
        _fail(e)


@main.command()
@click.argument("part")
def relations(part: str) -> None:
    """Vypíše obě δ-faktorizace stěny PART a porovná je na vrcholech."""
    try:
        u = parse_partition(part)
        upper, lower = faceword_factorizations(u)
        for word in (upper, lower):
            click.echo(" ".join(f"δ({ab})" for ab in word))
        agree = words_agree(u)
    except PermdiagError as e:
        _fail(e)
    if not agree:
        click.echo("vrcholy: neshoda")
        console.print("[red]Faktorizace se na vrcholech liší[/red]")
        raise SystemExit(1)
    click.echo("vrcholy: shoda")


@main.command()
@click.argument("ab")
@click.argument("cd")
def qcheck(ab: str, cd: str) -> None:
    """Spočte závorku [A|B; C|D] kvadratické relace."""
    try:
        result = quadratic_condition(parse_partition(ab), parse_partition(cd))
        click.echo(str(result) if result is not None else "degenerate")
    except PermdiagError as e:
        _fail(e)


@main.command("tensor-ops")
@click.argument("n", type=int)
@click.option(
    "--variance", type=click.Choice(["alg", "coalg"]), default="coalg", help="Algebra/koalgebra"
)
@format_option
@output_option
@click.pass_context
def tensor_ops(ctx: click.Context, n: int, variance: str, fmt: str, output: str | None) -> None:
    """Vypíše operace Φ^N nebo Ψ^N tenzorového součinu."""
    try:
        check_n(n, _settings(ctx))
        kind: Variance = "algebra" if variance == "alg" else "coalgebra"
        terms = tensor_operations(n, kind)
        if fmt == "json":
            data = {"n": n, "variance": kind, "terms": [tensor_term_to_json(t) for t in terms]}
            _emit_json(data, output)
            return
        latex = fmt == "latex"
        wrapper = terms[0].wrapper
        if latex:
            head = (r"\Phi" if kind == "algebra" else r"\Psi") + f"^{{{n}}} = " + wrapper
        else:
            symbol = "Φ" if kind == "algebra" else "Ψ"
            head = f"{symbol}{str(n).translate(SUPERSCRIPTS)} = {wrapper}".rstrip()
        lines = [head, *(f"  {render_tensor_term(t, latex)}" for t in terms)]
        _emit(lines, output)
    except PermdiagError as e:
        _fail(e)


# --- Ověření ---


Row = tuple[str, str, bool]
VARIANCES: tuple[Variance, ...] = ("algebra", "coalgebra")

# Ψ¹–Ψ⁴ na A⊗B
TENSOR_EXPECTED: dict[int, set[str]] = {
    1: {"+ ψ¹ (x) 1", "+ 1 (x) ψ¹"},
    2: {"+ ψ² (x) ψ²"},
    3: {"+ ψ²₀ψ²₀ (x) ψ³", "+ ψ³ (x) ψ²₁ψ²₀"},
    4: {
        "+ ψ²₀ψ²₀ψ²₀ (x) ψ⁴",
        "+ ψ⁴ (x) ψ²₂ψ²₁ψ²₀",
        "+ ψ³₀ψ²₀ (x) ψ²₁ψ³₀",
        "+ ψ³₀ψ²₀ (x) ψ³₁ψ²₀",
        "+ ψ²₁ψ³₀ (x) ψ³₁ψ²₀",
        "- ψ²₀ψ³₀ (x) ψ²₂ψ³₀",
    },
}


def _polytope_rows(max_n: int) -> list[Row]:
    rows: list[Row] = []
    for n in range(1, max_n + 2):
        faces = enumerate_faces(n)
        if n < len(FUBINI):
            rows.append(("Počet stěn P_n", str(n), len(faces) == FUBINI[n]))
        squares = all(boundary(face_boundary(u)).is_zero() for u in faces)
        rows.append(("∂² = 0", str(n), squares))
    for n in range(1, max_n + 1):
        rows.append(("Koderivace Δ_P", str(n), verify_coderivation(n).ok))
        terms = diagonal_top(n)
        closed = set(tensor_transpose(terms).keys()) == set(terms.keys())
        rows.append(("Uzavřenost na transpozici", str(n), closed))
        unit = all(abs(coef) == 1 for _, coef in terms)
        top = top_cell(n + 1)
        ends = sorted(pair for pair, _ in primitive_terms(terms))
        identity = OrderedPartition.vertex(range(1, n + 2))
        reverse = OrderedPartition.vertex(range(n + 1, 0, -1))
        expected = sorted([(identity, top), (top, reverse)])
        rows.append(("Koeficienty ±1, primitivní členy", str(n), unit and ends == expected))
    return rows


def _matrix_rows(max_n: int) -> list[Row]:
    rows: list[Row] = []
    for m in range(1, max_n + 2):
        sigmas = list(permutations(range(1, m + 1)))
        steps = {step_from_permutation(s) for s in sigmas}
        roundtrip = all(permutation_from_step(step_from_permutation(s)) == s for s in sigmas)
        rows.append(("Krokové matice", str(m), len(steps) == factorial(m) and roundtrip))
        rows.append(
            (
                "Hranové znaménko",
                str(m),
                all(
                    csgn(e, Derivation(base=e, right_moves=(), down_moves=())) == edge_sign(e)
                    for e in enumerate_edge_matrices(m)
                ),
            )
        )
    for n in range(0, max_n + 1):
        configs = enumerate_configurations(n)
        found = {c.matrix: c.sign for c in configs}
        brute = enumerate_configurations_bruteforce(n)
        rows.append(("Konfigurace = hrubá síla", str(n), set(found) == brute))
        closed = {transpose(matrix) for matrix in found} == set(found)
        rows.append(("Konfigurace: transpozice", str(n), closed))
        rows.append(("Přírůstkové csgn", str(n), _incremental_signs_hold(n, found)))
        rows.append(("Komutace posunů", str(n), all(_shifts_commute(c.matrix) for c in configs)))
    return rows


def _incremental_signs_hold(n: int, signs: dict[OrderedMatrix, int]) -> bool:
    for sigma in permutations(range(1, n + 2)):
        step = step_from_permutation(sigma)
        for kind in SHIFT_KINDS:
            for i in range(1, step.q + 1):
                for j in range(1, step.p + 1):
                    image = shift(step, kind, i, j)
                    if image is None or not passes_batch_rule(step, kind, i, j):
                        continue
                    if image not in signs:
                        return False
                    if signs[image] * signs[step] != csgn_shift_update(step, kind, i, j):
                        return False
    return True


def _shifts_commute(f: OrderedMatrix) -> bool:
    for i in range(1, f.q):
        for j in range(1, f.p):
            right = shift(f, "right", i, j)
            down = shift(f, "down", i, j)
            first = shift(right, "down", i, j + 1) if right is not None else None
            second = shift(down, "right", i + 1, j) if down is not None else None
            if first is not None and second is not None and first != second:
                return False
    return True


def _tree_rows(max_n: int) -> list[Row]:
    rows: list[Row] = []
    targets: tuple[Target, ...] = ("K", "J")
    for n in range(1, max_n + 2):
        faces = enumerate_faces(n)
        roundtrip = all(faceword_to_partition(partition_to_faceword(u)) == u for u in faces)
        trees = {partition_to_tree(u) for u in faces}
        roundtrip = roundtrip and all(faceword_to_tree(canonical_faceword(t)) == t for t in trees)
        rows.append(("Strom <-> slovo", str(n), roundtrip))
        criteria = all(
            is_degenerate(u, t) == is_degenerate_word(partition_to_faceword(u), t)
            and is_degenerate(u, t) == (image_dim(u, t) < u.dim)
            for u in faces
            for t in targets
        )
        rows.append(("Kritéria degenerace", str(n), criteria))
    for n in range(1, max_n + 1):
        vertices = sum(1 for f in fibers(n, "K") if any(u.is_vertex() for u in f))
        rows.append(("Vrcholy K = Catalan", str(n), vertices == catalan(n)))
        for t in targets:
            pushed = all(
                pushforward(face_boundary(u), t)
                == cells_boundary(pushforward(Chain.single(u), t))
                for u in enumerate_faces(n)
            )
            rows.append((f"Projekce do {t} je řetězcové zobrazení", str(n), pushed))
        rows.append(("π zjemňuje θ", str(n), _projection_refines(n)))
    for n in range(0, max_n + 1):
        projected = diagonal_assoc(n, "projection")
        multi = diagonal_multi(n)
        direct = diagonal_assoc(n, "direct")
        rows.append(("Δ_K projekce = přímo", str(n), projected == direct))
        rows.append(("Δ_J -> K = Δ_K", str(n), multi_to_assoc(multi) == projected))
        if n >= 1:
            diagonals: tuple[tuple[Target, Chain[tuple[Cell, Cell]]], ...] = (
                ("K", projected),
                ("J", multi),
            )
            for t, diag in diagonals:
                lhs = cells_tensor_boundary(diag)
                rhs = cells_diagonal(boundary_projected(n, t))
                rows.append((f"Δ_{t} je řetězcové zobrazení", str(n), lhs == rhs))
    return rows


def _projection_refines(n: int) -> bool:
    for u in enumerate_faces(n):
        if is_degenerate(u, "J"):
            continue
        j_image = project(u, "J")
        if not isinstance(j_image.cell, JClass):
            return False
        through_j, direct = j_to_k(j_image.cell), project(u, "K")
        if (through_j.cell, through_j.degenerate) != (direct.cell, direct.degenerate):
            return False
        if not direct.degenerate and j_image.sign * through_j.sign != direct.sign:
            return False
    return True


def _relation_rows(max_n: int) -> list[Row]:
    rows: list[Row] = []
    for n in range(1, max_n + 1):
        fixed = cubical_vertices(n)
        others = (v for v in permutations(range(1, n + 1)) if v not in fixed)
        cubical = len(fixed) == 2 ** (n - 1) and all(gamma(rho(v)) == v for v in fixed)
        cubical = cubical and all(gamma(rho(v)) != v for v in others)
        rows.append(("Pevné body γρ", str(n), cubical))
        splits = [(r, s, n + 2 - r - s) for r in range(1, n + 1) for s in range(1, n + 2 - r)]
        coassoc = all(
            coassociativity_holds(u, r, s, t) for u in enumerate_faces(n) for r, s, t in splits
        )
        rows.append(("Koasociativita Δ_{r,s}", str(n), coassoc))
    for n in range(2, max_n + 1):
        rows.append(("φ∘h = id", str(n), _phi_inverts_h(n)))
    for n in range(3, max_n + 2):
        three = [u for u in enumerate_faces(n) if u.num_blocks == 3]
        brackets = all(_brackets_hold(u) for u in three)
        rows.append(("Závorka [A|B; C|D] na 3 blocích", str(n), brackets))
    boxes = [
        box_op({1, 2}, [{3, 4, 5}, {6, 7, 8}]) == parse_partition("1234|567"),
        box_op({6, 7, 8}, [{1, 2}, {3, 4, 5}]) == parse_partition("12|34567"),
    ]
    rows.append(("Operace □", "8", all(boxes)))
    # od n = 4 se slova liší, např. na 1|2|34
    for n in range(2, min(max_n + 1, 3) + 1):
        faces = [u for u in enumerate_faces(n) if u.num_blocks >= 2]
        rows.append(("δ-faktorizace (n ≤ 3)", str(n), all(words_agree(u) for u in faces)))
    return rows


def _brackets_hold(u: OrderedPartition) -> bool:
    upper, lower = faceword_factorizations(u)
    return (
        quadratic_condition(upper[0], upper[1]) == u
        and quadratic_condition(lower[0], lower[1]) == u
    )


def _phi_inverts_h(n: int) -> bool:
    for ab in enumerate_faces(n):
        if ab.num_blocks != 2:
            continue
        first, second = ab.blocks
        ba = OrderedPartition((second, first))
        ell = len(first) if n in second else len(second)
        for x in permutations(range(1, ell + 1)):
            for y in permutations(range(1, n - ell + 1)):
                c = h_vertex(ab, x, y)
                if project_phi(ab, c) != (x, y) or project_phi(ba, c) != (x, y):
                    return False
    return True


def _ainfty_rows(max_n: int) -> list[Row]:
    rows: list[Row] = []
    for n in range(1, max_n + 1):
        counts = all(len(quadratic_relations(n, v)) == n * (n + 1) // 2 for v in VARIANCES)
        rows.append(("Počet členů relace", str(n), counts))
    for n, expected in TENSOR_EXPECTED.items():
        found = {render_tensor_term(t) for t in tensor_operations(n, "coalgebra")}
        rows.append((f"Ψ{str(n).translate(SUPERSCRIPTS)}", str(n), found == expected))
    model = tensor_model(interval_model(), interval_model())
    for n in range(1, 4):
        rows.append(("A∞ relace na I⊗I", str(n), not np.any(relation_matrix(n, model))))
    return rows


def _suite_results(max_n: int) -> list[Row]:
    return (
        _polytope_rows(max_n)
        + _matrix_rows(max_n)
        + _tree_rows(max_n)
        + _relation_rows(max_n)
        + _ainfty_rows(max_n)
    )


@main.command()
@click.option("--max-n", type=int, default=4, help="Největší n v ověřovaných sadách")
@click.pass_context
def verify(ctx: click.Context, max_n: int) -> None:
    """Ověří invarianty všech modulů (stěny, matice, projekce, relace, A∞)."""
    try:
        check_n(max_n + 1, _settings(ctx))
        if max_n < 1:
            raise PermdiagError("--max-n musí být alespoň 1")
        console.print(f"[cyan]Ověřuji invarianty do n={max_n}...[/cyan]")
        results = _suite_results(max_n)
    except PermdiagError as e:
        _fail(e)

    table = Table(title="Ověření invariantů")
    table.add_column("Sada", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("Výsledek", justify="center")
    for name, n, ok in results:
        table.add_row(name, n, "[green]OK[/green]" if ok else "[red]CHYBA[/red]")
    console.print(table)

    failed = sum(1 for _, _, ok in results if not ok)
    if failed:
        console.print(Panel(f"[red]{failed} kontrol selhalo[/red]", title="Výsledek"))
        raise SystemExit(1)
    console.print(Panel(f"[green]Všech {len(results)} kontrol prošlo[/green]", title="Výsledek"))


if __name__ == "__main__":
    main()
