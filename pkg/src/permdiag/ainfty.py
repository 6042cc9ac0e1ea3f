"""Tenzorový součin A∞-(ko)algeber: symbolické operace a jejich číselné vyhodnocení.

Krok (k, i, j) znamená 1^{⊗i}⊗f^k⊗1^{⊗j}; kroky složení jsou uloženy v pořadí
aplikace, text je píše od posledního aplikovaného.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Literal

import numpy as np
import numpy.typing as npt

from permdiag.errors import FaceWordError, ModelError
from permdiag.trees import FaceWord, PlanarTree, canonical_faceword, diagonal_assoc

logger = logging.getLogger(__name__)

Variance = Literal["algebra", "coalgebra"]
Step = tuple[int, int, int]
IntMatrix = npt.NDArray[np.int64]

SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
SYMBOLS = {"algebra": ("φ", r"\varphi"), "coalgebra": ("ψ", r"\psi")}


# --- Složení ---


@dataclass(frozen=True)
class CompositionTerm:
    """Složení φ^k_{i,j} (resp. ψ^k_{i,j}) se znaménkem."""

    variance: Variance
    steps: tuple[Step, ...]  # v pořadí aplikace
    sign: int = 1

    def __post_init__(self) -> None:
        width = self.width_in
        for k, i, j in self.steps:
            before = i + k + j if self.variance == "algebra" else i + 1 + j
            if before != width or k < 1 or i < 0 or j < 0:
                raise FaceWordError(f"Krok ({k},{i},{j}) neodpovídá šířce {width}")
            width = i + 1 + j if self.variance == "algebra" else i + k + j

    @property
    def width_in(self) -> int:
        if self.variance == "algebra" and self.steps:
            k, i, j = self.steps[0]
            return i + k + j
        return 1

    @property
    def width_out(self) -> int:
        if self.variance == "coalgebra" and self.steps:
            k, i, j = self.steps[-1]
            return i + k + j
        return 1

    @property
    def width(self) -> int:
        """Počet tenzorových faktorů na straně s více faktory."""
        return max(self.width_in, self.width_out)

    @property
    def degree(self) -> int:
        """|f^k| = k - 2, sečteno přes kroky."""
        return sum(k - 2 for k, _, _ in self.steps)

    def __str__(self) -> str:
        return render_composition(self)


def render_composition(term: CompositionTerm, latex: bool = False) -> str:
    """ψ³, ψ²₀ψ²₀ nebo \\psi^{2}_{0}\\psi^{2}_{0}; identita je "1"."""
    if not term.steps:
        return "1"
    plain, tex = SYMBOLS[term.variance]
    single = len(term.steps) == 1
    parts = []
    for k, i, _ in reversed(term.steps):
        if latex:
            parts.append(f"{tex}^{{{k}}}" + ("" if single else f"_{{{i}}}"))
        else:
            sub = "" if single else str(i).translate(SUBSCRIPTS)
            parts.append(f"{plain}{str(k).translate(SUPERSCRIPTS)}{sub}")
    return "".join(parts)


def faceword_to_composition(word: FaceWord, n: int, variance: Variance) -> CompositionTerm:
    """Přiřadí stěně K_n složení operací.

    Vrchní buňka dává (-1)^n φ^n, resp. ψ^n. Dvojice d_{(i,ℓ)} dává
    φ^{w-ℓ}φ^{ℓ+1}_{i,w-ℓ-1-i}, resp. ψ^{ℓ+1}_{i,w-ℓ-1-i}ψ^{w-ℓ}, kde w je
    aktuální šířka; úrovně se skládají zevnitř, dvojice jedné úrovně zprava doleva.
    """
    if word.size != n - 1:
        raise FaceWordError(f"Slovo {word} není stěnou K_{n}")
    width = n
    steps: list[Step] = []
    for level in word.levels:
        for i, ell in reversed(level):
            steps.append((ell + 1, i, width - ell - 1 - i))
            width -= ell
    steps.append((width, 0, 0))
    sign = (-1) ** n if variance == "algebra" and not word.levels else 1
    if variance == "coalgebra":
        steps.reverse()
    return CompositionTerm(variance=variance, steps=tuple(steps), sign=sign)


def identity(variance: Variance) -> CompositionTerm:
    return CompositionTerm(variance=variance, steps=())


# --- Tenzorové operace ---


@dataclass(frozen=True)
class TensorOpTerm:
    """Sčítanec Φ^n (resp. Ψ^n): ±(levé složení ⊗ pravé složení) v obalu σ."""

    sign: int
    left: CompositionTerm
    right: CompositionTerm
    wrapper: str  # "σ_{n,2}", "σ_{2,n}" nebo "" pro n = 1


def wrapper_tag(n: int, variance: Variance) -> str:
    if n == 1:
        return ""
    return f"σ_{{{n},2}}" if variance == "coalgebra" else f"σ_{{2,{n}}}"


def tensor_operations(n: int, variance: Variance) -> list[TensorOpTerm]:
    """Operace Φ^n nebo Ψ^n na A⊗B odvozené z Δ_K(e^{n-2})."""
    if n < 1:
        raise FaceWordError(f"n musí být alespoň 1, ne {n}")
    tag = wrapper_tag(n, variance)
    if n == 1:
        primitive = CompositionTerm(variance=variance, steps=((1, 0, 0),))
        return [
            TensorOpTerm(1, primitive, identity(variance), tag),
            TensorOpTerm(1, identity(variance), primitive, tag),
        ]
    terms: list[TensorOpTerm] = []
    for (left, right), coef in diagonal_assoc(n - 2):
        assert isinstance(left, PlanarTree) and isinstance(right, PlanarTree)
        lc = faceword_to_composition(canonical_faceword(left), n, variance)
        rc = faceword_to_composition(canonical_faceword(right), n, variance)
        terms.append(TensorOpTerm(coef * lc.sign * rc.sign, _unsigned(lc), _unsigned(rc), tag))
    logger.debug("Tenzorové operace n=%d: %d členů", n, len(terms))
    return terms


def _unsigned(term: CompositionTerm) -> CompositionTerm:
    return CompositionTerm(variance=term.variance, steps=term.steps)


def render_tensor_term(term: TensorOpTerm, latex: bool = False) -> str:
    sign = "+" if term.sign > 0 else "-"
    tensor = r" \otimes " if latex else " (x) "
    left = render_composition(term.left, latex)
    right = render_composition(term.right, latex)
    return f"{sign} {left}{tensor}{right}"


def tensor_term_to_json(term: TensorOpTerm) -> dict[str, Any]:
    return {
        "sign": term.sign,
        "left": [list(step) for step in term.left.steps],
        "right": [list(step) for step in term.right.steps],
        "wrapper": term.wrapper,
    }


def tensor_term_from_json(data: Mapping[str, Any], variance: Variance) -> TensorOpTerm:
    def composition(steps: Sequence[Sequence[int]]) -> CompositionTerm:
        return CompositionTerm(
            variance=variance, steps=tuple((int(k), int(i), int(j)) for k, i, j in steps)
        )

    return TensorOpTerm(
        sign=int(data["sign"]),
        left=composition(data["left"]),
        right=composition(data["right"]),
        wrapper=str(data.get("wrapper", "")),
    )


# --- Kvadratické relace ---


def quadratic_relations(n: int, variance: Variance) -> list[CompositionTerm]:
    """Členy relace stupně n.

    Algebra: Σ (-1)^{ℓ(i+1)} φ^{n-ℓ}φ^{ℓ+1}_{i,n-ℓ-1-i}.
    Koalgebra: Σ (-1)^{ℓ(n+i+1)} ψ^{ℓ+1}_{i,n-ℓ-1-i}ψ^{n-ℓ}.
    """
    if n < 1:
        raise FaceWordError(f"n musí být alespoň 1, ne {n}")
    terms: list[CompositionTerm] = []
    for ell in range(n):
        for i in range(n - ell):
            inner: Step = (ell + 1, i, n - ell - 1 - i)
            outer: Step = (n - ell, 0, 0)
            if variance == "algebra":
                sign = (-1) ** ((ell * (i + 1)) % 2)
                steps = (inner, outer)
            else:
                sign = (-1) ** ((ell * (n + i + 1)) % 2)
                steps = (outer, inner)
            terms.append(CompositionTerm(variance=variance, steps=steps, sign=sign))
    return terms


# --- Číselné modely ---


@dataclass
class GradedModel:
    """Graduovaný modul s celočíselnými maticemi operací.

    Chybějící arita znamená nulovou operaci. Koalgebraická operace arity k má tvar
    (dim^k, dim), algebraická (dim, dim^k).
    """

    degrees: tuple[int, ...]  # stupně bázových prvků
    variance: Variance
    operations: dict[int, IntMatrix] = field(default_factory=dict)
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for k, matrix in self.operations.items():
            if matrix.shape != self._shape(k):
                raise ModelError(
                    f"Operace arity {k} má tvar {matrix.shape}, očekáván {self._shape(k)}"
                )

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def _shape(self, k: int) -> tuple[int, int]:
        big = self.dim**k
        return (big, self.dim) if self.variance == "coalgebra" else (self.dim, big)

    def operation(self, k: int) -> IntMatrix:
        if k in self.operations:
            return self.operations[k]
        return np.zeros(self._shape(k), dtype=np.int64)


def tensor_degrees(degrees: Sequence[int], width: int) -> npt.NDArray[np.int64]:
    """Stupně bázových tenzorů V^{⊗width} v lexikografickém pořadí."""
    result = np.zeros(1, dtype=np.int64)
    base = np.asarray(degrees, dtype=np.int64)
    for _ in range(width):
        result = np.add.outer(result, base).ravel()
    return result


def _step_matrix(model: GradedModel, step: Step) -> IntMatrix:
    """Matice 1^{⊗i}⊗f^k⊗1^{⊗j} s Koszulovým znaménkem (-1)^{|f|(|x_1|+...+|x_i|)}."""
    k, i, j = step
    parity = ((k - 2) * tensor_degrees(model.degrees, i)) % 2
    left = np.diag(np.where(parity == 1, -1, 1)).astype(np.int64)
    right = np.eye(model.dim**j, dtype=np.int64)
    return np.kron(np.kron(left, model.operation(k)), right)


def numeric_evaluate(term: CompositionTerm, model: GradedModel) -> IntMatrix:
    """Složení jako celočíselná matice.

    Raises:
        ModelError: Pokud varianta nebo rozměry nesedí
    """
    if term.variance != model.variance:
        raise ModelError(f"Člen je {term.variance}, model {model.variance}")
    result = np.eye(model.dim**term.width_in, dtype=np.int64)
    for step in term.steps:
        matrix = _step_matrix(model, step)
        if matrix.shape[1] != result.shape[0]:
            raise ModelError(f"Krok {step} nenavazuje na rozměr {result.shape[0]}")
        result = matrix @ result
    return term.sign * result


def relation_matrix(n: int, model: GradedModel) -> IntMatrix:
    """Součet členů kvadratické relace stupně n v modelu."""
    terms = quadratic_relations(n, model.variance)
    return sum((numeric_evaluate(t, model) for t in terms[1:]), numeric_evaluate(terms[0], model))


def interval_model() -> GradedModel:
    """DG koalgebra intervalu: vrcholy v0, v1 ve stupni 0, hrana e ve stupni 1.

    ∂e = v1 - v0, Δv = v⊗v, Δe = v0⊗e + e⊗v1, ψ^{k≥3} = 0.
    """
    v0, v1, e = 0, 1, 2
    d = np.zeros((3, 3), dtype=np.int64)
    d[v1, e], d[v0, e] = 1, -1
    delta = np.zeros((9, 3), dtype=np.int64)
    delta[3 * v0 + v0, v0] = 1
    delta[3 * v1 + v1, v1] = 1
    delta[3 * v0 + e, e] = 1
    delta[3 * e + v1, e] = 1
    return GradedModel(
        degrees=(0, 0, 1),
        variance="coalgebra",
        operations={1: d, 2: delta},
        labels=("v0", "v1", "e"),
    )


def _index(digits: Sequence[int], base: int) -> int:
    value = 0
    for digit in digits:
        value = value * base + digit
    return value


def _shuffle_matrix(a: Sequence[int], b: Sequence[int], n: int) -> IntMatrix:
    """σ_{n,2}: A^{⊗n}⊗B^{⊗n} -> (A⊗B)^{⊗n} s Koszulovými znaménky."""
    da, db = len(a), len(b)
    size = (da * db) ** n
    matrix = np.zeros((size, size), dtype=np.int64)
    for ai in product(range(da), repeat=n):
        for bi in product(range(db), repeat=n):
            source = _index(ai, da) * db**n + _index(bi, db)
            target = _index(tuple(x * db + y for x, y in zip(ai, bi)), da * db)
            exponent = sum(b[bi[s]] * a[ai[t]] for s in range(n) for t in range(s + 1, n))
            matrix[target, source] = -1 if exponent % 2 else 1
    return matrix


def tensor_model(a: GradedModel, b: GradedModel, max_arity: int = 3) -> GradedModel:
    """Model A⊗B s operacemi Ψ^n = σ_{n,2}∘ι(Σ ± levé⊗pravé) pro n ≤ max_arity."""
    if a.variance != "coalgebra" or b.variance != "coalgebra":
        raise ModelError("Tenzorový model je definován pro koalgebry")
    degrees = tuple(x + y for x in a.degrees for y in b.degrees)
    operations: dict[int, IntMatrix] = {}
    deg_a = np.asarray(a.degrees, dtype=np.int64)
    for n in range(1, max_arity + 1):
        shuffle = _shuffle_matrix(a.degrees, b.degrees, n)
        total = np.zeros((len(degrees) ** n, len(degrees)), dtype=np.int64)
        for term in tensor_operations(n, "coalgebra"):
            left = numeric_evaluate(term.left, a)
            right = numeric_evaluate(term.right, b)
            # ι(f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y)
            iota = np.where((term.right.degree * deg_a) % 2 == 1, -1, 1)
            signs = np.repeat(iota, b.dim).astype(np.int64)
            total += term.sign * (shuffle @ (np.kron(left, right) * signs))
        operations[n] = total
    labels = tuple(f"{x}⊗{y}" for x in a.labels for y in b.labels)
    return GradedModel(degrees=degrees, variance="coalgebra", operations=operations, labels=labels)
