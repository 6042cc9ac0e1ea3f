"""Diagonála Δ_P na celulárních řetězcích permutaedrů."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from permdiag.core import (
    Blocks,
    Chain,
    OrderedPartition,
    TensorChain,
    TensorPair,
    boundary,
    relabel_blocks,
    tensor_boundary,
    top_cell,
)
from permdiag.errors import PartitionError
from permdiag.matrices import enumerate_configurations, faces_of_matrix

logger = logging.getLogger(__name__)

# (levé bloky, pravé bloky, dim pravých faktorů, znaménko)
_Partial = tuple[Blocks, Blocks, int, int]


@lru_cache(maxsize=None)
def diagonal_top(n: int) -> TensorChain:
    """Δ_P na vrchní buňce P_{n+1}: Σ csgn(F)·c(F)⊗r(F)."""
    if n < 0:
        raise PartitionError(f"n musí být nezáporné, ne {n}")
    terms = [(faces_of_matrix(c.matrix), c.sign) for c in enumerate_configurations(n)]
    result: TensorChain = Chain.from_terms(terms)
    logger.debug("Δ_P(%d): %d členů", n + 1, len(result))
    return result


def diagonal_face(u: OrderedPartition) -> TensorChain:
    """Δ_P na stěně u = P_{#U_1}×...×P_{#U_p} s Koszulovými znaménky."""
    partial: list[_Partial] = [((), (), 0, 1)]
    for block in u.blocks:
        factor = diagonal_top(len(block) - 1)
        extended: list[_Partial] = []
        for left, right, right_dim, sign in partial:
            for (a, b), coef in factor:
                koszul = -1 if (right_dim * a.dim) % 2 else 1
                extended.append(
                    (
                        left + relabel_blocks(a.blocks, block),
                        right + relabel_blocks(b.blocks, block),
                        right_dim + b.dim,
                        sign * coef * koszul,
                    )
                )
        partial = extended
    return Chain.from_terms(
        ((OrderedPartition(left), OrderedPartition(right)), sign)
        for left, right, _, sign in partial
    )


def diagonal(c: Chain[OrderedPartition]) -> TensorChain:
    return c.apply(diagonal_face)


@dataclass(frozen=True)
class CoderivationReport:
    """Výsledek ověření Δ_P∘∂ = (∂⊗1 + 1⊗∂)∘Δ_P."""

    n: int
    ok: bool
    residual: TensorChain


def verify_coderivation(n: int) -> CoderivationReport:
    """Ověří, že Δ_P je koderivace na vrchní buňce P_{n+1}."""
    if n < 1:
        raise PartitionError(f"n musí být alespoň 1, ne {n}")
    top = Chain.single(top_cell(n + 1))
    residual = diagonal(boundary(top)) - tensor_boundary(diagonal_top(n))
    if not residual.is_zero():
        logger.warning("Δ_P(%d) není koderivace: %d zbylých členů", n + 1, len(residual))
    return CoderivationReport(n=n, ok=residual.is_zero(), residual=residual)


def tensor_transpose(t: TensorChain) -> TensorChain:
    """Transpozice členů: u⊗v ↦ rev(v)⊗rev(u), koeficienty se zachovají."""

    def flip(pair: TensorPair) -> TensorChain:
        u, v = pair
        image = (OrderedPartition(v.blocks[::-1]), OrderedPartition(u.blocks[::-1]))
        return Chain.single(image)

    return t.apply(flip)


def primitive_terms(t: TensorChain) -> list[tuple[TensorPair, int]]:
    """Členy s vrcholem v některém faktoru."""
    return [(pair, coef) for pair, coef in t if pair[0].is_vertex() or pair[1].is_vertex()]
