"""Fox Jacobians and echelon presentations.

Recombining the relators by a unimodular matrix C (``w_k = prod_l r_l^C[k][l]``)
changes the Jacobian to ``C @ T``; choosing C from the Hermite normal form of
T puts the presentation in echelon form without changing the cohomology of
the presentation complex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .group_ring import abelianized
from .intlinalg import IntMatrix, hnf_with_transform, is_hermite
from .words import Presentation, Word, power


def fox_jacobian(P: Presentation) -> IntMatrix:
    """m x n matrix whose row k is the abelianization of relator k."""
    return [abelianized(r, P.n) for r in P.relators]


@dataclass(frozen=True)
class EchelonPresentation:
    base: Presentation
    transform: IntMatrix
    jacobian: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for row in self.jacobian if any(row))


def recombine(relators, C) -> list[Word]:
    out = []
    for row in C:
        letters: list[int] = []
        for r, c in zip(relators, row):
            if c:
                letters.extend(power(r, c))
        out.append(Word(letters))
    return out


def echelon_presentation(P: Presentation) -> EchelonPresentation:
    T = fox_jacobian(P)
    H, C = hnf_with_transform(T, P.n)
    E = Presentation(P.n, tuple(recombine(P.relators, C)), P.names, P.numeric)
    recomputed = fox_jacobian(E)
    if recomputed != H or not is_hermite(H):
        raise AssertionError("echelon construction: recombined Jacobian differs from C.T")
    return EchelonPresentation(E, C, H)
