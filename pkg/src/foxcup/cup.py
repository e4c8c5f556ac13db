"""Rational cup products H^1 x H^1 -> H^2 of a presentation 2-complex.

For an echelon presentation with Jacobian of rank n - b, the cochains on
the relators k = n-b+1..m give a basis of H^2(K; Q), and a basis u_1..u_b of
H^1(K; Q) is any basis of the rational null space of the Jacobian.  The
product u_i u_j evaluated on relator w is the bilinear form
``sum_{s,t} u_i[s] u_j[t] eps_{s,t}(w)`` built from second augmented Fox
derivatives.  Rank and nullity of the resulting map on the exterior square
do not depend on any of the basis choices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .echelon import EchelonPresentation, echelon_presentation
from .group_ring import double_fox_matrix
from .intlinalg import RatMatrix, matmul, null_space_basis, rational_rank, transpose
from .words import Presentation, Word


@dataclass(frozen=True)
class AbelianizationMatrix:
    """Rows are cocycles spanning H^1(K; Q); shape b x n."""

    A: RatMatrix
    n: int

    @property
    def b(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class CupMatrix:
    """Rows indexed by the H^2 relators, columns by pairs i < j."""

    entries: RatMatrix
    b: int
    relator_indices: tuple[int, ...]
    rank: int

    @property
    def dim_h2(self) -> int:
        return len(self.relator_indices)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(1, self.b + 1), 2))

    @property
    def nullity(self) -> int:
        return self.b * (self.b - 1) // 2 - self.rank

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)


def abelianization_matrix(E: EchelonPresentation) -> AbelianizationMatrix:
    return AbelianizationMatrix(null_space_basis(E.jacobian, E.base.n), E.base.n)


def kappa_matrix(w: Sequence[int], A: AbelianizationMatrix | Sequence[Sequence]) -> RatMatrix:
    """``A @ D @ A.T`` where ``D[s][t]`` is the second augmented derivative eps_{s,t}(w)."""
    rows = A.A if isinstance(A, AbelianizationMatrix) else A
    n = A.n if isinstance(A, AbelianizationMatrix) else (len(rows[0]) if rows else 0)
    if not rows:
        return []
    D = double_fox_matrix(w, n)
    return matmul(matmul(rows, D), transpose(rows))


def cup_matrix_from_echelon(E: EchelonPresentation, A: AbelianizationMatrix | None = None) -> CupMatrix:
    if A is None:
        A = abelianization_matrix(E)
    n, m, b = E.base.n, E.base.m, A.b
    first = n - b  # 0-based index of relator n-b+1
    for k in range(first, m):
        if any(E.jacobian[k]):
            raise AssertionError(f"echelon Jacobian row {k + 1} should be zero (n={n}, b={b})")
    pairs = list(combinations(range(b), 2))
    entries: RatMatrix = []
    for k in range(first, m):
        kap = kappa_matrix(E.base.relators[k], A)
        entries.append([Fraction(kap[i][j]) for i, j in pairs])
    rank = rational_rank(entries) if pairs and entries else 0
    return CupMatrix(entries, b, tuple(range(first + 1, m + 1)), rank)


def cup_matrix(P: Presentation) -> CupMatrix:
    return cup_matrix_from_echelon(echelon_presentation(P))


@dataclass(frozen=True)
class CupSummary:
    b: int
    dim_h2: int
    rank: int
    nullity: int

    def as_dict(self) -> dict:
        return {"b": self.b, "dim_h2": self.dim_h2, "rank": self.rank, "nullity": self.nullity}


def cup_nullity(P: Presentation) -> CupSummary:
    c = cup_matrix(P)
    return CupSummary(c.b, c.dim_h2, c.rank, c.nullity)
