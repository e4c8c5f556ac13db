"""Integral first homology (abelianization) of a finitely presented group."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .echelon import fox_jacobian
from .intlinalg import snf_invariant_factors
from .words import Presentation


@dataclass(frozen=True)
class HomologyReport:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisor chain")

    def primary_decomposition(self) -> Counter:
        """Multiset of prime powers p^k with Z/p^k summands."""
        return primary_parts(self.torsion)

    def isomorphic(self, other: "HomologyReport") -> bool:
        return (
            self.free_rank == other.free_rank
            and self.primary_decomposition() == other.primary_decomposition()
        )

    def render(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for d, k in sorted(Counter(self.torsion).items()):
            parts.append(f"Z/{d}" if k == 1 else f"Z/{d}^{k}")
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": self.render()}


def _factor(d: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def primary_parts(cyclic_orders) -> Counter:
    out: Counter = Counter()
    for d in cyclic_orders:
        for p, k in _factor(d).items():
            out[p**k] += 1
    return out


def h1_integral(P: Presentation) -> HomologyReport:
    factors = snf_invariant_factors(fox_jacobian(P))
    return HomologyReport(P.n - len(factors), tuple(d for d in factors if d > 1))
