"""Sunada pairs: subgroup presentations for the preimages of almost conjugate subgroups."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..cup import CupSummary, cup_nullity
from ..homology import HomologyReport, h1_integral
from ..words import Presentation
from .groups import FiniteGroup, is_almost_conjugate
from .rewriting import reidemeister_schreier, tietze_simplify
from .search import DEFAULT_BUDGET, Homomorphism, find_epimorphisms, preimage_coset_table

FREENESS_CAVEAT = (
    "almost conjugacy is checked at the group level only; whether H1 and H2 act "
    "freely on the covering manifold is not checked"
)


class SunadaError(ValueError):
    pass


@dataclass(frozen=True)
class SunadaReport:
    images: tuple[int, ...]
    index: int
    presentations: tuple[Presentation, Presentation]
    homology: tuple[HomologyReport, HomologyReport]
    cup: tuple[CupSummary, CupSummary]
    caveat: str = FREENESS_CAVEAT

    @property
    def homology_distinguishes(self) -> bool:
        return not self.homology[0].isomorphic(self.homology[1])

    @property
    def cup_distinguishes(self) -> bool:
        return self.cup[0].nullity != self.cup[1].nullity

    def as_dict(self) -> dict:
        return {
            "images": list(self.images),
            "index": self.index,
            "presentations": [p.to_text() for p in self.presentations],
            "homology": [h.as_dict() for h in self.homology],
            "cup": [c.as_dict() for c in self.cup],
            "homology_distinguishes": self.homology_distinguishes,
            "cup_distinguishes": self.cup_distinguishes,
            "caveat": self.caveat,
        }


def subgroup_presentation(phi: Homomorphism, H: Sequence[int], simplify: bool = True) -> Presentation:
    Q = reidemeister_schreier(phi.domain, preimage_coset_table(phi, H))
    return tietze_simplify(Q) if simplify else Q


def sunada_pipeline(
    P: Presentation,
    G: FiniteGroup,
    H1: Sequence[int],
    H2: Sequence[int],
    phi: Homomorphism | None = None,
    simplify: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> SunadaReport:
    if not is_almost_conjugate(G, H1, H2):
        raise SunadaError("H1 and H2 are not almost conjugate in G")
    if phi is None:
        found = find_epimorphisms(P, G, max_results=1, budget=budget)
        if not found:
            raise SunadaError(f"no epimorphism from the presentation onto {G!r}")
        phi = found[0]
    elif not phi.is_surjective():
        raise SunadaError("supplied homomorphism is not surjective")
    pres = (subgroup_presentation(phi, H1, simplify), subgroup_presentation(phi, H2, simplify))
    return SunadaReport(
        phi.images,
        G.order // len(H1),
        pres,
        (h1_integral(pres[0]), h1_integral(pres[1])),
        (cup_nullity(pres[0]), cup_nullity(pres[1])),
    )
