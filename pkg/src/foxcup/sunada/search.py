"""Epimorphisms from finitely presented groups onto finite groups, and coset actions."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..words import Presentation
from .groups import FiniteGroup, generated_subgroup

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Homomorphism:
    domain: Presentation
    codomain: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.domain.n:
            raise ValueError("need one image per generator")
        for k, r in enumerate(self.domain.relators, 1):
            if self.codomain.evaluate(r, self.images):
                raise ValueError(f"relator {k} does not map to the identity")

    def __call__(self, word) -> int:
        return self.codomain.evaluate(word, self.images)

    def is_surjective(self) -> bool:
        return len(generated_subgroup(self.codomain, self.images)) == self.codomain.order


def find_epimorphisms(
    P: Presentation, G: FiniteGroup, max_results: int | None = None, budget: int = DEFAULT_BUDGET
) -> list[Homomorphism]:
    """Surjections P -> G in lexicographic order of the image tuple.

    Depth-first over generator images; a relator is checked as soon as every
    generator it mentions has an image.  ``budget`` bounds the number of
    partial assignments visited.
    """
    n = P.n
    by_depth: list[list] = [[] for _ in range(n + 1)]
    for r in P.relators:
        by_depth[r.max_generator()].append(r)
    if any(G.evaluate(r, ()) for r in by_depth[0]):
        return []
    results: list[Homomorphism] = []
    images = [0] * n
    visited = 0

    def dfs(depth: int) -> bool:
        nonlocal visited
        if depth == n:
            if len(generated_subgroup(G, images)) == G.order:
                results.append(Homomorphism(P, G, tuple(images)))
                if max_results is not None and len(results) >= max_results:
                    return True
            return False
        for g in range(G.order):
            visited += 1
            if visited > budget:
                raise BudgetExceeded(
                    f"epimorphism search exceeded the budget of {budget} candidate assignments"
                )
            images[depth] = g
            if all(G.evaluate(r, images) == 0 for r in by_depth[depth + 1]):
                if dfs(depth + 1):
                    return True
        return False

    if max_results is None or max_results > 0:
        dfs(0)
    return results


def count_epimorphisms_bruteforce(P: Presentation, G: FiniteGroup) -> int:
    """Check every image tuple independently of the search above."""
    count = 0
    for images in product(range(G.order), repeat=P.n):
        if all(G.evaluate(r, images) == 0 for r in P.relators):
            if len(generated_subgroup(G, images)) == G.order:
                count += 1
    return count


@dataclass(frozen=True)
class CosetTable:
    """Right action of the generators on cosets; coset 0 is the subgroup itself.

    ``action[c][k - 1]`` is the coset reached from ``c`` by x_k and
    ``inverse[c][k - 1]`` the one reached by x_k^-1.
    """

    action: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.action)

    @property
    def n(self) -> int:
        return len(self.action[0]) if self.action else 0

    def __post_init__(self):
        d = len(self.action)
        for k in range(self.n):
            col = [self.action[c][k] for c in range(d)]
            if sorted(col) != list(range(d)):
                raise ValueError(f"generator x{k + 1} does not act as a permutation")
            for c in range(d):
                if self.inverse[col[c]][k] != c:
                    raise ValueError(f"inverse of x{k + 1} is inconsistent")

    def step(self, c: int, x: int) -> int:
        return self.action[c][x - 1] if x > 0 else self.inverse[c][-x - 1]

    def trace(self, c: int, word) -> int:
        for x in word:
            c = self.step(c, x)
        return c

    def is_transitive(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for k in range(1, self.n + 1):
                for e in (self.step(c, k), self.step(c, -k)):
                    if e not in seen:
                        seen.add(e)
                        stack.append(e)
        return len(seen) == self.index

    @classmethod
    def from_permutations(cls, perms: Sequence[Sequence[int]]) -> "CosetTable":
        """Build from one 0-based permutation per generator (coset c -> perms[k][c])."""
        d = len(perms[0]) if perms else 1
        action = tuple(tuple(p[c] for p in perms) for c in range(d))
        inv = [[0] * len(perms) for _ in range(d)]
        for k, p in enumerate(perms):
            for c in range(d):
                inv[p[c]][k] = c
        return cls(action, tuple(map(tuple, inv)))


def right_cosets(G: FiniteGroup, H: Sequence[int]) -> list[tuple[int, ...]]:
    """Right cosets Hg, sorted by least element (so H itself comes first)."""
    seen: set[int] = set()
    cosets = []
    for g in range(G.order):
        if g in seen:
            continue
        c = tuple(sorted({G.mul(h, g) for h in H}))
        seen.update(c)
        cosets.append(c)
    return sorted(cosets)


def preimage_coset_table(phi: Homomorphism, H: Sequence[int]) -> CosetTable:
    """Action of the domain generators on G/H by ``Hg -> Hg phi(x)``."""
    G = phi.codomain
    cosets = right_cosets(G, H)
    where = {g: i for i, c in enumerate(cosets) for g in c}
    perms = [[where[G.mul(c[0], phi.images[k])] for c in cosets] for k in range(phi.domain.n)]
    return CosetTable.from_permutations(perms) if perms else CosetTable(((),) * len(cosets), ((),) * len(cosets))
