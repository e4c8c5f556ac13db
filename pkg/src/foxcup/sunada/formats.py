"""Text format for a finite group with two subgroups.

    group: zn-semidirect 8
    sub: (1,0) (3,0) (5,0) (7,0)
    sub: (1,0) (3,4) (5,4) (7,0)

or

    group: perm 7
    gen: (1 2 3 4 5 6 7)
    gen: (2 3)(4 7)
    sub: e0 e5 e9

``sub:`` lines list elements (``eK`` is element index K, pairs are
zn-semidirect labels, cycles are permutations); the subgroup they generate
is used.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .groups import FiniteGroup, GroupError, Subgroup, group_from_permutations, parse_cycles, semidirect_zn

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")
_CYCLE = re.compile(r"\([\d\s]*\)")


@dataclass(frozen=True)
class GroupSpec:
    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    kind: str


def parse_group_spec(text: str) -> GroupSpec:
    kind = None
    degree = 0
    arg = 0
    gens: list[str] = []
    subs: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if key == "group":
            parts = value.split()
            if len(parts) != 2 or not parts[1].isdigit() or parts[0] not in ("zn-semidirect", "perm"):
                raise GroupError(f"line {lineno}: expected 'zn-semidirect N' or 'perm DEGREE'")
            kind, arg = parts[0], int(parts[1])
        elif key == "gen":
            gens.append(value)
        elif key == "sub":
            subs.append(value)
        else:
            raise GroupError(f"line {lineno}: unknown key {key!r}")
    if kind is None:
        raise GroupError("missing 'group:' line")
    if kind == "zn-semidirect":
        G = semidirect_zn(arg)
    else:
        degree = arg
        G = group_from_permutations(degree, gens)
    subgroups = tuple(Subgroup.generated_by(G, _parse_elements(G, kind, degree, s)) for s in subs)
    return GroupSpec(G, subgroups, kind)


def _parse_elements(G: FiniteGroup, kind: str, degree: int, text: str) -> list[int]:
    out = []
    if kind == "zn-semidirect" and _PAIR.search(text):
        n = max(b for _, b in G.labels) + 1
        for a, b in _PAIR.findall(text):
            out.append(G.index_of((int(a) % n, int(b) % n)))
        rest = _PAIR.sub(" ", text)
    elif kind == "perm" and _CYCLE.search(text):
        # adjacent cycles form one permutation; whitespace between groups separates them
        for token in re.findall(r"(?:\([\d\s]*\))+", text):
            out.append(G.index_of(parse_cycles(token, degree)))
        rest = re.sub(r"(?:\([\d\s]*\))+", " ", text)
    else:
        rest = text
    for tok in rest.split():
        if not re.fullmatch(r"e\d+", tok):
            raise GroupError(f"bad subgroup element {tok!r}")
        k = int(tok[1:])
        if k >= G.order:
            raise GroupError(f"element index {k} out of range for order {G.order}")
        out.append(k)
    return out
