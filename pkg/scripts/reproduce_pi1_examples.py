"""Cup product map and first homology of the two isospectral manifold groups.

    python scripts/reproduce_pi1_examples.py
"""
import time
from pathlib import Path

from foxcup.cup import cup_matrix
from foxcup.echelon import echelon_presentation
from foxcup.homology import h1_integral
from foxcup.intlinalg import render_matrix
from foxcup.words import parse_presentation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def report(name: str) -> tuple[int, str]:
    P = parse_presentation((FIXTURES / f"pi1_{name}.pres").read_text())
    t0 = time.perf_counter()
    E = echelon_presentation(P)
    c = cup_matrix(P)
    h = h1_integral(P)
    dt = time.perf_counter() - t0
    print(f"== {name}: {P.n} generators, {P.m} relators")
    print(f"echelon relator lengths: {[len(w) for w in E.base.relators]}")
    print(f"H1 = {h.render()}")
    print(f"b = {c.b}, dim H2 = {c.dim_h2}")
    print(render_matrix([[str(x) for x in row] for row in c.entries]))
    print(f"rank {c.rank}, nullity {c.nullity}  ({dt:.3f} s)\n")
    return c.nullity, h.render()


if __name__ == "__main__":
    n1, h1 = report("M1")
    n2, h2 = report("M2")
    print(f"homology differs: {h1 != h2}; cup nullity differs: {n1 != n2}")
