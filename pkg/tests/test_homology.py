import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foxcup.cup import abelianization_matrix
from foxcup.echelon import echelon_presentation
from foxcup.homology import HomologyReport, h1_integral, primary_parts
from foxcup.sunada.rewriting import random_tietze_moves
from foxcup.words import Presentation, letter_presentation

from .strategies import words


def test_pi1_fixtures_homology(pi1_m1, pi1_m2):
    h1 = h1_integral(pi1_m1)
    h2 = h1_integral(pi1_m2)
    assert h1 == HomologyReport(3, (2, 2, 2, 2, 4, 4))
    assert h2 == HomologyReport(3, (2, 2, 2, 2, 2, 8))
    assert h1.render() == "Z^3 + Z/2^4 + Z/4^2"
    assert h2.render() == "Z^3 + Z/2^5 + Z/8"
    assert not h1.isomorphic(h2)


def test_torus_and_trivial():
    assert h1_integral(letter_presentation("ab", ["abAB"])) == HomologyReport(2)
    assert h1_integral(letter_presentation("a", ["a"])).render() == "0"
    assert h1_integral(letter_presentation("a", ["aaaaaa"])).render() == "Z/6"


def test_primary_decomposition_comparison():
    # Z/6 + Z/2 ~ Z/2 + Z/2 + Z/3
    assert primary_parts([2, 6]) == Counter({2: 2, 3: 1})
    assert HomologyReport(0, (2, 6)).isomorphic(HomologyReport(0, (2, 6)))
    assert primary_parts([2, 2, 2, 2, 4, 4]) == Counter({2: 4, 4: 2})


def test_report_rejects_non_chain():
    with pytest.raises(ValueError):
        HomologyReport(0, (4, 2))


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 4))
    rels = draw(st.lists(words(n, 10), max_size=5))
    return Presentation(n, tuple(rels))


@given(presentations())
def test_echelon_and_betti_consistency(P):
    h = h1_integral(P)
    E = echelon_presentation(P)
    assert h1_integral(E.base) == h
    assert h.free_rank == abelianization_matrix(E).b


@given(presentations(), st.integers(0, 2**32))
def test_tietze_invariance(P, seed):
    Q = random_tietze_moves(P, random.Random(seed), moves=4)
    assert h1_integral(Q).isomorphic(h1_integral(P))


@pytest.mark.parametrize("seed", range(10))
def test_tietze_invariance_pi1_fixtures(seed, pi1_m1, pi1_m2):
    rng = random.Random(seed)
    for P in (pi1_m1, pi1_m2):
        assert h1_integral(random_tietze_moves(P, rng, 4)) == h1_integral(P)
