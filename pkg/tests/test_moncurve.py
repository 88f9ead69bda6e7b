import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sympow.arith import Field, xyz_ring
from sympow.groebner import Ideal, ideal_equal
from sympow.moncurve import (DEFAULT_CORPUS, CompleteIntersection, UnsupportedCharacteristic, corpus_curves,
                             curve_kernel_oracle, herzog_presentation, homogeneity_relations, is_complete_intersection,
                             labelings, minors_ideal, normalize_triple, substitution_check, third_row_exponents)

CORPUS = corpus_curves(DEFAULT_CORPUS)


def test_corpus_members():
    assert [c.original for c in CORPUS] == [(3, 4, 5), (3, 5, 7), (5, 6, 7), (5, 7, 9)]
    assert is_complete_intersection(4, 5, 6)
    assert is_complete_intersection(4, 6, 9)


def test_oracle_examples():
    P = curve_kernel_oracle(1, 2, 3)
    R = P.ring
    assert ideal_equal(P, Ideal(R, ["y - x^2", "z - x^3"]))
    P = curve_kernel_oracle(3, 4, 5)
    assert ideal_equal(P, Ideal(P.ring, ["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]))
    assert substitution_check(P, (3, 4, 5))
    P = curve_kernel_oracle(2, 3, 5)
    assert len(P.gens) == 2 and P.ring.parse("z - x*y") in P


def test_gcd_normalized():
    assert normalize_triple(6, 8, 10) == (3, 4, 5)
    with pytest.raises(ValueError):
        normalize_triple(0, 1, 2)


def test_presentation_345():
    cv = herzog_presentation(3, 4, 5)
    assert cv.exps == (1, 2, 1, 1, 1, 1)
    assert cv.case == "1a"
    assert sorted(cv.weighted_degrees().values()) == [8, 9, 10]
    assert ideal_equal(cv.ideal(), cv.oracle)
    # back in the original labeling the ideal is the oracle ideal of (3, 4, 5)
    assert ideal_equal(cv.ideal_to_original(cv.ideal()), curve_kernel_oracle(3, 4, 5))


def test_complete_intersection_rejected():
    with pytest.raises(CompleteIntersection):
        herzog_presentation(1, 2, 3)


def test_characteristic_three_rejected():
    with pytest.raises(UnsupportedCharacteristic):
        herzog_presentation(3, 4, 5, field=Field(3))


def test_minors_examples():
    R = xyz_ring()
    x, y, z = R.gens()
    I = minors_ideal(((x, y, z), (z, x, y)))
    assert ideal_equal(I, Ideal(R, ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]))
    Z = minors_ideal(((x, y, z), (R.zero(), R.zero(), R.zero())))
    assert Z.is_zero()


def test_g_is_the_minor():
    # G pairs x^a1 with y^b2, as the minor of the presentation matrix dictates
    for cv in CORPUS:
        a1, a2, b1, b2, c1, c2 = cv.exps
        x, y, z = cv.ring.gens()
        assert cv.generators[1] == z ** (c1 + c2) - x ** a1 * y ** b2
        assert ideal_equal(minors_ideal(cv.matrix), cv.ideal())


def test_third_row_345():
    cv = herzog_presentation(3, 4, 5)
    assert third_row_exponents(cv) == ((2, 6, 4), (3, 5, 5), (4, 5, 4))


def test_labelings_all_present_same_curve():
    for cv in labelings(3, 4, 5):
        assert ideal_equal(cv.ideal(), cv.oracle)
        assert all(homogeneity_relations(cv.abc, cv.exps).values())


@pytest.mark.parametrize("cv", CORPUS, ids=lambda c: str(c.original))
def test_corpus_invariants(cv):
    assert ideal_equal(cv.ideal(), cv.oracle)
    assert all(homogeneity_relations(cv.abc, cv.exps).values())
    assert min(cv.exps) >= 1
    assert all(g.weighted_degree() is not None for g in cv.generators)
    assert cv.case is not None


@st.composite
def curve_triples(draw):
    a = draw(st.integers(3, 8))
    b = draw(st.integers(a + 1, 11))
    c = draw(st.integers(b + 1, 13))
    assume(math.gcd(a, math.gcd(b, c)) == 1)
    return a, b, c


@settings(max_examples=15)
@given(abc=curve_triples())
def test_random_curves_present_the_oracle(abc):
    try:
        cv = herzog_presentation(*abc)
    except CompleteIntersection:
        assert len(curve_kernel_oracle(*abc).gens) == 2
        return
    assert ideal_equal(cv.ideal(), cv.oracle)
    assert min(cv.exps) >= 1
    assert all(homogeneity_relations(cv.abc, cv.exps).values())
    assert substitution_check(cv.ideal_to_original(cv.ideal()), abc)
