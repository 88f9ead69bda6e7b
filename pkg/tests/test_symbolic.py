import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympow.arith import Field
from sympow.groebner import ideal_equal, ideal_power, ideal_product
from sympow.linverify import fermat_ideal
from sympow.moncurve import DEFAULT_CORPUS, corpus_curves, herzog_presentation, labelings
from sympow.symbolic import (case_relations, closed_form_power, cube_closed_form, degree_separation, gap_exponents,
                             schenzel_delta1, symbolic_power)

CORPUS = corpus_curves(DEFAULT_CORPUS)


def _cased(triple, field=None):
    return [cv for cv in labelings(*triple, field=field) if cv.case]


# every labeling of these curves that lands in a case, so all five cases are covered
CASE_CURVES = _cased((3, 4, 5)) + _cased((7, 9, 10)) + _cased((7, 11, 12)) + _cased((7, 9, 10), Field(2))


def test_all_cases_covered():
    assert {cv.case for cv in CASE_CURVES} == {"1a", "1b", "1c", "2a", "2b"}


def test_first_power_is_prime():
    P = herzog_presentation(3, 4, 5).ideal()
    assert ideal_equal(symbolic_power(P, 1).generators, P)


def test_fermat_second_power_is_bigger():
    I = fermat_ideal()
    assert not ideal_equal(symbolic_power(I, 2).generators, I ** 2)
    assert (I ** 2).issubset(symbolic_power(I, 2).generators)


def test_schenzel_345():
    cv = herzog_presentation(3, 4, 5)
    data = schenzel_delta1(cv)
    assert data.delta1.weighted_degree() is not None
    assert data.delta1 in symbolic_power(cv.ideal(), 2).generators
    assert data.delta1 not in cv.ideal() ** 2
    assert ideal_equal(data.ideal(), symbolic_power(cv.ideal(), 2).generators)
    # det D is delta1 times its monomial content
    assert data.det == data.delta1 * cv.ring.monomial(data.content)


def test_cube_345_case_1a():
    cv = herzog_presentation(3, 4, 5)
    cf = cube_closed_form(cv)
    assert cf.case_id == "1a" and set(cf.deltas) == {"D21"}
    assert cf.crosscheck == "pass" and cf.route == "closed-form" and not cf.flags
    assert cf.relations_hold


def test_gap_exponents_case_1():
    # alpha = max(0, 2a1 - a2), beta = max(0, 2b2 - b1), gamma = max(0, 2c2 - c1)
    assert gap_exponents((1, 2, 1, 1, 1, 1), "1a") == (0, 1, 1)


def test_relations_name_known_deltas():
    for case in ("1a", "1b", "1c", "2a", "2b"):
        rels = case_relations((3, 1, 2, 1, 2, 1) if case[0] == "2" else (1, 2, 1, 1, 1, 1), case)
        assert rels


def test_closed_form_rejects_high_powers():
    with pytest.raises(ValueError):
        closed_form_power(herzog_presentation(3, 4, 5), 4)


def test_case_characteristic_guard():
    cv = next(c for c in _cased((7, 9, 10)) if c.case == "2a")
    cv2 = next(c for c in _cased((7, 9, 10), Field(2)) if c.case == "2b")
    assert cube_closed_form(cv).crosscheck == "pass"
    assert cube_closed_form(cv2).crosscheck == "pass"


@pytest.mark.parametrize("cv", CASE_CURVES, ids=lambda c: f"{c.original}-{c.perm}-{c.case}-p{c.ring.characteristic}")
def test_every_relation_is_an_identity(cv):
    cf = cube_closed_form(cv)
    assert cf.relations_hold, cf.flags
    assert cf.crosscheck == "pass", cf.flags
    assert degree_separation(cf)["holds"]
    for d in cf.deltas.values():
        assert d.weighted_degree() is not None


@pytest.mark.parametrize("cv", CORPUS, ids=lambda c: str(c.original))
def test_route_equivalence(cv):
    P = cv.ideal()
    for n in (1, 2, 3):
        res = closed_form_power(cv, n)
        assert res.crosscheck == "pass"
        assert ideal_equal(res.generators, symbolic_power(P, n).generators)


@pytest.mark.parametrize("cv", CORPUS, ids=lambda c: str(c.original))
def test_filtration_axioms(cv):
    P = cv.ideal()
    S = {n: symbolic_power(P, n).generators for n in (1, 2, 3, 4)}
    for a in (1, 2):
        for b in (1, 2):
            if a + b <= 4:
                assert ideal_product(S[a], S[b]).issubset(S[a + b])
    for a in (2, 3, 4):
        assert S[a].issubset(S[a - 1])
    for n in (2, 3):
        assert ideal_power(P, n).issubset(S[n])
        assert not ideal_equal(ideal_power(P, n), S[n])
    for n, I in S.items():
        assert I.is_homogeneous()


@settings(max_examples=10)
@given(i=st.integers(0, len(CORPUS) - 1), a=st.integers(1, 2), b=st.integers(1, 2))
def test_symbolic_filtration_sampled(i, a, b):
    P = CORPUS[i].ideal()
    lhs = ideal_product(symbolic_power(P, a).generators, symbolic_power(P, b).generators)
    assert lhs.issubset(symbolic_power(P, a + b).generators)


def test_to_json_shapes():
    cv = herzog_presentation(3, 4, 5)
    j = cube_closed_form(cv).to_json()
    assert j["case"] == "1a" and j["curve"] == [3, 4, 5]
    r = symbolic_power(cv.ideal(), 2).to_json()
    assert r["route"] == "saturation" and len(r["generators"]) == len(r["degrees"])
