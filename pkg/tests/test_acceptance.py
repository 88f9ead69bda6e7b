"""Acceptance criteria 1-9; the terminal summary prints one PASS/FAIL line per criterion."""

import time
from fractions import Fraction

import pytest

from sympow import containment as ct
from sympow.arith import QQ, TermOrder, xyz_ring
from sympow.groebner import Ideal, ideal_equal, ideal_power, ideal_product, saturate
from sympow.linverify import fermat_ideal, fermat_matrix, generic_residual, random_evaluations
from sympow.manifest import example_6_4
from sympow.moncurve import DEFAULT_CORPUS, corpus_curves, herzog_presentation, minors_ideal
from sympow.symbolic import cube_closed_form, degree_separation, schenzel_delta1, symbolic_power

criterion = pytest.mark.criterion
CORPUS = corpus_curves(DEFAULT_CORPUS)


@criterion(1, "Fermat M (z^2 corner): I^(3) not in I^2 with witness, < 60 s")
def test_criterion_1_fermat_counterexample():
    t0 = time.perf_counter()
    R = xyz_ring()
    I = minors_ideal(fermat_matrix("M", 2, R), R)
    assert ideal_equal(I, fermat_ideal(R))
    rep = ct.symbolic_containment(I, 3, 2)
    assert rep.verdict == "fails"
    assert rep.witness is not None and (I ** 2).normal_form(rep.witness)
    assert rep.witness in symbolic_power(I, 3).generators
    assert time.perf_counter() - t0 < 60


@criterion(2, "reordered matrix N: J^(3) in J^2 (z^2 corner; the z^3 corner is inhomogeneous), < 60 s")
def test_criterion_2_reordered_matrix():
    t0 = time.perf_counter()
    R = xyz_ring()
    cubic = minors_ideal(fermat_matrix("N", 3, R), R)
    assert not cubic.is_homogeneous()
    J = minors_ideal(fermat_matrix("N", 2, R), R)
    assert J.is_homogeneous()
    assert ct.symbolic_containment(J, 3, 2).holds
    assert time.perf_counter() - t0 < 60


@criterion(3, "Fermat resurgence box (6,4): lower bound 3/2 via (3,2), nothing above 3/2")
def test_criterion_3_resurgence_box():
    est = ct.resurgence_search(fermat_ideal(), 6, 4)
    assert not est.partial
    assert est.lower_bound == Fraction(3, 2)
    assert (3, 2) in est.witnesses
    assert max(Fraction(m, s) for m, s in est.witnesses) <= Fraction(3, 2)


@criterion(4, "curve corpus: Schenzel, cube closed form, P^(3) in mP^2, P^(n) != P^n, < 120 s each")
def test_criterion_4_curve_corpus():
    assert [c.original for c in CORPUS] == [(3, 4, 5), (3, 5, 7), (5, 6, 7), (5, 7, 9)]
    for cv in CORPUS:
        t0 = time.perf_counter()
        P = cv.ideal()
        P2 = saturate(P ** 2, cv.maximal_ideal())
        assert ideal_equal(schenzel_delta1(cv).ideal(), P2), cv.original
        cf = cube_closed_form(cv)
        assert cf.crosscheck == "pass" and cf.route == "closed-form", (cv.original, cf.flags)
        P3 = symbolic_power(P, 3).generators
        assert ideal_equal(cf.ideal, P3)
        assert ct.check_containment(P3, cv.maximal_ideal() * P ** 2).holds, cv.original
        assert not ideal_equal(P2, P ** 2) and not ideal_equal(P3, P ** 3)
        assert time.perf_counter() - t0 < 120


@criterion(5, "degree separation of the extra P^(3) generators on the corpus")
def test_criterion_5_degree_separation():
    for cv in CORPUS:
        sep = degree_separation(cube_closed_form(cv))
        assert sep["holds"], (cv.original, sep)


@criterion(6, "linear certificate: generic residual zero, 100/100 random evaluations")
def test_criterion_6_generic_identity():
    assert all(not r for r in generic_residual())
    assert random_evaluations(100) == 100


@criterion(7, "Harbourne window n in {2,3} on the corpus; Fermat fails at n = 2")
def test_criterion_7_harbourne_windows():
    for cv in CORPUS:
        assert all(r.holds for r in ct.harbourne_window(cv.ideal(), 2, [2, 3])), cv.original
    assert not ct.harbourne_window(fermat_ideal(), 2, [2])[0].holds


@criterion(8, "property checks: S-pairs, saturation idempotence, filtration, ELS window, witnesses, invariance")
def test_criterion_8_property_suites():
    ideals = [cv.ideal() for cv in CORPUS] + [fermat_ideal()]
    for I in ideals:
        m = Ideal.maximal(I.ring)
        assert all(not r for r in (I ** 2).groebner().spoly_residuals())
        S = saturate(I ** 2, m)
        assert ideal_equal(saturate(S, m), S)
        S1, S2, S3 = (symbolic_power(I, n).generators for n in (1, 2, 3))
        assert ideal_product(S1, S2).issubset(S3) and S3.issubset(S2) and S2.issubset(S1)
        for n in (1, 2, 3):
            assert ct.symbolic_containment(I, 2 * n, n).holds
    rep = ct.symbolic_containment(fermat_ideal(), 3, 2)
    assert ideal_power(fermat_ideal(), 2).normal_form(rep.witness, TermOrder("lex"))
    # verdicts over Q and F_32003 and under two orders; disagreements across fields are flagged
    flags = []
    for name, Ip, Iq in (("fermat", fermat_ideal(), fermat_ideal(xyz_ring(QQ))),
                         ("curve", CORPUS[0].ideal(), herzog_presentation(3, 4, 5, field=QQ).ideal())):
        for order in (None, TermOrder("lex")):
            with ct.containment_order(order):
                vp = ct.symbolic_containment(Ip, 3, 2).verdict
                vq = ct.symbolic_containment(Iq, 3, 2).verdict
            if vp != vq:
                flags.append(f"{name} {order}: {vp} vs {vq}")
    print("field discrepancies:", flags or "none")


@criterion(9, "stretch: self-linked example audit, then P^(4) in P^3 compared against failure")
def test_criterion_9_self_linked_stretch():
    rep = example_6_4()
    audit, item = rep.items
    assert audit["verdict"] == "inconsistent"
    assert audit["first_relation"] == "18*16 = 288 vs 19*1 + 231*3 = 712"
    if item["status"] == "budget-exceeded":
        pytest.skip("budget exceeded on the stretch workload")
    assert item["generator_count"] == 3
    assert item["verdict"] == "fails" and item["matches"]
