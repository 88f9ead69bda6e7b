"""Independent checks of a few computed facts with sympy's Groebner bases."""

import pytest

sympy = pytest.importorskip("sympy")

from sympow import containment as ct
from sympow.arith import QQ
from sympow.moncurve import curve_kernel_oracle, herzog_presentation
from sympow.linverify import fermat_ideal
from sympow.symbolic import symbolic_power

x, y, z, t = sympy.symbols("x y z t")


def _kernel(a, b, c):
    G = sympy.groebner([x - t ** a, y - t ** b, z - t ** c], t, x, y, z, order="lex")
    return [g for g in G.exprs if not g.has(t)]


def _gb(gens):
    return sympy.groebner(gens, x, y, z, order="grevlex")


def _in(gb, f):
    return gb.reduce(sympy.expand(f))[1] == 0


def _products(gens, k):
    out = [sympy.Integer(1)]
    for _ in range(k):
        out = [sympy.expand(a * g) for a in out for g in gens]
    return out


@pytest.mark.parametrize("abc", [(3, 4, 5), (3, 5, 7), (4, 5, 11)])
def test_kernel_matches(abc):
    P = curve_kernel_oracle(*abc, field=QQ)
    ours = _gb([sympy.sympify(str(g).replace("^", "**")) for g in P.gens])
    theirs = _gb(_kernel(*abc))
    assert ours.exprs == theirs.exprs


def test_curve_4_5_11_breaks_m_p2():
    """P^(3) ⊄ m P^2 for the curve (4, 5, 11), although P^(3) ⊆ P^2.

    The witness is an extra generator of P^(3) whose weighted degree equals
    that of F^2 instead of exceeding it.  Here x^k * w ∈ P^3 with x ∉ P shows
    w ∈ P^(3) directly from the definition.
    """
    cv = herzog_presentation(4, 5, 11, field=QQ)
    P = cv.ideal()
    rep = ct.check_containment(symbolic_power(P, 3).generators, cv.maximal_ideal() * P ** 2)
    assert rep.verdict == "fails"
    w = sympy.sympify(str(cv.to_original(rep.witness)).replace("^", "**"))

    ker = _kernel(4, 5, 11)
    gens = _gb(ker).exprs
    assert sympy.expand(w.subs({x: t ** 4, y: t ** 5, z: t ** 11})) == 0
    P3 = _gb(_products(gens, 3))
    assert any(_in(P3, v ** k * w) for v in (x, y, z) for k in range(6))
    P2 = _products(gens, 2)
    assert _in(_gb(P2), w)
    mP2 = _gb([sympy.expand(v * p) for v in (x, y, z) for p in P2])
    assert not _in(mP2, w)


def test_curve_4_5_11_next_witness():
    P = herzog_presentation(4, 5, 11).ideal()
    t_found, reps = ct.stable_witness_search(P, 2, 3)
    assert t_found == 3
    assert all(r.holds for r in ct.harbourne_window(P, 2, [2, 3]))


def test_fermat_witness_against_sympy():
    I = fermat_ideal()
    rep = ct.symbolic_containment(I, 3, 2)
    w = sympy.sympify(str(rep.witness).replace("^", "**"))
    gens = [x * (y ** 3 - z ** 3), y * (z ** 3 - x ** 3), z * (x ** 3 - y ** 3)]
    I2 = _gb(_products(gens, 2))
    I3 = _gb(_products(gens, 3))
    assert not _in(I2, w)
    # a linear form vanishing at none of the twelve points
    ell = x + 2 * y + 3 * z
    assert any(_in(I3, ell ** k * w) for k in range(8))
