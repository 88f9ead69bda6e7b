"""The linear certificate for I^(3) ⊆ I^2 when the entry ideal is 5-generated, and the Fermat pair.

For I the 2x2 minors of [[a1, a2, a3], [b1, b2, b3]] with
b3 = x1 a1 + x2 a2 + x3 a3 + x4 b1 + x5 b2, the 3x12 matrix A and the
12-vector w below satisfy A w = (0, 0, a1 b2 - a2 b1).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .arith import QQ, Field, PolyRing, Polynomial, TermOrder, xyz_ring
from .containment import ContainmentReport, symbolic_containment
from .groebner import Ideal, ideal_equal
from .moncurve import minors_ideal

GENERIC_VARS = ("a1", "a2", "a3", "b1", "b2", "b3", "x1", "x2", "x3", "x4", "x5")

A_ROWS = (
    ("a1", "a2", "a3", "0", "0", "0", "b1", "b2", "b3", "0", "0", "0"),
    ("0", "a1", "0", "a2", "a3", "0", "0", "b1", "0", "b2", "b3", "0"),
    ("0", "0", "a1", "0", "a2", "a3", "0", "0", "b1", "0", "b2", "b3"),
)

W_ENTRIES = (
    "2*x1*a2",
    "2*x2*a2 + x3*a3",
    "x3*a2 + b2",
    "-(2*x2*a1 + 2*x5*b1)",
    "b1 - x3*a1",
    "0",
    "2*x4*a2",
    "2*x5*a2 - a3",
    "-2*a2",
    "0",
    "0",
    "0",
)

# +2*a2 in slot 9 leaves a nonzero residual; only -2*a2 makes A w = v
W_SLOT9_PLUS = W_ENTRIES[:8] + ("2*a2",) + W_ENTRIES[9:]

B3_COMBINATION = "x1*a1 + x2*a2 + x3*a3 + x4*b1 + x5*b2"
TARGET = ("0", "0", "a1*b2 - a2*b1")


class CertificatePrereqFailed(ValueError):
    """b3 is not the claimed combination of the other five entries."""


def generic_ring(field: Field | None = None) -> PolyRing:
    return PolyRing(GENERIC_VARS, field or QQ)


def _matvec(ring: PolyRing, rows, w) -> list[Polynomial]:
    out = []
    for row in rows:
        acc = ring.zero()
        for a, b in zip(row, w):
            acc = acc + a * b
        out.append(acc)
    return out


def generic_residual(w_entries=W_ENTRIES, substitute: bool = True, field: Field | None = None) -> list[Polynomial]:
    """A w - v in the 11-variable ring, with b3 replaced by its combination when ``substitute``."""
    R = generic_ring(field)
    rows = [[R.parse(e) for e in row] for row in A_ROWS]
    w = [R.parse(e) for e in w_entries]
    v = [R.parse(e) for e in TARGET]
    res = [p - q for p, q in zip(_matvec(R, rows, w), v)]
    if substitute:
        images = list(R.gens())
        images[GENERIC_VARS.index("b3")] = R.parse(B3_COMBINATION)
        res = [r.compose(images, R) for r in res]
    return res


def verify_theorem51_generic() -> bool:
    return all(not r for r in generic_residual())


def random_evaluations(trials: int = 100, seed: int = 0, field: Field | None = None) -> int:
    """How many random points of F_p^10 give A w = v (b3 computed from the combination)."""
    fld = field or Field()
    R = generic_ring(fld)
    rows = [[R.parse(e) for e in row] for row in A_ROWS]
    w = [R.parse(e) for e in W_ENTRIES]
    v = [R.parse(e) for e in TARGET]
    b3 = R.parse(B3_COMBINATION)
    rng = random.Random(seed)
    p = fld.characteristic
    ib3 = GENERIC_VARS.index("b3")
    good = 0
    for _ in range(trials):
        point = [rng.randrange(p) for _ in GENERIC_VARS]
        point[ib3] = b3.evaluate(point)
        ok = True
        for row, target in zip(rows, v):
            lhs = sum(fld(a.evaluate(point) * b.evaluate(point)) for a, b in zip(row, w))
            if fld(lhs - target.evaluate(point)) != 0:
                ok = False
        good += ok
    return good


# -- instances -------------------------------------------------------------------

@dataclass
class LinearCertificate:
    entries: tuple[Polynomial, ...]
    xs: tuple[Polynomial, ...]
    residual: list[Polynomial] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(not r for r in self.residual)


def _images(entries, xs) -> list[Polynomial]:
    a1, a2, a3, b1, b2, b3 = entries
    return [a1, a2, a3, b1, b2, b3, *xs]


def certificate(entries, xs) -> LinearCertificate:
    """Evaluate A w - v at the given entries and coefficients."""
    entries = tuple(entries)
    xs = tuple(xs)
    if len(entries) != 6 or len(xs) != 5:
        raise ValueError("need six entries and five coefficients")
    ring = entries[0].ring
    a1, a2, a3, b1, b2, b3 = entries
    combo = sum((x * e for x, e in zip(xs, (a1, a2, a3, b1, b2))), ring.zero())
    if combo != b3:
        raise CertificatePrereqFailed(f"b3 = {b3} but the combination gives {combo}")
    G = generic_ring(ring.field)
    imgs = _images(entries, xs)
    rows = [[G.parse(e).compose(imgs, ring) for e in row] for row in A_ROWS]
    w = [G.parse(e).compose(imgs, ring) for e in W_ENTRIES]
    v = [G.parse(e).compose(imgs, ring) for e in TARGET]
    res = [p - q for p, q in zip(_matvec(ring, rows, w), v)]
    return LinearCertificate(entries, xs, res)


def express_b3(entries) -> tuple[Polynomial, ...] | None:
    """Coefficients x1..x5 with b3 = x1 a1 + x2 a2 + x3 a3 + x4 b1 + x5 b2, by division.

    Divides b3 by the five other entries (degrevlex, first divisor wins);
    returns None when a remainder is left.
    """
    ring = entries[0].ring
    divisors = [e for e in entries[:5]]
    order = TermOrder("degrevlex")
    leads = [d.leading_term(order) if d else None for d in divisors]
    quots = [ring.zero() for _ in divisors]
    f = entries[5]
    while f:
        e, c = f.leading_term(order)
        for i, lt in enumerate(leads):
            if lt is None:
                continue
            le, lc = lt
            if all(x >= y for x, y in zip(e, le)):
                shift = tuple(x - y for x, y in zip(e, le))
                q = ring.monomial(shift, ring.field(c) * ring.field.inv(lc) if ring.field.characteristic
                                  else c / lc)
                quots[i] = quots[i] + q
                f = f - q * divisors[i]
                break
        else:
            return None
    return tuple(quots)


def arrangements(matrix):
    """The twelve reorderings of a 2x3 matrix (column permutations, optional row swap)."""
    rows = [list(matrix[0]), list(matrix[1])]
    for swap in (False, True):
        top, bottom = (rows[1], rows[0]) if swap else (rows[0], rows[1])
        for perm in itertools.permutations(range(3)):
            yield tuple(top[j] for j in perm), tuple(bottom[j] for j in perm)


def find_certificate(matrix) -> tuple[tuple, LinearCertificate] | None:
    """First arrangement whose b3 is a combination of the other entries, with its certificate."""
    for arr in arrangements(matrix):
        entries = (*arr[0], *arr[1])
        xs = express_b3(entries)
        if xs is not None:
            return arr, certificate(entries, xs)
    return None


def verify_theorem51_instance(entries, xs) -> ContainmentReport:
    """Certificate on the instance, plus an independent check of I^(3) ⊆ I^2."""
    t0 = time.perf_counter()
    cert = certificate(entries, xs)
    a1, a2, a3, b1, b2, b3 = cert.entries
    I = minors_ideal(((a1, a2, a3), (b1, b2, b3)))
    rep = symbolic_containment(I, 3, 2)
    rep.query = {"op": "theorem51_instance", "entries": [str(e) for e in cert.entries],
                 "xs": [str(x) for x in cert.xs], "certificate": cert.holds}
    rep.ms = (time.perf_counter() - t0) * 1000
    return rep


# -- Fermat configuration ---------------------------------------------------------------

CLASSICAL_FERMAT = ("x*(y^3 - z^3)", "y*(z^3 - x^3)", "z*(x^3 - y^3)")


def fermat_matrix(name: str, z_exp: int, ring: PolyRing | None = None):
    """The Fermat matrix ("M") or its reordering ("N") with z^z_exp in the corner."""
    R = ring or xyz_ring()
    x, y, z = R.gens()
    if name == "M":
        return (x ** 2, y ** 2, z ** z_exp), (y * z, x * z, x * y)
    if name == "N":
        return (x ** 2, x * z, z ** z_exp), (y * z, y ** 2, x * y)
    raise ValueError(f"unknown Fermat matrix {name!r}")


def fermat_ideal(ring: PolyRing | None = None) -> Ideal:
    R = ring or xyz_ring()
    return Ideal(R, [R.parse(s) for s in CLASSICAL_FERMAT])


def fermat_suite(ring: PolyRing | None = None) -> list[dict]:
    """Both matrices with z^3 and z^2 in the corner: homogeneity, match with the classical
    Fermat ideal, and the verdict of I^(3) ⊆ I^2 on the saturation route."""
    R = ring or xyz_ring()
    classical = fermat_ideal(R)
    out = []
    for name in ("M", "N"):
        for z_exp in (3, 2):
            I = minors_ideal(fermat_matrix(name, z_exp, R), R)
            homogeneous = I.is_homogeneous()
            row = {
                "matrix": name,
                "corner": f"z^{z_exp}",
                "generators": [str(g) for g in I.gens],
                "homogeneous": homogeneous,
                "classical_fermat": ideal_equal(I, classical),
            }
            if homogeneous:
                rep = symbolic_containment(I, 3, 2)
                rep.query.update(matrix=name, corner=row["corner"])
                row["I3_in_I2"] = rep
            else:
                row["I3_in_I2"] = None
                row["note"] = "not homogeneous, so saturating at the origin does not give the symbolic power"
            out.append(row)
    return out


def fermat_report_json(rows: list[dict]) -> list[dict]:
    out = []
    for r in rows:
        d = dict(r)
        if isinstance(d.get("I3_in_I2"), ContainmentReport):
            d["I3_in_I2"] = d["I3_in_I2"].to_json()
        out.append(d)
    return out
