"""Space monomial curves k[t^a, t^b, t^c]: kernel oracle and Herzog presentations.

A non-complete-intersection curve ideal is generated by the 2x2 minors of

    [ x^a1  y^b1  z^c1 ]
    [ z^c2  x^a2  y^b2 ]

namely F = y^(b1+b2) - x^a2 z^c1, G = z^(c1+c2) - x^a1 y^b2 and
H = x^(a1+a2) - y^b1 z^c2, all quasi-homogeneous for deg (x, y, z) = (a, b, c).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .arith import Field, PolyRing, Polynomial, xyz_ring
from .groebner import Ideal, eliminate, ideal_equal

log = logging.getLogger(__name__)

# relabelings of (x, y, z): new variable j is old variable perm[j]
PERMUTATIONS = ((0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2))


class CompleteIntersection(ValueError):
    """The curve ideal is minimally generated by two elements."""


class NoPresentationFound(RuntimeError):
    pass


def normalize_triple(a: int, b: int, c: int) -> tuple[int, int, int]:
    if min(a, b, c) < 1:
        raise ValueError(f"curve exponents must be positive, got {(a, b, c)}")
    g = math.gcd(a, math.gcd(b, c))
    if g > 1:
        log.warning("curve (%d, %d, %d) has gcd %d; using (%d, %d, %d)", a, b, c, g, a // g, b // g, c // g)
    return a // g, b // g, c // g


def curve_ring(a: int, b: int, c: int, field: Field | None = None) -> PolyRing:
    return xyz_ring(field, (a, b, c))


def curve_kernel_oracle(a: int, b: int, c: int, field: Field | None = None) -> Ideal:
    """Kernel of x -> t^a, y -> t^b, z -> t^c, by eliminating t."""
    a, b, c = normalize_triple(a, b, c)
    fld = field or Field()
    big = PolyRing(("t", "x", "y", "z"), fld, (1, a, b, c))
    t, x, y, z = big.gens()
    E = eliminate(Ideal(big, [x - t**a, y - t**b, z - t**c]), ["t"], drop=True)
    ring = curve_ring(a, b, c, fld)
    P = Ideal(ring, [Polynomial(ring, g.terms, _trusted=True) for g in E.gens])
    return P.minimal_generators()


def minors_ideal(matrix, ring: PolyRing | None = None) -> Ideal:
    """Ideal of the 2x2 minors of a 2x3 matrix of polynomials.

    Signs follow F, G, H: (cols 2,3), (cols 3,1), (cols 1,2).
    """
    (a1, a2, a3), (b1, b2, b3) = matrix
    ring = ring or a1.ring
    f = a2 * b3 - a3 * b2
    g = a3 * b1 - a1 * b3
    h = a1 * b2 - a2 * b1
    return Ideal(ring, [f, g, h])


def presentation_generators(ring: PolyRing, exps) -> tuple[Polynomial, Polynomial, Polynomial]:
    a1, a2, b1, b2, c1, c2 = exps
    x, y, z = ring.gens()
    F = y ** (b1 + b2) - x ** a2 * z ** c1
    G = z ** (c1 + c2) - x ** a1 * y ** b2
    H = x ** (a1 + a2) - y ** b1 * z ** c2
    return F, G, H


def presentation_matrix(ring: PolyRing, exps):
    a1, a2, b1, b2, c1, c2 = exps
    x, y, z = ring.gens()
    return ((x ** a1, y ** b1, z ** c1), (z ** c2, x ** a2, y ** b2))


def homogeneity_relations(abc, exps) -> dict[str, bool]:
    """The degree identities that make F, G, H quasi-homogeneous."""
    a, b, c = abc
    a1, a2, b1, b2, c1, c2 = exps
    return {
        "H": a * (a1 + a2) == b * b1 + c * c2,
        "F": b * (b1 + b2) == a * a2 + c * c1,
        "G": c * (c1 + c2) == a * a1 + b * b2,
    }


def classify_case(exps, characteristic: int) -> str | None:
    """Which closed-form case applies to a presentation, if any."""
    a1, a2, b1, b2, c1, c2 = exps
    if a1 <= a2 and b1 >= b2 and c1 >= c2:
        if 2 * a1 - a2 <= 0:
            return "1a"
        if 2 * b2 - b1 <= 0:
            return "1b"
        return "1c"
    if a1 > a2 and b1 > b2 and c1 > c2:
        return "2b" if characteristic == 2 else "2a"
    return None


CASE_PREFERENCE = {"1a": 0, "1b": 1, "2a": 2, "2b": 2, "1c": 3}


def _candidate_exponents(abc, bounds):
    a, b, c = abc
    for sa in range(2, bounds[0] + 1):
        for sb in range(2, bounds[1] + 1):
            for sc in range(2, bounds[2] + 1):
                for a1 in range(1, sa):
                    a2 = sa - a1
                    num = c * sc - a * a1
                    if num <= 0 or num % b:
                        continue
                    b2 = num // b
                    b1 = sb - b2
                    if b1 < 1:
                        continue
                    num = a * sa - b * b1
                    if num <= 0 or num % c:
                        continue
                    c2 = num // c
                    c1 = sc - c2
                    if c1 < 1:
                        continue
                    exps = (a1, a2, b1, b2, c1, c2)
                    if all(homogeneity_relations(abc, exps).values()):
                        yield exps


def find_presentation(P: Ideal, abc) -> tuple[int, ...]:
    """Exponents (a1, a2, b1, b2, c1, c2) whose minors generate exactly ``P``."""
    maxdeg = max(g.weighted_degree() for g in P.gens)
    bounds = tuple(maxdeg // w for w in abc)
    for exps in _candidate_exponents(abc, bounds):
        if ideal_equal(Ideal(P.ring, presentation_generators(P.ring, exps)), P):
            return exps
    raise NoPresentationFound(f"no presentation for curve {abc} with sums bounded by {bounds}")


@dataclass
class MonomialCurve:
    """A non-complete-intersection space monomial curve with a Herzog presentation.

    ``a, b, c`` and ``exps`` are in the working labeling of the variables;
    ``perm`` records it: working variable j is variable ``perm[j]`` of the
    curve as originally given by ``original``.
    """

    a: int
    b: int
    c: int
    exps: tuple[int, int, int, int, int, int]
    ring: PolyRing
    perm: tuple[int, int, int] = (0, 1, 2)
    original: tuple[int, int, int] | None = None
    case: str | None = None
    oracle: Ideal | None = field(default=None, repr=False)

    @property
    def abc(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def weights(self) -> tuple[int, int, int]:
        return self.abc

    @property
    def is_complete_intersection(self) -> bool:
        return False

    @property
    def generators(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        return presentation_generators(self.ring, self.exps)

    @property
    def F(self) -> Polynomial:
        return self.generators[0]

    @property
    def G(self) -> Polynomial:
        return self.generators[1]

    @property
    def H(self) -> Polynomial:
        return self.generators[2]

    @property
    def matrix(self):
        return presentation_matrix(self.ring, self.exps)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    def maximal_ideal(self) -> Ideal:
        return Ideal.maximal(self.ring)

    def entries_ideal(self) -> Ideal:
        """The ideal generated by the six matrix entries."""
        return Ideal(self.ring, [e for row in self.matrix for e in row])

    def relations(self) -> dict[str, bool]:
        return homogeneity_relations(self.abc, self.exps)

    def weighted_degrees(self) -> dict[str, int]:
        return {name: g.weighted_degree() for name, g in zip("FGH", self.generators)}

    def to_original(self, f: Polynomial) -> Polynomial:
        """Map a polynomial from the working labeling back to the original variables."""
        ring = curve_ring(*(self.original or self.abc), self.ring.field)
        return f.permute(self.perm, ring)

    def from_original(self, f: Polynomial) -> Polynomial:
        """Inverse of :meth:`to_original`."""
        inv = [self.perm.index(i) for i in range(3)]
        return f.permute(inv, self.ring)

    def ideal_to_original(self, I: Ideal) -> Ideal:
        ring = curve_ring(*(self.original or self.abc), self.ring.field)
        return Ideal(ring, [self.to_original(g) for g in I.gens])

    def describe(self) -> dict:
        return {
            "curve": list(self.original or self.abc),
            "working_curve": list(self.abc),
            "relabeling": list(self.perm),
            "exponents": dict(zip(("a1", "a2", "b1", "b2", "c1", "c2"), self.exps)),
            "case": self.case,
            "matrix": [[str(e) for e in row] for row in self.matrix],
            "F": str(self.F),
            "G": str(self.G),
            "H": str(self.H),
            "weighted_degrees": self.weighted_degrees(),
            "relations": self.relations(),
        }


class UnsupportedCharacteristic(ValueError):
    pass


def _check_characteristic(fld: Field) -> None:
    if fld.characteristic == 3:
        raise UnsupportedCharacteristic("curve experiments are not run in characteristic 3")


def labelings(a: int, b: int, c: int, field: Field | None = None) -> list[MonomialCurve]:
    """The curve presented in each of the six labelings of (x, y, z).

    Raises :class:`CompleteIntersection` for two-generated curve ideals.
    """
    abc = normalize_triple(a, b, c)
    fld = field or Field()
    _check_characteristic(fld)
    P = curve_kernel_oracle(*abc, field=fld)
    if len(P.gens) == 2:
        raise CompleteIntersection(f"curve {abc} is a complete intersection: {P}")
    if len(P.gens) != 3:
        raise NoPresentationFound(f"curve {abc} ideal has {len(P.gens)} minimal generators")
    out = []
    for perm in PERMUTATIONS:
        wabc = tuple(abc[perm[j]] for j in range(3))
        ring = curve_ring(*wabc, fld)
        inv = [perm.index(i) for i in range(3)]
        moved = Ideal(ring, [g.permute(inv, ring) for g in P.gens])
        exps = find_presentation(moved, wabc)
        out.append(MonomialCurve(*wabc, exps=exps, ring=ring, perm=perm, original=abc,
                                 case=classify_case(exps, fld.characteristic), oracle=moved))
    return out


def herzog_presentation(a: int, b: int, c: int, field: Field | None = None,
                        normalize: bool = True) -> MonomialCurve:
    """Presentation of the curve ideal, relabeled into a closed-form case when ``normalize``.

    Among the labelings the preferred one lands in the earliest case of
    1a, 1b, 2a/2b, 1c and has a non-negative Schenzel shift row.
    """
    options = labelings(a, b, c, field)
    if not normalize:
        return options[0]
    ranked = sorted(
        range(len(options)),
        key=lambda i: (CASE_PREFERENCE.get(options[i].case, 9),
                       not third_row_exponents_nonnegative(options[i]), i),
    )
    best = options[ranked[0]]
    if best.case is None:
        raise NoPresentationFound(f"no relabeling of {best.original} satisfies a closed-form case")
    return best


def third_row_exponents(curve: MonomialCurve) -> tuple[tuple[int, int, int], ...]:
    a, b, c = curve.abc
    a1, a2, b1, b2, c1, c2 = curve.exps
    return (
        (a1 - a2 + a, b1 + b, c),
        (a, b1 - b2 + b, c1 + c),
        (a1 + a, b, c1 - c2 + c),
    )


def third_row_exponents_nonnegative(curve: MonomialCurve) -> bool:
    return all(e >= 0 for row in third_row_exponents(curve) for e in row)


def is_complete_intersection(a: int, b: int, c: int, field: Field | None = None) -> bool:
    return len(curve_kernel_oracle(a, b, c, field).gens) == 2


def substitution_check(P: Ideal, abc) -> bool:
    """Every generator vanishes under x -> t^a, y -> t^b, z -> t^c."""
    for g in P.gens:
        total: dict[int, int] = {}
        for e, coef in g.terms.items():
            d = sum(k * w for k, w in zip(e, abc))
            total[d] = total.get(d, 0) + coef
        p = P.ring.characteristic
        if any((v % p if p else v) for v in total.values()):
            return False
    return True


def corpus_curves(triples, field: Field | None = None) -> list[MonomialCurve]:
    """Presentations for the non-complete-intersection members of ``triples``."""
    out = []
    seen = set()
    for t in triples:
        abc = normalize_triple(*t)
        if abc in seen:
            continue
        seen.add(abc)
        try:
            out.append(herzog_presentation(*abc, field=field))
        except CompleteIntersection:
            log.info("skipping complete intersection %s", abc)
    return out


DEFAULT_CORPUS = ((3, 4, 5), (3, 5, 7), (4, 5, 6), (5, 6, 7), (4, 6, 9), (5, 7, 9))
