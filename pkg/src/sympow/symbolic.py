"""Symbolic powers: saturation route and closed forms for curves in degrees 2 and 3.

For the ideals handled here (curve primes, reduced point configurations)
the n-th symbolic power is the saturation of the n-th ordinary power with
respect to the irrelevant ideal, which is the ground truth route.  Curve
primes additionally get explicit generators of P^(2) and P^(3), built from
the presentation and always checked against that ground truth.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .arith import NotDivisible, Polynomial
from .groebner import Ideal, ideal_equal, saturate
from .moncurve import MonomialCurve, labelings, third_row_exponents

log = logging.getLogger(__name__)


class NegativeExponent(ValueError):
    """A monomial of the Schenzel matrix needs a negative exponent."""


# -- saturation route ---------------------------------------------------------

@dataclass
class SymbolicPowerResult:
    n: int
    generators: Ideal
    route: str = "saturation"
    crosscheck: str = "not-run"

    def degrees(self) -> list[int | None]:
        return sorted((g.weighted_degree() for g in self.generators.gens), key=lambda d: (d is None, d))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "route": self.route,
            "crosscheck": self.crosscheck,
            "generators": [str(g) for g in self.generators.gens],
            "degrees": self.degrees(),
        }


_SAT_CACHE: dict = {}


def _cache_key(I: Ideal, n: int, method: str):
    return (I.ring, frozenset(g.monic() for g in I.gens), n, method)


def symbolic_power(I: Ideal, n: int, m: Ideal | None = None, method: str = "auto") -> SymbolicPowerResult:
    """saturate(I^n, m), with m the irrelevant ideal by default.

    Only meaningful when I^n agrees with its symbolic power away from m,
    which holds for curve primes and reduced point configurations.
    """
    if n < 1:
        raise ValueError("symbolic powers need n >= 1")
    if m is None:
        key = _cache_key(I, n, method)
        hit = _SAT_CACHE.get(key)
        if hit is None:
            hit = saturate(I ** n, Ideal.maximal(I.ring), method=method)
            _SAT_CACHE[key] = hit
        return SymbolicPowerResult(n, hit)
    return SymbolicPowerResult(n, saturate(I ** n, m, method=method))


def clear_cache() -> None:
    _SAT_CACHE.clear()


# -- Schenzel's generator of P^(2) ---------------------------------------------

@dataclass
class SchenzelData:
    D: tuple[tuple[Polynomial, ...], ...]
    det: Polynomial
    delta1: Polynomial
    content: tuple[int, ...]
    curve: MonomialCurve = field(repr=False)

    def ideal(self) -> Ideal:
        P = self.curve.ideal()
        return P ** 2 + Ideal(P.ring, [self.delta1])


def _det3(M) -> Polynomial:
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def _schenzel_here(curve: MonomialCurve) -> SchenzelData:
    row = third_row_exponents(curve)
    for j, e in enumerate(row):
        if min(e) < 0:
            raise NegativeExponent(f"entry (3,{j + 1}) of D needs exponents {e} for {curve.abc} {curve.exps}")
    R = curve.ring
    D = (tuple(curve.matrix[0]), tuple(curve.matrix[1]), tuple(R.monomial(e) for e in row))
    det = _det3(D)
    content = det.monomial_content()
    return SchenzelData(D, det, det.divide_by_term(content), content, curve)


def schenzel_delta1(curve: MonomialCurve) -> SchenzelData:
    """The extra generator of P^(2) = (P^2, delta1).

    delta1 is det D with its monomial content removed (det D itself is
    delta1 times a monomial).  When D has a negative exponent in this
    labeling, the other labelings are tried and the result mapped back.
    """
    try:
        return _schenzel_here(curve)
    except NegativeExponent as first:
        for other in labelings(*curve.original, field=curve.ring.field):
            try:
                data = _schenzel_here(other)
            except NegativeExponent:
                continue
            moved = curve.from_original(other.to_original(data.delta1))
            log.info("delta1 for %s taken from relabeling %s", curve.abc, other.perm)
            return SchenzelData(data.D, data.det, moved, data.content, curve)
        raise first


# -- closed form of P^(3) -------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """lhs * delta == sum of coeff * monomial * product of named factors."""

    delta: str
    lhs: tuple[int, int, int]
    rhs: tuple[tuple[int, tuple[int, int, int], tuple[tuple[str, int], ...]], ...]

    def has_negative_exponent(self) -> bool:
        return min(self.lhs) < 0 or any(min(e) < 0 for _, e, _ in self.rhs)

    def right_side(self, ring, values: dict[str, Polynomial]) -> Polynomial:
        total = ring.zero()
        for coeff, mono, factors in self.rhs:
            t = ring.monomial(mono, coeff)
            for name, k in factors:
                t = t * values[name] ** k
            total = total + t
        return total


def _rel(delta, lhs, *terms):
    return Relation(delta, tuple(lhs), tuple((c, tuple(e), tuple(f.items())) for c, e, f in terms))


def gap_exponents(exps, case: str) -> tuple[int, int, int]:
    a1, a2, b1, b2, c1, c2 = exps
    if case.startswith("1"):
        return max(0, 2 * a1 - a2), max(0, 2 * b2 - b1), max(0, 2 * c2 - c1)
    return max(0, 2 * a2 - a1), max(0, 2 * b2 - b1), max(0, 2 * c2 - c1)


CASE_DELTAS = {
    "1a": ("D21",),
    "1b": ("D22",),
    "1c": ("D231", "D232"),
    "2a": ("D21", "D22", "D23"),
    "2b": ("D2",),
}


def case_relations(exps, case: str) -> list[Relation]:
    """Defining relations of the extra generators of P^(3), grouped by generator.

    Each generator is read off the first relation of its group by exact
    division; the rest of the group are identities to verify.
    """
    a1, a2, b1, b2, c1, c2 = exps
    al, be, ga = gap_exponents(exps, case)
    F, G, H, D1 = "F", "G", "H", "D1"
    z_gap = c1 - 2 * c2 + ga
    if case == "1a":
        return [
            _rel("D21", (2 * a1, 0, 0),
                 (1, (a1, 0, z_gap), {H: 3}),
                 (-1, (0, 2 * b1 - 2 * b2, ga), {F: 1, G: 2}),
                 (1, (0, b1 - b2, c1 - c2 + ga), {G: 1, H: 2})),
            _rel("D21", (0, b2, 0),
                 (-1, (0, 0, ga), {F: 1, D1: 1}),
                 (-1, (a2 - a1, 0, z_gap), {G: 1, H: 2}),
                 (-1, (a2 - 2 * a1, b1 - b2, c1 - c2 + ga), {G: 2, H: 1})),
            _rel("D21", (0, 0, c2 - ga),
                 (1, (0, 0, 0), {H: 1, D1: 1}),
                 (1, (a2 - 2 * a1, 2 * b1 - 2 * b2, 0), {G: 3})),
        ]
    if case == "1b":
        return [
            _rel("D22", (a1, 0, 0),
                 (1, (0, 0, z_gap), {H: 3}),
                 (1, (0, b1 - 2 * b2, ga), {F: 2, G: 1})),
            _rel("D22", (0, b2, 0),
                 (-1, (0, 0, ga), {F: 1, D1: 1}),
                 (-1, (a2 - a1, 0, z_gap), {G: 1, H: 2})),
            _rel("D22", (0, 0, c2 - ga),
                 (1, (0, 0, 0), {H: 1, D1: 1}),
                 (-1, (a2 - a1, b1 - 2 * b2, 0), {F: 1, G: 2})),
        ]
    if case == "1c":
        return [
            _rel("D231", (a1, 0, 0),
                 (1, (0, 2 * b2 - b1, z_gap), {H: 3}),
                 (1, (0, 0, ga), {F: 2, G: 1})),
            _rel("D231", (0, b1 - b2, 0),
                 (-1, (0, 0, ga), {F: 1, D1: 1}),
                 (-1, (a2 - a1, 0, z_gap), {G: 1, H: 2})),
            _rel("D231", (0, 0, c2 - ga),
                 (1, (0, 2 * b2 - b1, 0), {H: 1, D1: 1}),
                 (-1, (a2 - a1, 0, 0), {F: 1, G: 2})),
            _rel("D232", (a2, 0, 0),
                 (1, (a1, 0, z_gap), {H: 3}),
                 (-1, (0, 2 * b1 - 2 * b2, ga), {F: 1, G: 2}),
                 (1, (0, b1 - b2, c1 - c2 + ga), {G: 1, H: 2})),
            _rel("D232", (0, b2, 0),
                 (-1, (2 * a1 - a2, 0, ga), {F: 1, D1: 1}),
                 (-1, (0, b1 - b2, c1 - c2 + ga), {G: 2, H: 1}),
                 (-1, (a1, 0, z_gap), {G: 1, H: 2})),
            _rel("D232", (0, 0, c2 - ga),
                 (1, (2 * a1 - a2, 0, 0), {H: 1, D1: 1}),
                 (1, (0, 2 * b1 - 2 * b2, 0), {G: 3})),
        ]
    if case in ("2a", "2b"):
        y_gap = b1 - 2 * b2 + be
        x_gap = a1 - 2 * a2 + al
        rels = [
            _rel("D21", (a2, 0, 0),
                 (-1, (0, be, z_gap), {H: 3}),
                 (-1, (0, y_gap, ga), {F: 2, G: 1})),
            _rel("D21", (0, b2 - be, 0),
                 (1, (0, 0, ga), {F: 1, D1: 1}),
                 (1, (0, 0, z_gap), {G: 1, H: 2})),
            _rel("D21", (0, 0, c2 - ga),
                 (-1, (0, be, 0), {H: 1, D1: 1}),
                 (1, (0, y_gap, 0), {F: 1, G: 2})),
            _rel("D22", (a2 - al, 0, 0),
                 (1, (0, 0, ga), {F: 1, D1: 1}),
                 (-1, (0, 0, z_gap), {G: 1, H: 2})),
            _rel("D22", (0, b2, 0),
                 (1, (x_gap, 0, ga), {F: 3}),
                 (1, (al, 0, z_gap), {G: 2, H: 1})),
            _rel("D22", (0, 0, c2 - ga),
                 (-1, (al, 0, 0), {G: 1, D1: 1}),
                 (-1, (x_gap, 0, 0), {F: 2, H: 1})),
            _rel("D23", (a2 - al, 0, 0),
                 (1, (0, be, 0), {H: 1, D1: 1}),
                 (1, (0, y_gap, 0), {F: 1, G: 2})),
            _rel("D23", (0, b2 - be, 0),
                 (-1, (al, 0, 0), {G: 1, D1: 1}),
                 (1, (x_gap, 0, 0), {F: 2, H: 1})),
            _rel("D23", (0, 0, c2),
                 (-1, (al, y_gap, 0), {G: 3}),
                 (-1, (x_gap, be, 0), {F: 1, H: 2})),
        ]
        if case == "2b":
            rels += [
                _rel("D2", (a2 - al, 0, 0), (1, (0, 0, 0), {"D21": 1})),
                _rel("D2", (0, b2 - be, 0), (1, (0, 0, 0), {"D22": 1})),
                _rel("D2", (0, 0, c2 - ga), (1, (0, 0, 0), {"D23": 1})),
            ]
        return rels
    raise ValueError(f"unknown case {case!r}")


@dataclass
class RelationCheck:
    delta: str
    index: int
    status: str  # source | holds | fails | negative-exponent | not-divisible


@dataclass
class CubeClosedForm:
    curve: MonomialCurve = field(repr=False)
    case_id: str
    gap_exponents: tuple[int, int, int]
    delta1: Polynomial
    deltas: dict[str, Polynomial]
    checks: list[RelationCheck]
    ideal: Ideal = field(repr=False)
    route: str = "closed-form"
    crosscheck: str = "not-run"
    flags: list[str] = field(default_factory=list)

    @property
    def relations_hold(self) -> bool:
        return all(c.status in ("source", "holds") for c in self.checks)

    def generator_degrees(self) -> dict[str, int | None]:
        return {name: d.weighted_degree() for name, d in self.deltas.items()}

    def to_json(self) -> dict:
        return {
            "curve": list(self.curve.original or self.curve.abc),
            "working_curve": list(self.curve.abc),
            "case": self.case_id,
            "gap_exponents": list(self.gap_exponents),
            "delta1": str(self.delta1),
            "deltas": {k: str(v) for k, v in self.deltas.items()},
            "degrees": self.generator_degrees(),
            "relations": [[c.delta, c.index, c.status] for c in self.checks],
            "route": self.route,
            "crosscheck": self.crosscheck,
            "flags": self.flags,
        }


def _solve_relations(curve: MonomialCurve, rels: list[Relation], values: dict) -> tuple[dict, list[RelationCheck]]:
    R = curve.ring
    found: dict[str, Polynomial] = {}
    checks = []
    counters: dict[str, int] = {}
    for rel in rels:
        idx = counters.get(rel.delta, 0)
        counters[rel.delta] = idx + 1
        if rel.has_negative_exponent():
            checks.append(RelationCheck(rel.delta, idx, "negative-exponent"))
            continue
        rhs = rel.right_side(R, {**values, **found})
        if rel.delta not in found:
            try:
                found[rel.delta] = rhs.divide_by_term(rel.lhs)
            except NotDivisible:
                checks.append(RelationCheck(rel.delta, idx, "not-divisible"))
                continue
            checks.append(RelationCheck(rel.delta, idx, "source"))
        else:
            ok = R.monomial(rel.lhs) * found[rel.delta] == rhs
            checks.append(RelationCheck(rel.delta, idx, "holds" if ok else "fails"))
    return found, checks


def cube_closed_form(curve: MonomialCurve, crosscheck: bool = True) -> CubeClosedForm:
    """Generators of P^(3) as (P^3, delta1*P, extra generators of the curve's case).

    Every relation is checked as an identity.  If an extra generator cannot
    be produced, or (with ``crosscheck``) the assembled ideal differs from the
    saturation, the result falls back to the saturation and is flagged.
    """
    if curve.case is None:
        raise ValueError(f"curve {curve.abc} with exponents {curve.exps} is in no closed-form case")
    R = curve.ring
    char = R.characteristic
    if curve.case == "2a" and char == 2:
        raise ValueError("case 2a needs characteristic other than 2")
    if curve.case == "2b" and char != 2:
        raise ValueError("case 2b needs characteristic 2")
    schenzel = schenzel_delta1(curve)
    F, G, H = curve.generators
    values = {"F": F, "G": G, "H": H, "D1": schenzel.delta1}
    found, checks = _solve_relations(curve, case_relations(curve.exps, curve.case), values)
    names = CASE_DELTAS[curve.case]
    deltas = {k: found[k] for k in names if k in found}
    P = curve.ideal()
    flags = []
    missing = [k for k in names if k not in deltas]
    if missing:
        flags.append(f"could not build {', '.join(missing)}")
    flags += [f"relation {c.index} of {c.delta}: {c.status}" for c in checks if c.status not in ("source", "holds")]
    ideal = P ** 3 + P * schenzel.delta1 + Ideal(R, list(deltas.values()))
    result = CubeClosedForm(curve, curve.case, gap_exponents(curve.exps, curve.case), schenzel.delta1,
                            deltas, checks, ideal, flags=flags)
    if crosscheck or missing:
        sat = symbolic_power(P, 3).generators
        same = not missing and ideal_equal(ideal, sat)
        result.crosscheck = "pass" if same else "fail"
        if not same:
            result.flags.append("closed form differs from saturation; using saturation")
            result.ideal = sat
            result.route = "saturation"
            log.warning("closed form for %s (case %s) failed: %s", curve.abc, curve.case, result.flags)
    return result


def closed_form_power(curve: MonomialCurve, n: int, crosscheck: bool = True) -> SymbolicPowerResult:
    """P^(n) from the closed forms, n <= 3."""
    P = curve.ideal()
    if n == 1:
        return SymbolicPowerResult(1, P, "closed-form", "pass")
    if n == 2:
        I = schenzel_delta1(curve).ideal()
        status = "not-run"
        if crosscheck:
            status = "pass" if ideal_equal(I, symbolic_power(P, 2).generators) else "fail"
        return SymbolicPowerResult(2, I, "closed-form", status)
    if n == 3:
        cf = cube_closed_form(curve, crosscheck)
        return SymbolicPowerResult(3, cf.ideal, cf.route, cf.crosscheck)
    raise ValueError("closed forms exist only for n <= 3; use symbolic_power")


def degree_separation(cf: CubeClosedForm) -> dict:
    """Extra generators of P^(3) against the top degree of F^2, G^2, H^2."""
    bound = max(2 * g.weighted_degree() for g in cf.curve.generators)
    degrees = cf.generator_degrees()
    return {"bound": bound, "degrees": degrees, "holds": all(d > bound for d in degrees.values())}
