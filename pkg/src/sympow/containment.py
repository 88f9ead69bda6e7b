"""Containment experiments between symbolic and ordinary powers.

Every verdict comes from normal forms against a Groebner basis of the
target; a failure always carries a generator of the left ideal whose
normal form is nonzero.  Statements about all large n are only ever
checked on a finite window, and the reports say which.
"""

from __future__ import annotations

import contextlib
import contextvars
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .arith import Polynomial, TermOrder
from .groebner import Ideal, ResourceLimit, ideal_equal
from .moncurve import MonomialCurve
from .symbolic import symbolic_power

log = logging.getLogger(__name__)

_order_var: contextvars.ContextVar[TermOrder | None] = contextvars.ContextVar("containment_order", default=None)


@contextlib.contextmanager
def containment_order(order: TermOrder | None):
    """Term order for the target bases of every containment check in this context."""
    token = _order_var.set(order)
    try:
        yield order
    finally:
        _order_var.reset(token)


@dataclass
class ContainmentReport:
    query: dict
    verdict: str  # holds | fails
    witness: Polynomial | None = None
    gb_stats: dict = field(default_factory=dict)
    ms: float = 0.0

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_json(self) -> dict:
        return {
            "query": self.query,
            "verdict": self.verdict,
            "witness": None if self.witness is None else str(self.witness),
            "gb_stats": self.gb_stats,
            "ms": round(self.ms, 3),
        }


@dataclass
class CriterionParams:
    c: int = 2
    s: int | None = None
    t: int | None = None
    r: int | None = None
    q: int | None = None
    alpha: Fraction = Fraction(1)
    window: tuple[int, int] = (1, 3)

    def __post_init__(self):
        self.alpha = Fraction(self.alpha)
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.window[0] > self.window[1]:
            raise ValueError(f"empty window {self.window}")
        if self.t is not None and self.r is not None and not self.t < self.r:
            raise ValueError("need t < r")

    def ns(self) -> range:
        return range(self.window[0], self.window[1] + 1)


def check_containment(A: Ideal, B: Ideal, query: dict | None = None,
                      order: TermOrder | None = None) -> ContainmentReport:
    """Is A contained in B?  Generators of A are reduced against a Groebner basis of B."""
    if A.ring.variables != B.ring.variables or A.ring.field != B.ring.field:
        raise ValueError("containment between ideals of different rings")
    t0 = time.perf_counter()
    G = B.groebner(order or _order_var.get())
    witness = None
    for g in A.gens:
        if not G.contains(g):
            witness = g
            break
    ms = (time.perf_counter() - t0) * 1000
    stats = {"target_basis_size": len(G), "order": str(G.order),
             **{k: v for k, v in G.stats.items() if isinstance(v, (int, float, str))}}
    return ContainmentReport(dict(query or {"op": "contain"}), "holds" if witness is None else "fails",
                             witness, stats, ms)


def symbolic_containment(I: Ideal, m: int, s: int, order: TermOrder | None = None) -> ContainmentReport:
    """I^(m) ⊆ I^s, with the symbolic power from the saturation route."""
    if m < 1 or s < 1:
        raise ValueError("need m, s >= 1")
    t0 = time.perf_counter()
    Im = symbolic_power(I, m).generators
    rep = check_containment(Im, I ** s, {"op": "symbolic_containment", "m": m, "s": s}, order)
    rep.ms = (time.perf_counter() - t0) * 1000
    return rep


# -- resurgence ----------------------------------------------------------------

@dataclass
class ResurgenceEstimate:
    lower_bound: Fraction
    witnesses: list[tuple[int, int]]
    search_box: tuple[int, int]
    thresholds: dict[int, int | None]
    reports: list[ContainmentReport] = field(default_factory=list, repr=False)
    pruned: int = 0
    partial: bool = False

    def to_json(self) -> dict:
        return {
            "lower_bound": str(self.lower_bound),
            "witnesses": [list(w) for w in self.witnesses],
            "search_box": list(self.search_box),
            "thresholds": {str(k): v for k, v in self.thresholds.items()},
            "evaluated": len(self.reports),
            "pruned": self.pruned,
            "partial": self.partial,
        }


def resurgence_search(I: Ideal, M_max: int, S_max: int) -> ResurgenceEstimate:
    """Failures of I^(m) ⊆ I^s over s <= m <= M_max, s <= S_max.

    Pruning uses only two facts: containment at (m, s) implies it at (m', s)
    for m' >= m, and at (m, s') for s' <= s.  So for each s the first
    holding m is a threshold, thresholds never decrease in s, and the scan
    for s + 1 starts at the threshold for s.  The largest failing m for each
    s is always checked directly, so every witness carries a nonzero normal
    form.
    """
    if M_max < 2 or S_max < 2:
        raise ValueError("search box must be at least (2, 2)")
    reports: list[ContainmentReport] = []
    witnesses: list[tuple[int, int]] = []
    thresholds: dict[int, int | None] = {}
    start = 1
    pruned = 0
    partial = False
    for s in range(1, min(S_max, M_max) + 1):
        m = max(s, start)
        pruned += m - s
        found = None
        try:
            if m > s:
                # largest failure inherited from s - 1; confirm it here
                rep = symbolic_containment(I, m - 1, s)
                reports.append(rep)
                if rep.holds:  # pragma: no cover - contradicts monotonicity
                    raise AssertionError(f"monotonicity violated at {(m - 1, s)}")
                witnesses.append((m - 1, s))
            while m <= M_max:
                rep = symbolic_containment(I, m, s)
                reports.append(rep)
                if rep.holds:
                    found = m
                    break
                witnesses.append((m, s))
                m += 1
        except ResourceLimit as exc:
            log.warning("resurgence search stopped at s=%d: %s", s, exc)
            partial = True
            break
        thresholds[s] = found
        if found is None:
            break
        start = found
    best = max((Fraction(m, s) for m, s in witnesses), default=Fraction(1))
    witnesses = sorted(set(witnesses), key=lambda w: (-Fraction(*w), w))
    return ResurgenceEstimate(best, witnesses, (M_max, S_max), thresholds, reports, pruned, partial)


# -- windows and probes ----------------------------------------------------------

def harbourne_window(I: Ideal, c: int, n_range: Iterable[int]) -> list[ContainmentReport]:
    """I^(cn-c+1) ⊆ I^n for each n."""
    out = []
    for n in n_range:
        rep = symbolic_containment(I, c * n - c + 1, n)
        rep.query.update(op="harbourne", c=c, n=n)
        out.append(rep)
    return out


def _power_times(I: Ideal, k: int, J: Ideal) -> Ideal:
    """J^k * I, with J^0 = (1)."""
    return I if k == 0 else (J ** k) * I


def stable_witness_search(I: Ideal, c: int, t_max: int) -> tuple[int | None, list[ContainmentReport]]:
    """Smallest t <= t_max with I^(ct-c+1) ⊆ m I^t."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    mx = Ideal.maximal(I.ring)
    reports = []
    for t in range(1, t_max + 1):
        left = symbolic_power(I, c * t - c + 1).generators
        rep = check_containment(left, mx * I ** t, {"op": "stable_witness", "c": c, "t": t})
        reports.append(rep)
        if rep.holds:
            return t, reports
    return None, reports


def propagation_check(I: Ideal, c: int, t: int, q_max: int, r_max: int) -> list[ContainmentReport]:
    """I^(c(tq+r)) ⊆ m^q I^(tq+r) for 0 <= q <= q_max, 0 <= r <= r_max (skipping tq+r = 0)."""
    mx = Ideal.maximal(I.ring)
    out = []
    for q in range(q_max + 1):
        for r in range(r_max + 1):
            e = t * q + r
            if e == 0:
                continue
            left = symbolic_power(I, c * e).generators
            right = _power_times(I ** e, q, mx)
            out.append(check_containment(left, right, {"op": "propagation", "c": c, "t": t, "q": q, "r": r}))
    return out


def swanson_probe(I: Ideal, n_range: Iterable[int], s_max: int) -> tuple[int | None, list[ContainmentReport]]:
    """Least s <= s_max with I^(sn) ⊆ I^n for every n in the window."""
    ns = list(n_range)
    reports = []
    for s in range(1, s_max + 1):
        ok = True
        for n in ns:
            rep = symbolic_containment(I, s * n, n)
            rep.query.update(op="swanson", s=s, n=n)
            reports.append(rep)
            if not rep.holds:
                ok = False
                break
        if ok:
            return s, reports
    return None, reports


def star_condition_probe(I: Ideal, c: int, alpha, n_range: Iterable[int]) -> list[ContainmentReport]:
    """I^(cn) ⊆ m^floor(n/alpha) I^n for each n."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    mx = Ideal.maximal(I.ring)
    out = []
    for n in n_range:
        k = int(n // alpha)
        left = symbolic_power(I, c * n).generators
        out.append(check_containment(left, _power_times(I ** n, k, mx),
                                     {"op": "star", "c": c, "alpha": str(alpha), "n": n, "m_power": k}))
    return out


# -- four-thirds machinery for curves -----------------------------------------------

def guaranteed_power(m: int) -> int:
    """Ordinary power s(m) with P^(m) ⊆ P^s(m) guaranteed under the degree-two hypotheses.

    Writing m = 4n + i: i in {0, 1} gives 3n, i = 2 gives 3n + 1, i = 3 gives 3n + 2.
    """
    n, i = divmod(m, 4)
    return {0: 3 * n, 1: 3 * n, 2: 3 * n + 1, 3: 3 * n + 2}[i]


@dataclass
class FourThirdsReport:
    curve: tuple[int, int, int]
    shape: dict
    hypothesis_a: ContainmentReport
    hypothesis_b: ContainmentReport
    rees_degree2: list[dict]
    guarantees: list[dict]
    boundary: ContainmentReport | None
    window: int

    @property
    def hypotheses_hold(self) -> bool:
        return self.hypothesis_a.holds and self.hypothesis_b.holds and all(r["equal"] for r in self.rees_degree2)

    def to_json(self) -> dict:
        return {
            "curve": list(self.curve),
            "shape": self.shape,
            "hypothesis_2a": self.hypothesis_a.to_json(),
            "hypothesis_2b": self.hypothesis_b.to_json(),
            "rees_degree2_proxy": {
                "note": f"finite-window proxy for generation in degree 2, checked for powers <= {self.window}",
                "checks": self.rees_degree2,
            },
            "guarantees": self.guarantees,
            "boundary_P4_in_P3": None if self.boundary is None else self.boundary.to_json(),
        }


def four_thirds_suite(curve: MonomialCurve, J: Ideal | None = None, m_max: int = 5) -> FourThirdsReport:
    P = curve.ideal()
    J = J if J is not None else curve.entries_ideal()
    P2 = symbolic_power(P, 2).generators
    hyp_a = check_containment(P2, J * P, {"op": "fourthirds_2a"})
    hyp_b = check_containment(J * P2, P ** 2, {"op": "fourthirds_2b"})
    rees = []
    for e in range(3, m_max + 1):
        k, odd = divmod(e, 2)
        product = P2 ** k if not odd else (P2 ** k) * P
        equal = ideal_equal(symbolic_power(P, e).generators, product)
        rees.append({"power": e, "product": f"(P^(2))^{k}" + ("*P" if odd else ""), "equal": equal})
    a1, a2, b1, b2, c1, c2 = curve.exps
    shape = {"b1_eq_b2": b1 == b2, "a1_eq_a2_and_c1_eq_c2": a1 == a2 and c1 == c2}
    shape["matches"] = shape["b1_eq_b2"] or shape["a1_eq_a2_and_c1_eq_c2"]
    hyps = hyp_a.holds and hyp_b.holds and all(r["equal"] for r in rees)
    guarantees = []
    for m in range(2, m_max + 1):
        s = guaranteed_power(m)
        rep = symbolic_containment(P, m, s)
        guarantees.append({"m": m, "s": s, "ratio": str(Fraction(m, s)), "conditional_on_hypotheses": hyps,
                           "direct": rep.verdict})
    boundary = symbolic_containment(P, 4, 3) if m_max >= 4 else None
    return FourThirdsReport(curve.original or curve.abc, shape, hyp_a, hyp_b, rees, guarantees, boundary, m_max)
