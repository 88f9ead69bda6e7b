"""Buchberger engine and ideal operations.

The engine packs every monomial into one Python int: the high slots hold the
(non-negative) rows of the order matrix, so comparing keys compares monomials
and adding keys multiplies them; the low slots hold the raw exponents with a
guard bit each, which makes a divisibility test one subtraction and a mask.
"""

from __future__ import annotations

import contextlib
import contextvars
import heapq
import itertools
import random
import threading
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .arith import (
    NotDivisible,
    PolyRing,
    Polynomial,
    RingMismatch,
    TermOrder,
    exact_divide,
)


class ResourceLimit(RuntimeError):
    """A Groebner computation exceeded its configured budget."""


@dataclass(frozen=True)
class Budget:
    """Limits for a single Groebner basis computation."""

    max_pairs: int = 10**6
    max_basis: int = 200_000
    max_seconds: float | None = None


DEFAULT_BUDGET = Budget()
STRETCH_BUDGET = Budget(max_pairs=10**8, max_basis=10**7)

_budget_var: contextvars.ContextVar[Budget] = contextvars.ContextVar("budget", default=DEFAULT_BUDGET)


def current_budget() -> Budget:
    return _budget_var.get()


@contextlib.contextmanager
def budget(b: Budget) -> Iterator[Budget]:
    """Temporarily replace the budget used by every Groebner call in this context."""
    token = _budget_var.set(b)
    try:
        yield b
    finally:
        _budget_var.reset(token)


# -- packed monomials -------------------------------------------------------

_EXP_BITS = 20
_ROW_BITS = 48


class _Packer:
    def __init__(self, nvars: int, rows: Sequence[Sequence[int]]):
        self.n = nvars
        eb = _EXP_BITS
        self.shifts = [eb * (nvars - 1 - i) for i in range(nvars)]
        low_bits = eb * nvars
        self.low = (1 << low_bits) - 1
        self.guard = sum(1 << (s + eb - 1) for s in self.shifts)
        self.emask = (1 << eb) - 1
        nrows = len(rows)
        row_shift = [low_bits + _ROW_BITS * (nrows - 1 - r) for r in range(nrows)]
        self.unit = [
            sum(rows[r][i] << row_shift[r] for r in range(nrows)) + (1 << self.shifts[i])
            for i in range(nvars)
        ]

    def pack(self, exps: Sequence[int]) -> int:
        if any(e >= 1 << (_EXP_BITS - 1) for e in exps):
            raise ResourceLimit("exponent too large for packed monomials")
        return sum(e * u for e, u in zip(exps, self.unit))

    def unpack(self, key: int) -> tuple[int, ...]:
        m = self.emask
        return tuple((key >> s) & m for s in self.shifts)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return (((b & self.low) | g) - (a & self.low)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.pack([max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))])

    def coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.unpack(a), self.unpack(b)))


class _Engine:
    """Polynomials as ``{packed key: coeff}`` dicts for one (ring, order)."""

    def __init__(self, ring: PolyRing, order: TermOrder):
        self.ring = ring
        self.order = order
        self.p = ring.characteristic
        self.packer = _Packer(ring.nvars, order.rows(ring.nvars))
        self.weights = ring.weights

    def to_dict(self, f: Polynomial) -> dict:
        pack = self.packer.pack
        return {pack(e): c for e, c in f.terms.items()}

    def from_dict(self, d: dict) -> Polynomial:
        unpack = self.packer.unpack
        return Polynomial(self.ring, {unpack(k): c for k, c in d.items()}, _trusted=True)

    def wdeg(self, key: int) -> int:
        return sum(w * e for w, e in zip(self.weights, self.packer.unpack(key)))

    def monic(self, d: dict) -> tuple[int, dict]:
        lk = max(d)
        c = d[lk]
        if c != 1:
            p = self.p
            if p:
                inv = pow(c, -1, p)
                d = {k: v * inv % p for k, v in d.items()}
            else:
                d = {k: v / c for k, v in d.items()}
        return lk, d

    def reduce(self, f: dict, reducers: list, full: bool = True) -> dict:
        """Remainder of ``f`` (consumed) modulo monic ``reducers``.

        ``reducers`` holds ``(lead_key, lead_low, tail_items)`` triples.
        """
        if not f:
            return {}
        low, guard, p = self.packer.low, self.packer.guard, self.p
        heap = [-k for k in f]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        rem = {}
        while heap:
            k = -pop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            kl = (k & low) | guard
            for lk, ll, tail in reducers:
                if (kl - ll) & guard == guard:
                    s = k - lk
                    get = f.get
                    if p:
                        for tk, tc in tail:
                            nk = tk + s
                            old = get(nk)
                            if old is None:
                                f[nk] = -c * tc % p
                                push(heap, -nk)
                            else:
                                v = (old - c * tc) % p
                                if v:
                                    f[nk] = v
                                else:
                                    del f[nk]
                    else:
                        for tk, tc in tail:
                            nk = tk + s
                            old = get(nk)
                            if old is None:
                                f[nk] = -c * tc
                                push(heap, -nk)
                            else:
                                v = old - c * tc
                                if v:
                                    f[nk] = v
                                else:
                                    del f[nk]
                    break
            else:
                rem[k] = c
                if not full:
                    rem.update(f)
                    break
        return rem

    @staticmethod
    def reducer(lk: int, d: dict, low: int) -> tuple:
        return (lk, lk & low, [(k, c) for k, c in d.items() if k != lk])

    # -- Buchberger ------------------------------------------------------
    def buchberger(self, inputs: Iterable[dict], limit: Budget, stats: dict) -> list[dict]:
        """Reduced Groebner basis (monic dicts, ascending leading terms)."""
        pk = self.packer
        low = pk.low
        polys: list[dict] = []
        lead: list[int] = []
        sugar: list[int] = []
        active: list[int] = []
        reducers: list[tuple] = []
        live: dict[tuple[int, int], int] = {}
        queue: list = []
        counter = itertools.count()
        started = time.perf_counter()

        for f in inputs:
            if f:
                s = max(self.wdeg(k) for k in f)
                heapq.heappush(queue, (s, max(f), next(counter), 0, f))

        def add(h: dict, s: int):
            lk, h = self.monic(h)
            idx = len(polys)
            polys.append(h)
            lead.append(lk)
            sugar.append(s)
            # Gebauer-Moeller: drop old pairs made redundant by h
            for (i, j), L in list(live.items()):
                if pk.divides(lk, L):
                    if pk.lcm(lead[i], lk) != L and pk.lcm(lead[j], lk) != L:
                        del live[(i, j)]
            groups: dict[int, list[tuple[int, bool]]] = {}
            for g in active:
                L = pk.lcm(lead[g], lk)
                groups.setdefault(L, []).append((g, pk.coprime(lead[g], lk)))
            minimal: list[int] = []
            for L in sorted(groups):
                if not any(pk.divides(M, L) for M in minimal):
                    minimal.append(L)
            for L in minimal:
                group = groups[L]
                if any(cp for _, cp in group):
                    continue
                g = min(i for i, _ in group)
                live[(g, idx)] = L
                ps = max(sugar[g] + self.wdeg(L - lead[g]), s + self.wdeg(L - lk))
                heapq.heappush(queue, (ps, L, next(counter), 1, (g, idx)))
            kept = [g for g in active if not pk.divides(lk, lead[g])]
            if len(kept) != len(active):
                active[:] = kept
                reducers[:] = [self.reducer(lead[g], polys[g], low) for g in active]
            active.append(idx)
            reducers.append(self.reducer(lk, h, low))
            if len(active) > limit.max_basis:
                raise ResourceLimit(f"basis size exceeded {limit.max_basis}")

        pairs_done = 0
        while queue:
            s, _, _, kind, data = heapq.heappop(queue)
            if kind == 0:
                h = self.reduce(dict(data), reducers)
            else:
                if data not in live:
                    continue
                i, j = data
                L = live.pop(data)
                pairs_done += 1
                if pairs_done > limit.max_pairs:
                    raise ResourceLimit(f"more than {limit.max_pairs} S-pair reductions")
                if limit.max_seconds is not None and time.perf_counter() - started > limit.max_seconds:
                    raise ResourceLimit(f"exceeded {limit.max_seconds} s")
                h = self._spoly(i, j, L, polys, lead)
                h = self.reduce(h, reducers)
            if h:
                hs = max(s, max(self.wdeg(k) for k in h)) if kind == 0 else s
                add(h, hs)
        stats["pairs"] = stats.get("pairs", 0) + pairs_done
        result = self.interreduce([polys[g] for g in active])
        stats["size"] = len(result)
        stats["seconds"] = stats.get("seconds", 0.0) + time.perf_counter() - started
        return result

    def _spoly(self, i: int, j: int, L: int, polys: list, lead: list) -> dict:
        p = self.p
        si, sj = L - lead[i], L - lead[j]
        f = {k + si: c for k, c in polys[i].items() if k != lead[i]}
        get = f.get
        for k, c in polys[j].items():
            if k == lead[j]:
                continue
            nk = k + sj
            v = get(nk, 0) - c
            if p:
                v %= p
            if v:
                f[nk] = v
            else:
                f.pop(nk, None)
        return f

    def interreduce(self, gb: list[dict]) -> list[dict]:
        """Reduced basis from a Groebner basis (minimalize, then tail-reduce)."""
        pk = self.packer
        items = []
        for d in gb:
            if d:
                lk, d = self.monic(dict(d))
                items.append((lk, d))
        items.sort(key=lambda t: t[0])
        minimal = []
        for lk, d in items:
            if not any(pk.divides(m, lk) for m, _ in minimal):
                minimal.append((lk, d))
        low = pk.low
        out = []
        for idx, (lk, d) in enumerate(minimal):
            others = [self.reducer(m, e, low) for j, (m, e) in enumerate(minimal) if j != idx]
            tail = {k: c for k, c in d.items() if k != lk}
            r = self.reduce(tail, others)
            r[lk] = d[lk]
            out.append(r)
        return out


_ENGINES: dict[tuple[PolyRing, TermOrder], _Engine] = {}


def _engine(ring: PolyRing, order: TermOrder) -> _Engine:
    key = (ring, order)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = _Engine(ring, order)
    return eng


# -- public objects ---------------------------------------------------------

class GroebnerBasis:
    """A reduced Groebner basis with respect to ``order``."""

    def __init__(self, ring: PolyRing, order: TermOrder, dicts: list[dict], stats: dict | None = None):
        self.ring = ring
        self.order = order
        self._eng = _engine(ring, order)
        self._dicts = dicts
        low = self._eng.packer.low
        self._reducers = [_Engine.reducer(max(d), d, low) for d in dicts]
        self.elements: tuple[Polynomial, ...] = tuple(self._eng.from_dict(d) for d in dicts)
        self.stats = dict(stats or {})

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]}, order={self.order})"

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [self._eng.packer.unpack(max(d)) for d in self._dicts]

    @property
    def is_unit(self) -> bool:
        return len(self._dicts) == 1 and max(self._dicts[0]) == 0

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring.variables != self.ring.variables:
            raise RingMismatch("polynomial ring differs from basis ring")
        if f.ring.field != self.ring.field:
            f = f.change_ring(self.ring)
        return self._eng.from_dict(self._eng.reduce(self._eng.to_dict(f), self._reducers))

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        d = self._eng.to_dict(f) if f.ring.field == self.ring.field else self._eng.to_dict(f.change_ring(self.ring))
        return not self._eng.reduce(d, self._reducers)

    def spoly_residuals(self) -> list[Polynomial]:
        """Normal forms of all S-polynomials (all zero for a Groebner basis)."""
        eng = self._eng
        lead = [max(d) for d in self._dicts]
        out = []
        for i, j in itertools.combinations(range(len(self._dicts)), 2):
            L = eng.packer.lcm(lead[i], lead[j])
            s = eng._spoly(i, j, L, self._dicts, lead)
            out.append(eng.from_dict(eng.reduce(s, self._reducers)))
        return out


def groebner_basis(gens: Sequence[Polynomial], order: TermOrder | None = None, ring: PolyRing | None = None,
                   limit: Budget | None = None) -> GroebnerBasis:
    ring = ring or gens[0].ring
    order = order or ring.default_order()
    eng = _engine(ring, order)
    stats: dict = {}
    dicts = eng.buchberger((eng.to_dict(g) for g in gens if g), limit or current_budget(), stats)
    return GroebnerBasis(ring, order, dicts, stats)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def _dedupe(gens: Iterable[Polynomial]) -> tuple[Polynomial, ...]:
    seen = set()
    out = []
    for g in gens:
        if not g:
            continue
        key = g.monic()
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return tuple(out)


class Ideal:
    """An ideal given by generators, with Groebner bases cached per term order."""

    __hash__ = None  # equality is ideal equality, computed via Groebner bases

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial | str] = ()):
        self.ring = ring
        conv = []
        for g in gens:
            g = ring.parse(g) if isinstance(g, str) else g
            if g.ring.variables != ring.variables or g.ring.field != ring.field:
                raise RingMismatch(f"generator {g} is not in {ring.variables} over {ring.field}")
            conv.append(g if g.ring == ring else g.change_ring(ring))
        self.gens: tuple[Polynomial, ...] = _dedupe(conv)
        self._gb: dict[TermOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    # -- construction ----------------------------------------------------
    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring: PolyRing) -> "Ideal":
        """The irrelevant ideal generated by all variables."""
        return cls(ring, ring.gens())

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    # -- Groebner bases ---------------------------------------------------
    def groebner(self, order: TermOrder | None = None, limit: Budget | None = None) -> GroebnerBasis:
        order = order or self.ring.default_order()
        with self._lock:
            gb = self._gb.get(order)
            if gb is None:
                gb = groebner_basis(self.gens, order, self.ring, limit) if self.gens else \
                    GroebnerBasis(self.ring, order, [], {})
                self._gb[order] = gb
        return gb

    def _seed(self, order: TermOrder, gb: GroebnerBasis):
        with self._lock:
            self._gb.setdefault(order, gb)

    def cached_orders(self) -> list[TermOrder]:
        return list(self._gb)

    def normal_form(self, f: Polynomial, order: TermOrder | None = None) -> Polynomial:
        return self.groebner(order).normal_form(f)

    def __contains__(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def _any_gb(self) -> GroebnerBasis:
        if self._gb:
            return next(iter(self._gb.values()))
        return self.groebner()

    def contains_ideal(self, other: "Ideal") -> bool:
        """True when ``other`` is a subset of ``self``."""
        G = self._any_gb()
        return all(G.contains(g) for g in other.gens)

    def issubset(self, other: "Ideal") -> bool:
        return other.contains_ideal(self)

    def __le__(self, other: "Ideal") -> bool:
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.groebner().is_unit

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return all(g.is_homogeneous(weights) for g in self.gens)

    def minimal_generators(self) -> "Ideal":
        """Drop generators lying in the ideal of the others (by ascending degree).

        For ideals homogeneous in the ring grading this yields a minimal
        generating set.
        """
        gens = sorted(self.gens, key=lambda g: (g.weighted_degree() or 0, len(g.terms)))
        kept: list[Polynomial] = []
        for i, g in enumerate(gens):
            others = kept + gens[i + 1:]
            if others and Ideal(self.ring, others).contains_ideal(Ideal(self.ring, [g])):
                continue
            kept.append(g)
        return Ideal(self.ring, kept)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other) -> "Ideal":
        if isinstance(other, Polynomial):
            return Ideal(self.ring, [g * other for g in self.gens])
        return ideal_product(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power(self, n)

    def map(self, fn) -> "Ideal":
        return Ideal(self.ring, [fn(g) for g in self.gens])

    def to_json(self) -> dict:
        return {"ring": self.ring.descriptor(), "generators": [str(g) for g in self.gens]}

    @classmethod
    def from_json(cls, d: dict) -> "Ideal":
        ring = PolyRing.from_descriptor(d["ring"])
        return cls(ring, [ring.parse(s) for s in d["generators"]])


def _same_ring(I: Ideal, J: Ideal):
    if I.ring.variables != J.ring.variables or I.ring.field != J.ring.field:
        raise RingMismatch("ideals live in different rings")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_power(I: Ideal, n: int) -> Ideal:
    if not isinstance(n, int) or n < 1:
        raise ValueError("ideal powers need n >= 1")
    result = I
    for _ in range(n - 1):
        result = Ideal(I.ring, [f * g for f in result.gens for g in I.gens])
    return result


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder | None = None) -> bool:
    _same_ring(I, J)
    order = order or I.ring.default_order()
    a, b = I.groebner(order), J.groebner(order)
    return [g.terms for g in a.elements] == [g.terms for g in b.elements]


# -- elimination, intersection, quotients -------------------------------------

def _fresh_name(ring: PolyRing, base: str = "t") -> str:
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


def eliminate(I: Ideal, front_vars: Iterable[int | str], drop: bool = False) -> Ideal:
    """Generators of ``I`` intersected with the subring without ``front_vars``.

    With ``drop=True`` the result lives in the polynomial ring on the
    remaining variables.
    """
    ring = I.ring
    idx = sorted({ring.variables.index(v) if isinstance(v, str) else int(v) for v in front_vars})
    if not idx:
        return I
    rest = [i for i in range(ring.nvars) if i not in idx]
    order = TermOrder("elim", ring.weights, block=len(idx), var_order=tuple(idx + rest))
    G = I.groebner(order)
    kept = [g for g in G.elements if not (g.variables_used() & set(idx))]
    if not drop:
        return Ideal(ring, kept)
    sub = PolyRing(tuple(ring.variables[i] for i in rest), ring.field, tuple(ring.weights[i] for i in rest))
    out = []
    for g in kept:
        out.append(Polynomial(sub, {tuple(e[i] for i in rest): c for e, c in g.terms.items()}, _trusted=True))
    return Ideal(sub, out)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    t = _fresh_name(ring)
    big = PolyRing((t,) + ring.variables, ring.field, (1,) + tuple(ring.weights))
    pos = list(range(1, ring.nvars + 1))
    tv = big.gens()[0]
    gens = [tv * f.extend(big, pos) for f in I.gens] + [(1 - tv) * g.extend(big, pos) for g in J.gens]
    E = eliminate(Ideal(big, gens), [0], drop=True)
    return Ideal(ring, [Polynomial(ring, h.terms, _trusted=True) for h in E.gens])


def _bayer_quotient(I: Ideal, var: int, power: int | None) -> Ideal:
    """(I : x_var^power), or the saturation when ``power`` is None.

    Valid for ideals homogeneous in the ring grading: with ``x_var`` ranked
    last in weighted degrevlex, dividing each Groebner basis element by the
    appropriate power of ``x_var`` gives a Groebner basis of the quotient.
    """
    ring = I.ring
    order = TermOrder("wdegrevlex", ring.weights).with_last(var, ring.nvars)
    G = I.groebner(order)
    eng = G._eng
    out = []
    for g in G.elements:
        k = min(e[var] for e in g.terms)
        if power is not None:
            k = min(k, power)
        if k:
            shift = [0] * ring.nvars
            shift[var] = k
            g = g.divide_by_term(shift)
        out.append(g)
    dicts = eng.interreduce([eng.to_dict(g) for g in out])
    result = Ideal(ring, [eng.from_dict(d) for d in dicts])
    result._seed(order, GroebnerBasis(ring, order, dicts, {"derived_from": "bayer"}))
    return result


def _variable_index(f: Polynomial) -> tuple[int, int] | None:
    """(index, exponent) when f is c * x_i^k for a single variable."""
    if len(f.terms) != 1:
        return None
    (e, _), = f.terms.items()
    nz = [i for i, k in enumerate(e) if k]
    if len(nz) != 1:
        return None
    return nz[0], e[nz[0]]


def quotient(I: Ideal, f: Polynomial | Ideal, method: str = "auto") -> Ideal:
    """Colon ideal (I : f) = {g : g f in I}; for an ideal J, the intersection over its generators.

    ``method="intersect"`` forces the general route (I ∩ (f)) / f; ``auto``
    uses a Groebner-basis division shortcut when f is a power of a variable
    and I is homogeneous in the ring grading.
    """
    if isinstance(f, Ideal):
        _same_ring(I, f)
        if f.is_zero():
            raise ValueError("quotient by the zero ideal")
        parts = [quotient(I, g, method) for g in f.gens]
        result = parts[0]
        for P in parts[1:]:
            result = intersect(result, P)
        return result
    if not f:
        raise ValueError("quotient by zero")
    if f.is_constant():
        return I
    if method == "auto":
        vi = _variable_index(f)
        if vi is not None and I.is_homogeneous():
            return _bayer_quotient(I, vi[0], vi[1])
    elif method != "intersect":
        raise ValueError(f"unknown quotient method {method!r}")
    K = intersect(I, Ideal(I.ring, [f]))
    try:
        return Ideal(I.ring, [exact_divide(g, f) for g in K.gens])
    except NotDivisible as exc:  # pragma: no cover - would mean a broken intersection
        raise AssertionError(f"intersection generator not divisible by {f}") from exc


def _linear_change(ring: PolyRing, coeffs: Sequence[int]) -> tuple[list[Polynomial], list[Polynomial]]:
    """Forward/backward substitutions making ``sum coeffs[i] x_i`` the last variable."""
    n = ring.nvars
    gens = ring.gens()
    last = n - 1
    c = ring.field(coeffs[last])
    inv = ring.field.inv(c)
    # x_last = inv * (x_last' - sum_{i<last} coeffs[i] x_i)
    expr = gens[last]
    for i in range(last):
        expr = expr - gens[i].scale(coeffs[i])
    fwd = list(gens[:last]) + [expr.scale(inv)]
    back_expr = gens[last].scale(c)
    for i in range(last):
        back_expr = back_expr + gens[i].scale(coeffs[i])
    back = list(gens[:last]) + [back_expr]
    return fwd, back


def saturate_by_linear_form(I: Ideal, coeffs: Sequence[int]) -> Ideal:
    """(I : l^inf) for a linear form l = sum coeffs[i] x_i of a standard-graded ring."""
    ring = I.ring
    if any(w != 1 for w in ring.weights):
        raise ValueError("linear-form saturation needs the standard grading")
    fwd, back = _linear_change(ring, coeffs)
    moved = Ideal(ring, [g.compose(fwd, ring) for g in I.gens])
    S = _bayer_quotient(moved, ring.nvars - 1, None)
    return Ideal(ring, [g.compose(back, ring) for g in S.gens])


def _intersect_all(parts: list[Ideal]) -> Ideal:
    for i, P in enumerate(parts):
        if all(Q.contains_ideal(P) for j, Q in enumerate(parts) if j != i):
            return P
    result = parts[0]
    for P in parts[1:]:
        result = intersect(result, P)
    return result


def saturate(I: Ideal, J: Ideal, max_rounds: int = 50, method: str = "auto", seed: int = 0) -> Ideal:
    """(I : J^inf).

    ``method="iterate"`` runs the colon iteration I : J : J ... until two
    consecutive ideals agree.  ``auto`` (the default) takes an exact shortcut
    when I is homogeneous and J is generated by monomials:
    (I : J^inf) = ∩_g (I : g^inf), each factor by Groebner-basis division;
    for the irrelevant ideal a generic linear form may certify the result.
    """
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    if any(g.is_constant() for g in J.gens):
        return I
    if method == "auto" and I.is_homogeneous() and all(g.is_monomial() for g in J.gens):
        return _saturate_monomial(I, J, seed)
    if method not in ("auto", "iterate"):
        raise ValueError(f"unknown saturation method {method!r}")
    current = I
    for _ in range(max_rounds):
        nxt = quotient(current, J, "intersect" if method == "iterate" else "auto")
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise ResourceLimit(f"saturation did not stabilize within {max_rounds} rounds")


def _saturate_monomial(I: Ideal, J: Ideal, seed: int) -> Ideal:
    parts = []
    for g in J.gens:
        (e, _), = g.terms.items()
        S = I
        for var in (i for i, k in enumerate(e) if k):
            S = _bayer_quotient(S, var, None)
        parts.append(S)
    for i, P in enumerate(parts):
        if all(Q.contains_ideal(P) for j, Q in enumerate(parts) if j != i):
            return P
    ring = I.ring
    var_gens = {next(iter(g.terms)) for g in J.gens if g.total_degree() == 1}
    if len(var_gens) == ring.nvars and all(w == 1 for w in ring.weights):
        rng = random.Random(seed)
        top = ring.characteristic or 1000
        for _ in range(3):
            coeffs = [rng.randrange(1, top) for _ in range(ring.nvars)]
            K = saturate_by_linear_form(I, coeffs)
            # I:m^inf ⊆ K always; K ⊆ every I:x_i^inf forces equality
            if all(P.contains_ideal(K) for P in parts):
                return K
    return _intersect_all(parts)
