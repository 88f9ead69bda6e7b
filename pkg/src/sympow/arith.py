"""Exact coefficients, sparse multivariate polynomials, term orders and gradings.

Coefficients live either in the rationals (characteristic 0, stored as
:class:`fractions.Fraction`) or in a prime field F_p (stored as ints in
``[0, p)``).  A :class:`Polynomial` is an immutable map from exponent tuples
to nonzero coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

DEFAULT_PRIME = 32003

Exponents = tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised when an exact division by a term leaves a remainder."""


class RingMismatch(ValueError):
    """Raised when combining polynomials from different rings."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The coefficient field: Q when ``characteristic == 0``, else F_p."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value) -> int | Fraction:
        """Coerce an int, Fraction or decimal/fraction string into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value.strip())
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(a)
        return pow(a, -1, self.characteristic)

    def to_display(self, a) -> Fraction:
        """Symmetric representative used for printing (and round-tripping)."""
        p = self.characteristic
        if p == 0:
            return Fraction(a)
        return Fraction(a - p if a > p // 2 else a)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


@dataclass(frozen=True)
class WeightGrading:
    """Positive integer weights, one per variable (deg x_i = weights[i])."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be >= 1, got {self.weights}")

    def degree(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def __len__(self):
        return len(self.weights)


@dataclass(frozen=True)
class TermOrder:
    """A monomial order, realized as a matrix of non-negative integer rows.

    ``kind`` is one of ``degrevlex``, ``lex``, ``wdegrevlex`` (weighted
    degree, ties broken reverse-lexicographically) or ``elim`` (first
    compare total degree in the first ``block`` variables, then weighted
    degrevlex).  ``weights`` is used by ``wdegrevlex`` and ``elim``.
    """

    kind: str = "degrevlex"
    weights: tuple[int, ...] | None = None
    block: int = 0
    # variable ranking, most significant first; None means ring order
    var_order: tuple[int, ...] | None = None

    KINDS = ("degrevlex", "lex", "wdegrevlex", "elim")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            if any(w < 1 for w in self.weights):
                raise ValueError("order weights must be >= 1")
        if self.var_order is not None:
            vo = tuple(int(i) for i in self.var_order)
            if sorted(vo) != list(range(len(vo))):
                raise ValueError(f"var_order must be a permutation, got {vo}")
            object.__setattr__(self, "var_order", vo)
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def with_last(self, var: int, nvars: int) -> "TermOrder":
        """Same order with variable ``var`` ranked last (smallest)."""
        vo = self.var_order or tuple(range(nvars))
        vo = tuple(i for i in vo if i != var) + (var,)
        return TermOrder(self.kind, self.weights, self.block, vo)

    def rows(self, nvars: int) -> tuple[tuple[int, ...], ...]:
        """Order matrix with non-negative entries.

        Comparing monomials lexicographically on ``row . exps`` reproduces the
        order.  Revlex rows ``-e_i`` are shifted by the leading degree row,
        which leaves comparisons unchanged among monomials of equal degree.
        """
        vo = self.var_order or tuple(range(nvars))
        if len(vo) != nvars:
            raise ValueError(f"var_order has {len(vo)} entries for {nvars} variables")
        if self.kind == "lex":
            rows = [tuple(int(i == j) for j in range(nvars)) for i in range(nvars)]
        else:
            w = self.weights if self.kind != "degrevlex" and self.weights else (1,) * nvars
            if len(w) != nvars:
                raise ValueError(f"order has {len(w)} weights for {nvars} variables")
            w = tuple(w[v] for v in vo)
            revlex = []
            for i in range(nvars - 1, 0, -1):
                revlex.append(tuple(w[j] - (1 if j == i else 0) for j in range(nvars)))
            rows = [tuple(w)] + revlex
            if self.kind == "elim":
                if self.block >= nvars:
                    raise ValueError("elimination block must leave some variables")
                rows = [tuple(int(j < self.block) for j in range(nvars))] + rows
        # rows were built for permuted exponents; move columns back
        out = []
        for row in rows:
            col = [0] * nvars
            for j, v in enumerate(vo):
                col[v] = row[j]
            out.append(tuple(col))
        return tuple(out)

    def key(self, exps: Sequence[int], nvars: int | None = None) -> tuple[int, ...]:
        n = len(exps) if nvars is None else nvars
        return tuple(sum(r * e for r, e in zip(row, exps)) for row in self.rows(n))

    def __str__(self):
        if self.kind == "elim":
            s = f"elim({self.block})"
        elif self.kind == "wdegrevlex":
            s = f"wdegrevlex{self.weights}"
        else:
            s = self.kind
        return s if self.var_order is None else f"{s}{list(self.var_order)}"


DEGREVLEX = TermOrder("degrevlex")
LEX = TermOrder("lex")


@dataclass(frozen=True)
class PolyRing:
    """k[x_1..x_n] with named variables and a positive weight grading."""

    variables: tuple[str, ...]
    field: Field = field(default_factory=Field)
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        for v in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        w = self.weights if self.weights is not None else (1,) * len(self.variables)
        object.__setattr__(self, "weights", WeightGrading(w).weights)
        if len(self.weights) != len(self.variables):
            raise ValueError("one weight per variable required")

    @classmethod
    def generic(cls, n: int, field: Field | None = None, prefix: str = "v") -> "PolyRing":
        return cls(tuple(f"{prefix}{i}" for i in range(n)), field or Field())

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def grading(self) -> WeightGrading:
        return WeightGrading(self.weights)

    def with_weights(self, weights: Sequence[int]) -> "PolyRing":
        return PolyRing(self.variables, self.field, tuple(weights))

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.variables, field, self.weights)

    def default_order(self) -> TermOrder:
        if all(w == 1 for w in self.weights):
            return DEGREVLEX
        return TermOrder("wdegrevlex", self.weights)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
        return Polynomial(self, {exps: self.field(coeff)})

    def gens(self) -> tuple["Polynomial", ...]:
        n = self.nvars
        return tuple(self.monomial(tuple(int(i == j) for j in range(n))) for i in range(n))

    def var(self, name: str) -> "Polynomial":
        return self.gens()[self.variables.index(name)]

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatch("polynomial from another ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def descriptor(self) -> dict:
        return {
            "variables": list(self.variables),
            "characteristic": self.characteristic,
            "weights": list(self.weights),
        }

    @classmethod
    def from_descriptor(cls, d: Mapping) -> "PolyRing":
        return cls(
            tuple(d["variables"]),
            Field(int(d.get("characteristic", DEFAULT_PRIME))),
            tuple(d["weights"]) if d.get("weights") is not None else None,
        )


class Polynomial:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, object], *, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            conv = ring.field
            n = ring.nvars
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} has wrong length for {n} variables")
                c = conv(c)
                if c:
                    clean[e] = c
            self.terms = clean
        self._hash = None

    # -- basic protocol -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring.variables != self.ring.variables or other.ring.field != self.ring.field:
                raise RingMismatch(
                    f"cannot combine polynomials over {self.ring.variables}/{self.ring.field} "
                    f"and {other.ring.variables}/{other.ring.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # -- arithmetic -----------------------------------------------------
    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        p = self.ring.characteristic
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + sign * c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, _trusted=True)

    def __add__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {e: p - c for e, c in self.terms.items()}, _trusted=True)
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        p = self.ring.characteristic
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out: dict = {}
        get = out.get
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        return Polynomial(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        p = self.ring.characteristic
        if not c:
            return self.ring.zero()
        if p:
            return Polynomial(self.ring, {e: v * c % p for e, v in self.terms.items()}, _trusted=True)
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()}, _trusted=True)

    def shift(self, exps: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial with exponent vector ``exps``."""
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
            _trusted=True,
        )

    def divide_by_term(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        """Exact division by ``coeff * x^exps``; raises :class:`NotDivisible`."""
        exps = tuple(exps)
        if len(exps) != self.ring.nvars:
            raise RingMismatch("term has wrong number of variables")
        field_ = self.ring.field
        c = field_(coeff)
        inv = field_.inv(c)
        p = self.ring.characteristic
        out = {}
        for e, v in self.terms.items():
            q = tuple(a - b for a, b in zip(e, exps))
            if any(x < 0 for x in q):
                raise NotDivisible(f"{self} is not divisible by {format_term(self.ring, exps, c)}")
            out[q] = v * inv % p if p else v * inv
        return Polynomial(self.ring, out, _trusted=True)

    def __truediv__(self, other):
        """Exact division by a single term (monomial with coefficient)."""
        if isinstance(other, (int, Fraction)):
            return self.divide_by_term((0,) * self.ring.nvars, other)
        other = self._check(other)
        if len(other.terms) != 1:
            raise NotDivisible("only division by a single term is supported")
        (e, c), = other.terms.items()
        return self.divide_by_term(e, c)

    # -- inspection ------------------------------------------------------
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights: Sequence[int] | WeightGrading | None = None) -> int | None:
        """Common weighted degree of all terms, or ``None`` if not homogeneous."""
        if not self.terms:
            raise ValueError("weighted degree of the zero polynomial")
        if weights is None:
            w = self.ring.weights
        elif isinstance(weights, WeightGrading):
            w = weights.weights
        else:
            w = WeightGrading(weights).weights
        if len(w) != self.ring.nvars:
            raise RingMismatch("weights do not match the number of variables")
        degs = {sum(a * b for a, b in zip(w, e)) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, weights=None) -> bool:
        return not self.terms or self.weighted_degree(weights) is not None

    def monomial_content(self) -> Exponents:
        """Exponents of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.ring.nvars
        return tuple(reduce(min, col) for col in zip(*self.terms))

    def leading_term(self, order: TermOrder | None = None) -> tuple[Exponents, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or self.ring.default_order()
        n = self.ring.nvars
        rows = order.rows(n)
        e = max(self.terms, key=lambda m: tuple(sum(r * x for r, x in zip(row, m)) for row in rows))
        return e, self.terms[e]

    def sorted_terms(self, order: TermOrder | None = None) -> list[tuple[Exponents, object]]:
        order = order or self.ring.default_order()
        rows = order.rows(self.ring.nvars)
        return sorted(
            self.terms.items(),
            key=lambda t: tuple(sum(r * x for r, x in zip(row, t[0])) for row in rows),
            reverse=True,
        )

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    # -- ring maps -------------------------------------------------------
    def evaluate(self, values: Sequence) -> object:
        """Evaluate at a point given as field elements (one per variable)."""
        f = self.ring.field
        vals = [f(v) for v in values]
        if len(vals) != self.ring.nvars:
            raise RingMismatch("one value per variable required")
        p = self.ring.characteristic
        total = f(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * (pow(v, k, p) if p else v ** k)
            total = total + t
        return total % p if p else total

    def compose(self, images: Sequence["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.nvars:
            raise RingMismatch("one image per variable required")
        target = target or (images[0].ring if images else self.ring)
        result = target.zero()
        cache: dict[tuple[int, int], Polynomial] = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = images[i] ** k
            return cache[(i, k)]

        for e, c in self.terms.items():
            t = target.constant(self.ring.field.to_display(c))
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    def permute(self, perm: Sequence[int], target: PolyRing | None = None) -> "Polynomial":
        """New polynomial whose variable ``perm[i]`` carries the old exponent of variable ``i``."""
        n = self.ring.nvars
        target = target or self.ring
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return Polynomial(target, out, _trusted=True)

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        """Reinterpret in a ring with the same number of variables (weights may differ)."""
        if ring.nvars != self.ring.nvars:
            raise RingMismatch("variable count differs")
        if ring.field == self.ring.field:
            return Polynomial(ring, self.terms, _trusted=True)
        disp = self.ring.field.to_display
        return Polynomial(ring, {e: disp(c) for e, c in self.terms.items()})

    def extend(self, ring: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Embed into a bigger ring; old variable i becomes ``positions[i]``."""
        n = ring.nvars
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in enumerate(e):
                ne[positions[i]] = k
            out[tuple(ne)] = c
        if ring.field == self.ring.field:
            return Polynomial(ring, out, _trusted=True)
        disp = self.ring.field.to_display
        return Polynomial(ring, {e: disp(c) for e, c in out.items()})


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient ``g / f`` when ``f`` divides ``g``; raises :class:`NotDivisible` otherwise."""
    if not f:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(f.terms) == 1:
        (e, c), = f.terms.items()
        return g.divide_by_term(e, c)
    order = g.ring.default_order()
    fe, fc = f.leading_term(order)
    inv = g.ring.field.inv(fc)
    q = g.ring.zero()
    r = g
    while r:
        e, c = r.leading_term(order)
        d = tuple(a - b for a, b in zip(e, fe))
        if any(k < 0 for k in d):
            raise NotDivisible(f"{f} does not divide {g}")
        t = g.ring.monomial(d, g.ring.field.to_display(c * inv))
        q = q + t
        r = r - t * f
    return q


# -- text format ------------------------------------------------------------

def format_term(ring: PolyRing, exps: Sequence[int], coeff) -> str:
    c = ring.field.to_display(coeff)
    factors = []
    for name, k in zip(ring.variables, exps):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    mono = "*".join(factors)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def format_polynomial(f: Polynomial, order: TermOrder | None = None) -> str:
    if not f.terms:
        return "0"
    parts = []
    for e, c in f.sorted_terms(order):
        t = format_term(f.ring, e, c)
        if not parts:
            parts.append(t)
        elif t.startswith("-"):
            parts.append("- " + t[1:])
        else:
            parts.append("+ " + t)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|\^)|([-+*()]))")


class ParseError(ValueError):
    pass


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``3*x^2*y - 1/2*z^5``-style text; parentheses and ``**`` accepted."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        num, name, powop, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("var", name))
        elif powop is not None:
            tokens.append(("pow", powop))
        elif op is not None:
            tokens.append(("op", op))
    if not tokens:
        raise ParseError("empty polynomial text")
    index = {v: i for i, v in enumerate(ring.variables)}
    state = {"i": 0}

    def peek():
        return tokens[state["i"]] if state["i"] < len(tokens) else (None, None)

    def take():
        tok = peek()
        state["i"] += 1
        return tok

    def expr():
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        result = term().scale(sign)
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term():
        result = factor()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                result = result * factor()
            elif kind in ("var", "num") or (kind == "op" and val == "("):
                result = result * factor()  # implicit multiplication, e.g. 3x^2
            else:
                return result

    def factor():
        kind, val = take()
        if kind == "num":
            base = ring.constant(Fraction(val))
        elif kind == "var":
            if val not in index:
                raise ParseError(f"unknown variable {val!r}; ring has {ring.variables}")
            base = ring.gens()[index[val]]
        elif kind == "op" and val == "(":
            base = expr()
            if take() != ("op", ")"):
                raise ParseError("missing closing parenthesis")
        elif kind == "op" and val == "-":
            return factor().scale(-1)
        else:
            raise ParseError(f"unexpected token {val!r}")
        kind, val = peek()
        if kind == "pow":
            take()
            k, e = take()
            if k != "num" or "/" in e:
                raise ParseError("exponent must be a non-negative integer")
            base = base ** int(e)
        return base

    result = expr()
    if state["i"] != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    return result


def xyz_ring(field: Field | None = None, weights: Sequence[int] | None = None) -> PolyRing:
    return PolyRing(("x", "y", "z"), field or Field(), tuple(weights) if weights else None)


def polys(ring: PolyRing, texts: Iterable[str]) -> list[Polynomial]:
    return [ring.parse(t) for t in texts]
