"""Prime fields, polynomial rings and exact multivariate polynomials.

Polynomials are sparse maps from exponent tuples to field elements in
``[0, p)``.  Term order only matters for printing, leading terms and the
Groebner engine; it is a property of the :class:`Ring`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, RingMismatchError

Monomial = tuple  # exponent vector, one entry per ring variable

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for an odd prime ``2 < p < 2**31``."""

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or not (2 < p < 2**31) or not is_prime(p):
            raise ValueError(f"field characteristic must be an odd prime below 2^31, got {p!r}")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(a, -1, self.p)

    def balanced(self, a: int) -> int:
        """Representative of ``a`` in ``(-p/2, p/2]``."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


# ---------------------------------------------------------------- orders


def order_rows(order: str, n: int) -> list[list[int]]:
    """Weight matrix of a monomial order: compare ``row . e`` lexicographically.

    ``degrevlex`` and ``block:k`` use degree rows followed by negated unit
    rows (reverse lexicographic tie break); ``lex`` uses the unit rows.
    """
    def unit(i, sign=1):
        r = [0] * n
        r[i] = sign
        return r

    if order == "lex":
        return [unit(i) for i in range(n)]
    if order == "degrevlex":
        return [[1] * n] + [unit(i, -1) for i in range(n - 1, 0, -1)]
    if order.startswith("block:"):
        k = int(order.split(":", 1)[1])
        if not 0 < k < n:
            raise ValueError(f"block size {k} out of range for {n} variables")
        rows = [[1] * k + [0] * (n - k)]
        rows += [unit(i, -1) for i in range(k - 1, 0, -1)]
        rows.append([0] * k + [1] * (n - k))
        rows += [unit(i, -1) for i in range(n - 1, k, -1)]
        return rows
    raise ValueError(f"unknown monomial order {order!r}")


@lru_cache(maxsize=None)
def _key_function(order: str, n: int):
    if order == "degrevlex":
        def key(e):
            return (sum(e), tuple(-x for x in e[::-1]))
        return key
    if order == "lex":
        return lambda e: e
    rows = order_rows(order, n)

    def key(e):
        return tuple(sum(r[i] * e[i] for i in range(n) if r[i]) for r in rows)
    return key


# ----------------------------------------------------------------- rings


@dataclass(frozen=True)
class Ring:
    """Polynomial ring F_p[names] with a fixed monomial order."""

    names: tuple
    order: str = "degrevlex"
    field: PrimeField = field(default_factory=lambda: PrimeField(32003))

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if isinstance(self.field, int):
            object.__setattr__(self, "field", PrimeField(self.field))
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"invalid variable name {nm!r}")
        order_rows(self.order, len(names))  # validates the tag

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def key(self):
        return _key_function(self.order, len(self.names))

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.nvars:
                raise ArityError(f"variable index {name} out of range")
            return name
        try:
            return self.names.index(name)
        except ValueError:
            raise ArityError(f"no variable named {name!r} in ring") from None

    def with_order(self, order: str) -> "Ring":
        return Ring(self.names, order, self.field)

    def with_prime(self, p: int) -> "Ring":
        return Ring(self.names, self.order, PrimeField(p))

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise ArityError("exponent vector has wrong length")
        c = coeff % self.p
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms: Iterable[tuple[Sequence[int], int]]) -> "Polynomial":
        d: dict = {}
        p = self.p
        for e, c in terms:
            e = tuple(e)
            d[e] = (d.get(e, 0) + c) % p
        return Polynomial(self, {e: c for e, c in d.items() if c})

    def monomials(self, degree: int) -> list[Monomial]:
        """All exponent vectors of the given degree, descending in the ring order."""
        return sorted(_monomials_of_degree(self.nvars, degree), key=self.key, reverse=True)

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def __str__(self):
        return f"F_{self.p}[{', '.join(self.names)}] ({self.order})"


@lru_cache(maxsize=256)
def _monomials_of_degree(n: int, d: int) -> tuple:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


# ------------------------------------------------------------ polynomials


class Polynomial:
    """Immutable polynomial over a :class:`Ring`.

    ``terms()`` lists ``(exponents, coefficient)`` strictly descending in the
    ring order; coefficients are canonical in ``[1, p)``.
    """

    __slots__ = ("ring", "_d", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self._d = terms
        self._sorted = None
        self._hash = None

    # -- structure
    def terms(self) -> list[tuple[Monomial, int]]:
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._d)

    def coefficient(self, exps) -> int:
        return self._d.get(tuple(exps), 0)

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    @property
    def lm(self) -> Monomial:
        return self.terms()[0][0]

    @property
    def lc(self) -> int:
        return self.terms()[0][1]

    def degree(self) -> int:
        return max((sum(e) for e in self._d), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._d}
        return len(degs) <= 1

    def variables(self) -> set[int]:
        return {i for e in self._d for i, x in enumerate(e) if x}

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        return self * self.ring.field.inv(self.lc)

    # -- arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        d = dict(self._d)
        for e, c in other._d.items():
            v = (d.get(e, 0) + c) % p
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            p = self.ring.p
            return Polynomial(self.ring, {e: v * c % p for e, v in self._d.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        d: dict = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = (d.get(e, 0) + c1 * c2) % p
        return Polynomial(self.ring, {e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exps: Monomial, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): v * c % p for e, v in self._d.items()},
        )

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    # -- maps
    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.ring.nvars:
            raise ArityError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        p = self.ring.p
        total = 0
        for e, c in self._d.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, p) % p
            total += v
        return total % p

    def substitute(self, assignment: Mapping, target: Ring | None = None) -> "Polynomial":
        return substitute(self, assignment, target)

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial(self.ring, {e: c for e, c in self._d.items() if sum(e) == degree})

    def change_ring(self, ring: Ring) -> "Polynomial":
        """Same terms viewed in a ring with identical variables (other order/prime)."""
        if ring.names != self.ring.names:
            raise RingMismatchError("change_ring requires identical variable names")
        p = ring.p
        if p == self.ring.p:
            return Polynomial(ring, dict(self._d))
        return ring.from_terms((e, self.ring.field.balanced(c)) for e, c in self._d.items())

    # -- text
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def substitute(f: Polynomial, assignment: Mapping, target: Ring | None = None) -> Polynomial:
    """Image of ``f`` under the ring map sending variables to polynomials.

    Keys are variable names or indices of ``f.ring``.  Unassigned variables
    map to the same-named variable of ``target``.
    """
    src = f.ring
    images: dict[int, Polynomial] = {}
    for k, v in assignment.items():
        images[src.index(k)] = v
    if target is None:
        rings = {v.ring for v in images.values()}
        if len(rings) > 1:
            raise RingMismatchError("substituted polynomials live in different rings")
        target = rings.pop() if rings else src
    for v in images.values():
        if v.ring != target:
            raise RingMismatchError("substituted polynomial not in the target ring")
    for i in range(src.nvars):
        if i not in images:
            images[i] = target.var(src.names[i])  # raises ArityError when absent
    powers: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = images[i] ** k
        return powers[key]

    acc: dict = {}
    p = target.p
    for e, c in f._d.items():
        term = target.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        for m, v in term._d.items():
            acc[m] = (acc.get(m, 0) + v) % p
    return Polynomial(target, {m: v for m, v in acc.items() if v})


# ------------------------------------------------------------ text format


def _format_monomial(names, e) -> str:
    parts = []
    for nm, k in zip(names, e):
        if k == 1:
            parts.append(nm)
        elif k > 1:
            parts.append(f"{nm}^{k}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if not f._d:
        return "0"
    out = []
    fld = f.ring.field
    for i, (e, c) in enumerate(f.terms()):
        c = fld.balanced(c)
        mono = _format_monomial(f.ring.names, e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            num, name, sym = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif name is not None:
                self.toks.append(("name", name))
            else:
                if sym not in "+-*^()":
                    raise ValueError(f"unexpected character {sym!r} in polynomial")
                self.toks.append(("sym", sym))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        if not self.toks:
            raise ValueError("empty polynomial text")
        f = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return f

    def expr(self):
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("sym", "+"):
            self.take()
        acc = self.term() * sign
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == ("sym", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, k = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            base = base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            return self.ring.var(val)
        if (kind, val) == ("sym", "("):
            f = self.expr()
            if self.take() != ("sym", ")"):
                raise ValueError("unbalanced parenthesis")
            return f
        if (kind, val) == ("sym", "-"):
            return -self.atom()
        raise ValueError(f"unexpected token {val!r}")


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """``add``, ``sub`` or ``mul`` of two polynomials over the same ring."""
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def evaluate(f: Polynomial, point: Sequence[int]) -> int:
    return f.evaluate(point)
