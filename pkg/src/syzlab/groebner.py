"""Groebner bases over F_p and the ideal operations built on them.

The engine is Buchberger's algorithm with the Gebauer-Moeller pair criteria
and the sugar selection strategy.  Inside a run every monomial is carried as
two integers:

* an order key, the dot product of the exponent vector with packed weight
  rows, so comparing keys compares monomials and multiplying adds keys;
* a packed exponent word with a guard bit per 16-bit field, so divisibility
  is one subtraction and one mask.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import BudgetExceeded, RingMismatchError
from .poly import Polynomial, Ring, order_rows

FIELD_BITS = 16
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
KEY_BASE = 1 << 32
DEFAULT_GB_STEPS = 200_000


def budget_scale() -> float:
    try:
        return float(os.environ.get("SYZLAB_BUDGET_SCALE", "1"))
    except ValueError:
        return 1.0


def scaled(limit: int) -> int:
    return max(1, int(limit * budget_scale()))


# ------------------------------------------------------------------ engine


class _Context:
    """Monomial encoding for one ring."""

    def __init__(self, ring: Ring):
        n = ring.nvars
        self.n = n
        self.p = ring.p
        rows = order_rows(ring.order, n)
        s = len(rows)
        self.weights = [
            sum(rows[j][i] * KEY_BASE ** (s - 1 - j) for j in range(s)) for i in range(n)
        ]
        self.shifts = [FIELD_BITS * i for i in range(n)]
        self.guard = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(n))
        self.mask = (1 << (FIELD_BITS - 1)) - 1

    def encode(self, e) -> tuple[int, int]:
        k = 0
        w = 0
        for i, x in enumerate(e):
            if x:
                if x > MAX_EXPONENT:
                    raise OverflowError("exponent too large for the Groebner engine")
                k += x * self.weights[i]
                w += x << self.shifts[i]
        return k, w

    def decode(self, w: int) -> tuple:
        m = self.mask
        return tuple((w >> s) & m for s in self.shifts)

    def to_internal(self, f: Polynomial) -> list:
        terms = []
        for e, c in f.as_dict().items():
            k, w = self.encode(e)
            terms.append((k, w, c))
        terms.sort(reverse=True)
        return terms

    def to_poly(self, ring: Ring, terms) -> Polynomial:
        return Polynomial(ring, {self.decode(w): c for _, w, c in terms})


def _degree_of(w: int, n: int) -> int:
    m = (1 << (FIELD_BITS - 1)) - 1
    return sum((w >> (FIELD_BITS * i)) & m for i in range(n))


class _Reducer:
    """Reduction of polynomials by an append-only list of monic basis elements."""

    def __init__(self, ctx: _Context):
        self.ctx = ctx
        self.basis: list[list] = []   # internal polys, monic, sorted desc
        self.lead_w: list[int] = []
        self.positive: dict[int, int] = {}
        self.checked: dict[int, int] = {}

    def add(self, terms):
        self.basis.append(terms)
        self.lead_w.append(terms[0][1])

    def find(self, w: int):
        idx = self.positive.get(w)
        if idx is not None:
            return idx
        start = self.checked.get(w, 0)
        guard = self.ctx.guard
        lead_w = self.lead_w
        for i in range(start, len(lead_w)):
            if not ((w - lead_w[i]) & guard):
                self.positive[w] = i
                return i
        self.checked[w] = len(lead_w)
        return None

    def reduce(self, acc: dict, emap: dict, full: bool = True) -> list:
        """Reduce the polynomial held in ``acc``/``emap`` (key -> coeff / word)."""
        p = self.ctx.p
        heap = [-k for k in acc]
        heapq.heapify(heap)
        out = []
        basis = self.basis
        while heap:
            k = -heapq.heappop(heap)
            c = acc.pop(k, 0)
            if not c:
                continue
            w = emap[k]
            i = self.find(w)
            if i is None:
                out.append((k, w, c))
                if not full:
                    break
                continue
            g = basis[i]
            gk, gw, _ = g[0]
            dk = k - gk
            dw = w - gw
            for tk, tw, tc in g[1:]:
                nk = tk + dk
                old = acc.get(nk)
                if old is None:
                    acc[nk] = (-c * tc) % p
                    emap[nk] = tw + dw
                    heapq.heappush(heap, -nk)
                else:
                    acc[nk] = (old - c * tc) % p
        if not full and heap:
            # top reduction stopped early: keep the untouched tail
            for k, c in acc.items():
                if c:
                    out.append((k, emap[k], c))
            out.sort(reverse=True)
        return out


def _lcm_w(ctx: _Context, a: int, b: int) -> int:
    w = 0
    m = ctx.mask
    for s in ctx.shifts:
        x = (a >> s) & m
        y = (b >> s) & m
        w += (x if x > y else y) << s
    return w


def _key_of_w(ctx: _Context, w: int) -> int:
    m = ctx.mask
    return sum(((w >> s) & m) * wt for s, wt in zip(ctx.shifts, ctx.weights))


def _divides(ctx, a: int, b: int) -> bool:
    return not ((b - a) & ctx.guard)


def _coprime(ctx, a: int, b: int) -> bool:
    m = ctx.mask
    return all(not (((a >> s) & m) and ((b >> s) & m)) for s in ctx.shifts)


@dataclass
class GBStats:
    pairs_reduced: int = 0
    zero_reductions: int = 0
    basis_size: int = 0


def _monic(terms, p):
    c = terms[0][2]
    if c == 1:
        return terms
    inv = pow(c, -1, p)
    return [(k, w, v * inv % p) for k, w, v in terms]


def buchberger(ring: Ring, gens: Sequence[Polynomial], max_steps: int | None = None,
               stats: GBStats | None = None, criteria: bool = True) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens`` in ``ring``'s order.

    ``criteria=False`` disables the Gebauer-Moeller pair elimination (every
    pair is reduced); it exists as an independent cross-check.
    """
    if max_steps is None:
        max_steps = scaled(DEFAULT_GB_STEPS)
    stats = stats if stats is not None else GBStats()
    ctx = _Context(ring)
    p = ctx.p
    n = ctx.n
    red = _Reducer(ctx)
    sugar: list[int] = []
    live: list[int] = []
    pairs: dict[tuple[int, int], tuple] = {}

    def push_pair(i, j, lcm):
        gi, gj = red.basis[i], red.basis[j]
        dl = _degree_of(lcm, n)
        s = max(sugar[i] + dl - _degree_of(gi[0][1], n), sugar[j] + dl - _degree_of(gj[0][1], n))
        pairs[(i, j)] = (s, _key_of_w(ctx, lcm), i, j, lcm)

    def insert(terms, s):
        h = len(red.basis)
        red.add(terms)
        sugar.append(s)
        hw = terms[0][1]
        if not criteria:
            for g in live:
                push_pair(g, h, _lcm_w(ctx, red.lead_w[g], hw))
            live.append(h)
            return
        # Gebauer-Moeller update
        cands = [(g, _lcm_w(ctx, red.lead_w[g], hw)) for g in live]
        keep = []
        for idx, (g, l) in enumerate(cands):
            if _coprime(ctx, red.lead_w[g], hw):
                keep.append((g, l))
                continue
            others = cands[idx + 1:]
            if any(_divides(ctx, l2, l) for _, l2 in others) or any(
                _divides(ctx, l2, l) for _, l2 in keep
            ):
                continue
            keep.append((g, l))
        new = [(g, l) for g, l in keep if not _coprime(ctx, red.lead_w[g], hw)]
        for key in list(pairs):
            i, j = key
            l12 = pairs[key][4]
            if (_divides(ctx, hw, l12)
                    and _lcm_w(ctx, red.lead_w[i], hw) != l12
                    and _lcm_w(ctx, red.lead_w[j], hw) != l12):
                del pairs[key]
        for g, l in new:
            push_pair(g, h, l)
        live[:] = [g for g in live if not _divides(ctx, hw, red.lead_w[g])]
        live.append(h)

    # seed: interreduce nothing, just insert generators in a fixed order
    seeds = []
    for f in gens:
        if f.ring != ring:
            raise RingMismatchError("generator not in the ring")
        if f:
            t = ctx.to_internal(f)
            seeds.append((max(sum(e) for e in f.as_dict()), t))
    seeds.sort(key=lambda st: (st[0], st[1][0][0]))
    for s, t in seeds:
        acc = {k: c for k, _, c in t}
        emap = {k: w for k, w, _ in t}
        r = red.reduce(acc, emap)
        if not r:
            continue
        r = _monic(r, p)
        if r[0][1] == 0:
            return [ring.one()]
        insert(r, s)

    steps = 0
    while pairs:
        key = min(pairs, key=lambda k: pairs[k][:4])
        s, _, i, j, lcm = pairs.pop(key)
        steps += 1
        if steps > max_steps:
            raise BudgetExceeded("groebner steps", max_steps)
        gi, gj = red.basis[i], red.basis[j]
        acc: dict = {}
        emap: dict = {}
        lk = _key_of_w(ctx, lcm)
        for g, sign in ((gi, 1), (gj, -1)):
            dk = lk - g[0][0]
            dw = lcm - g[0][1]
            for tk, tw, tc in g[1:]:
                nk = tk + dk
                v = (acc.get(nk, 0) + sign * tc) % p
                acc[nk] = v
                emap[nk] = tw + dw
        stats.pairs_reduced += 1
        r = red.reduce(acc, emap)
        if not r:
            stats.zero_reductions += 1
            continue
        r = _monic(r, p)
        if r[0][1] == 0:
            stats.basis_size = 1
            return [ring.one()]
        insert(r, s)

    # minimal + reduced basis
    final = sorted(live, key=lambda i: red.basis[i][0][0])
    lw = [red.lead_w[i] for i in final]
    minimal = [i for a, i in enumerate(final)
               if not any(b != a and _divides(ctx, lw[b], lw[a]) for b in range(len(final)))]
    fin = _Reducer(ctx)
    for i in minimal:
        fin.add(red.basis[i])
    out = []
    for idx, i in enumerate(minimal):
        g = red.basis[i]
        # reduce the tail by the others (lead monomials are an antichain)
        acc = {k: c for k, _, c in g[1:]}
        emap = {k: w for k, w, _ in g[1:]}
        tail = fin.reduce(acc, emap)
        out.append([g[0]] + tail)
    stats.basis_size = len(out)
    return [ctx.to_poly(ring, t) for t in out]


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` under full reduction by ``basis`` (any generating list)."""
    ring = f.ring
    ctx = _Context(ring)
    red = _Reducer(ctx)
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError("basis element not in the ring of f")
        if g:
            red.add(_monic(ctx.to_internal(g), ring.p))
    t = ctx.to_internal(f)
    r = red.reduce({k: c for k, _, c in t}, {k: w for k, w, _ in t})
    return ctx.to_poly(ring, r)


# ------------------------------------------------------------------- ideals


class Ideal:
    """An ideal of a polynomial ring, with a lazily cached reduced Groebner basis."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} not in {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: tuple | None = None
        self._hilbert = None
        self.stats = GBStats()

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring})"

    def groebner(self, max_steps: int | None = None) -> tuple:
        if self._gb is None:
            self._gb = tuple(buchberger(self.ring, self.generators, max_steps, self.stats))
        return self._gb

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].degree() == 0

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner())

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("polynomial not in the ideal's ring")
        return not self.reduce(f)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def hilbert(self) -> "HilbertData":
        if self._hilbert is None:
            self._hilbert = hilbert(self)
        return self._hilbert

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("ideals in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def same_as(self, other: "Ideal") -> bool:
        """Equality of ideals via reduced Groebner bases."""
        if other.ring != self.ring:
            raise RingMismatchError("ideals in different rings")
        return set(self.groebner()) == set(other.groebner())


def groebner_basis(ideal: Ideal, max_steps: int | None = None) -> Ideal:
    """Return ``ideal`` with its reduced Groebner basis computed and cached."""
    ideal.groebner(max_steps)
    return ideal


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """True iff every generator of ``small`` reduces to zero modulo ``big``."""
    if big.ring != small.ring:
        raise RingMismatchError("ideals in different rings")
    gb = big.groebner()
    return all(not normal_form(g, gb) for g in small.generators)


def _remap(f: Polynomial, ring: Ring, index_map: Sequence[int]) -> Polynomial:
    """Move ``f`` into ``ring`` sending variable i to variable ``index_map[i]``."""
    n = ring.nvars
    d = {}
    for e, c in f.as_dict().items():
        ne = [0] * n
        for i, x in enumerate(e):
            if x:
                ne[index_map[i]] = x
        d[tuple(ne)] = c
    return Polynomial(ring, d)


def eliminate(ideal: Ideal, keep: Sequence, max_steps: int | None = None) -> Ideal:
    """Generators of ``ideal`` intersected with the subring on the ``keep`` variables.

    The result lives in a ring on the kept variables (original relative order,
    original monomial order).
    """
    ring = ideal.ring
    keep_idx = sorted({ring.index(k) for k in keep})
    drop_idx = [i for i in range(ring.nvars) if i not in set(keep_idx)]
    sub = Ring(tuple(ring.names[i] for i in keep_idx), ring.order, ring.field)
    if not drop_idx:
        return Ideal(sub, ideal.groebner(max_steps))
    names = [ring.names[i] for i in drop_idx] + [ring.names[i] for i in keep_idx]
    order = f"block:{len(drop_idx)}"
    big = Ring(tuple(names), order, ring.field)
    pos = {old: new for new, old in enumerate(drop_idx + keep_idx)}
    imap = [pos[i] for i in range(ring.nvars)]
    gb = buchberger(big, [_remap(g, big, imap) for g in ideal.generators], max_steps)
    k = len(drop_idx)
    back = []
    for g in gb:
        if any(any(e[:k]) for e in g.as_dict()):
            continue
        back.append(Polynomial(sub, {e[k:]: c for e, c in g.as_dict().items()}))
    out = Ideal(sub, back)
    return out


def _fresh_name(ring: Ring, base: str) -> str:
    name = base
    i = 0
    while name in ring.names:
        i += 1
        name = f"{base}{i}"
    return name


def intersect(a: Ideal, b: Ideal, max_steps: int | None = None) -> Ideal:
    """``a`` intersected with ``b`` via elimination of an auxiliary variable t."""
    if a.ring != b.ring:
        raise RingMismatchError("ideals in different rings")
    ring = a.ring
    t = _fresh_name(ring, "t_")
    big = Ring((t,) + ring.names, ring.order, ring.field)
    imap = [i + 1 for i in range(ring.nvars)]
    tv = big.var(0)
    gens = [tv * _remap(g, big, imap) for g in a.generators]
    gens += [(big.one() - tv) * _remap(g, big, imap) for g in b.generators]
    res = eliminate(Ideal(big, gens), ring.names, max_steps)
    return Ideal(ring, [Polynomial(ring, g.as_dict()) for g in res.generators])


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g`` when ``g`` divides ``f``; raises otherwise."""
    ring = f.ring
    q = ring.zero()
    r = f
    lm, lc = g.lm, g.lc
    inv = ring.field.inv(lc)
    while r:
        e, c = r.terms()[0]
        if any(a < b for a, b in zip(e, lm)):
            raise ValueError("division is not exact")
        m = tuple(a - b for a, b in zip(e, lm))
        coef = c * inv % ring.p
        q = q + ring.monomial(m, coef)
        r = r - g.mul_term(m, coef)
    return q


def ideal_quotient(i: Ideal, j: Ideal, max_steps: int | None = None) -> Ideal:
    """``(I : J) = {f : f J in I}``, one generator of J at a time."""
    if i.ring != j.ring:
        raise RingMismatchError("ideals in different rings")
    result: Ideal | None = None
    for g in j.generators:
        if i.contains(g):
            continue
        inter = intersect(i, Ideal(i.ring, [g]), max_steps)
        q = Ideal(i.ring, [divide_exact(h, g) for h in inter.groebner(max_steps)])
        result = q if result is None else intersect(result, q, max_steps)
    if result is None:
        return Ideal(i.ring, [i.ring.one()])
    return result


def _linear_change(ring: Ring, form: Polynomial):
    """Coordinates in which ``form`` is the last variable.

    Returns the new ring, the map into it and the map back.
    """
    coeffs = [form.coefficient(tuple(1 if k == i else 0 for k in range(ring.nvars)))
              for i in range(ring.nvars)]
    if form.degree() != 1 or not form.is_homogeneous():
        raise ValueError("expected a nonzero linear form")
    j = max(i for i, c in enumerate(coeffs) if c)
    names = tuple(nm for i, nm in enumerate(ring.names) if i != j) + (ring.names[j],)
    new = Ring(names, "degrevlex", ring.field)
    inv = ring.field.inv(coeffs[j])
    ell = new.var(ring.names[j])
    xj = ell
    for i, c in enumerate(coeffs):
        if i != j and c:
            xj = xj - new.var(ring.names[i]) * c
    forward = {ring.names[j]: xj * inv}
    backward = {ring.names[j]: form}
    return new, forward, backward


def quotient_by_linear_form(ideal: Ideal, form: Polynomial, max_steps: int | None = None) -> Ideal:
    """``(I : l)`` for homogeneous ``I`` and a linear form ``l``.

    After a coordinate change making ``l`` the last variable, a degrevlex
    Groebner basis divided once by that variable generates the quotient.
    """
    if not ideal.is_homogeneous():
        raise ValueError("quotient_by_linear_form needs a homogeneous ideal")
    ring = ideal.ring
    new, fwd, back = _linear_change(ring, form)
    moved = Ideal(new, [g.substitute(fwd, new) for g in ideal.generators])
    last = new.nvars - 1
    gens = []
    for g in moved.groebner(max_steps):
        if all(e[last] >= 1 for e in g.as_dict()):
            g = Polynomial(new, {e[:last] + (e[last] - 1,): c for e, c in g.as_dict().items()})
        gens.append(g)
    out = [g.substitute(back, ring) for g in gens]
    return Ideal(ring, out)


def saturate_by_linear_form(ideal: Ideal, form: Polynomial, cap: int = 5,
                            max_steps: int | None = None) -> tuple[Ideal, int]:
    """Iterate ``I : l`` until the ideal stops growing (at most ``cap`` times).

    Returns the final ideal and the number of quotient steps taken.
    """
    cur = ideal
    for it in range(1, cap + 1):
        nxt = quotient_by_linear_form(cur, form, max_steps)
        if ideal_contains(cur, nxt):
            return cur, it
        cur = nxt
    return cur, cap


def radical_membership(f: Polynomial, ideal: Ideal, max_steps: int | None = None) -> bool:
    """``f`` lies in the radical of ``ideal`` iff ``1`` lies in ``I + (y f - 1)``."""
    if f.ring != ideal.ring:
        raise RingMismatchError("polynomial and ideal in different rings")
    ring = ideal.ring
    y = _fresh_name(ring, "y_")
    big = Ring(ring.names + (y,), "degrevlex", ring.field)
    imap = list(range(ring.nvars))
    gens = [_remap(g, big, imap) for g in ideal.generators]
    gens.append(big.var(y) * _remap(f, big, imap) - 1)
    gb = buchberger(big, gens, max_steps)
    return len(gb) == 1 and gb[0].degree() == 0


# ------------------------------------------------------------------ Hilbert


@dataclass
class HilbertData:
    """Hilbert series ``numerator / (1-t)^n`` of ``R/I`` and derived invariants.

    ``dimension`` is the Krull dimension of the quotient (one more than the
    projective dimension); ``reduced`` is the numerator after cancelling
    every factor ``1 - t``, whose value at 1 is the degree.
    """

    nvars: int
    numerator: list
    dimension: int
    degree: int
    reduced: list = field(default_factory=list)

    @property
    def projective_dimension(self) -> int:
        return self.dimension - 1

    def hilbert_function(self, k: int) -> int:
        n = self.nvars
        total = 0
        for i, a in enumerate(self.numerator):
            if i <= k and a:
                total += a * comb(k - i + n - 1, n - 1)
        return total

    def hilbert_polynomial(self, k: int) -> int:
        d = self.dimension
        if d == 0:
            return 0
        return sum(q * comb(k - i + d - 1, d - 1) for i, q in enumerate(self.reduced))

    def same_polynomial(self, other: "HilbertData") -> bool:
        if self.dimension != other.dimension:
            return False
        start = max(len(self.reduced), len(other.reduced)) + 1
        return all(self.hilbert_polynomial(k) == other.hilbert_polynomial(k)
                   for k in range(start, start + self.dimension + 1))


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_add(a, b):
    return _poly_sub(a, [-x for x in b])


def _shift(a, k):
    return [0] * k + list(a)


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return frozenset(out)


@lru_cache(maxsize=200_000)
def _hilbert_numerator(gens: frozenset, n: int) -> tuple:
    """Numerator of the Hilbert series of ``K[x_1..x_n] / (gens)`` for monomial gens."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    # product case: every generator a pure power in its own variable
    gens = tuple(gens)
    supports = [tuple(i for i, x in enumerate(g) if x) for g in gens]
    if all(len(s) == 1 for s in supports) and len({s[0] for s in supports}) == len(supports):
        num = [1]
        for g in gens:
            d = sum(g)
            num = _poly_sub(num, _shift(num, d))
        return tuple(num)
    # pivot on the variable occurring in the most mixed generators
    counts = [0] * n
    for g, sup in zip(gens, supports):
        if len(sup) < 2:
            continue
        for i, x in enumerate(g):
            if x:
                counts[i] += 1
    v = max(range(n), key=lambda i: (counts[i], -i))
    unit = tuple(1 if i == v else 0 for i in range(n))
    plus = _minimalize([g for g in gens if not g[v]] + [unit])
    colon = _minimalize([tuple(x - 1 if i == v and x else x for i, x in enumerate(g)) for g in gens])
    a = _hilbert_numerator(plus, n)
    b = _hilbert_numerator(colon, n)
    return tuple(_poly_add(list(a), _shift(list(b), 1)))


def hilbert_from_leading(lead: Iterable[tuple], n: int) -> HilbertData:
    num = list(_hilbert_numerator(_minimalize(list(lead)), n))
    # divide out (1 - t) as often as possible
    reduced = num[:]
    k = 0
    while any(reduced) and sum(reduced) == 0:
        # synthetic division by (1 - t): q_i = sum_{j<=i} a_j
        q = []
        acc = 0
        for a in reduced[:-1]:
            acc += a
            q.append(acc)
        reduced = q or [0]
        k += 1
    dim = n - k if any(num) else 0
    deg = sum(reduced) if any(num) else 0
    return HilbertData(n, num, dim, deg, reduced)


def hilbert(ideal: Ideal) -> HilbertData:
    """Hilbert series data of ``R/I`` for a homogeneous ideal."""
    if not ideal.is_homogeneous():
        raise ValueError("hilbert needs a homogeneous ideal")
    ring = ideal.ring
    if ring.order != "degrevlex":
        ideal = Ideal(ring.with_order("degrevlex"), [g.change_ring(ring.with_order("degrevlex"))
                                                     for g in ideal.generators])
    gb = ideal.groebner()
    return hilbert_from_leading([g.lm for g in gb], ring.nvars)
