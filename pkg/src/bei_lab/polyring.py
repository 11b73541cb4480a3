"""Exact polynomial arithmetic over Q in x_1..x_n, y_1..y_n and lex Groebner bases.

Monomials are packed into Python ints, one 8-bit field per variable, with
the greatest variable in the most significant field.  With that layout
lex comparison is integer comparison, multiplication is addition and
divisibility is a single guarded subtraction.  Every ring carries one
auxiliary variable ``t`` above all others; it only appears inside
:func:`ideal_intersection`.  Coefficients are ``gmpy2.mpq``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Callable, Hashable, Iterable, Sequence

from gmpy2 import mpq

from .errors import DomainError

BITS = 8
FIELD = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1

Terms = dict  # packed monomial -> mpq


@dataclass(frozen=True)
class RingSpec:
    """Q[t, x_1..x_n, y_1..y_n] with lex order t > x_1 > ... > x_n > y_1 > ... > y_n."""

    n: int

    @property
    def var_count(self) -> int:
        return 2 * self.n + 1

    @cached_property
    def guard(self) -> int:
        g = 0
        for v in range(self.var_count):
            g |= 1 << (self.shift(v) + BITS - 1)
        return g

    @cached_property
    def full(self) -> int:
        return (1 << (BITS * self.var_count)) - 1

    @cached_property
    def aux_bound(self) -> int:
        """Monomials below this value are free of ``t``."""
        return 1 << self.shift(0)

    @cached_property
    def block_mask(self) -> int:
        return (1 << (BITS * self.n)) - 1

    def shift(self, var: int) -> int:
        return BITS * (self.var_count - 1 - var)

    def unit(self, var: int) -> int:
        return 1 << self.shift(var)

    def x(self, i: int) -> int:
        return self.unit(i)

    def y(self, i: int) -> int:
        return self.unit(self.n + i)

    @cached_property
    def t(self) -> int:
        return self.unit(0)

    def var_name(self, var: int) -> str:
        if var == 0:
            return "t"
        if var <= self.n:
            return f"x{var}"
        return f"y{var - self.n}"

    def exponents(self, mono: int) -> list[int]:
        return [(mono >> self.shift(v)) & FIELD for v in range(self.var_count)]

    def from_exponents(self, exps: Sequence[int]) -> int:
        mono = 0
        for v, e in enumerate(exps):
            if e:
                if e > MAX_EXP:
                    raise OverflowError("exponent exceeds the packed field width")
                mono |= e << self.shift(v)
        return mono

    # -- packed monomial arithmetic ------------------------------------------

    def divides(self, a: int, b: int) -> bool:
        """Does monomial ``a`` divide monomial ``b``?"""
        g = self.guard
        return ((b | g) - a) & g == g

    def _ge_mask(self, a: int, b: int) -> int:
        """Full-field mask of the variables where a's exponent >= b's."""
        d = ((a | self.guard) - b) & self.guard
        return (d >> (BITS - 1)) * FIELD

    def lcm(self, a: int, b: int) -> int:
        m = self._ge_mask(a, b)
        return (a & m) | (b & ~m & self.full)

    def gcd(self, a: int, b: int) -> int:
        m = self._ge_mask(a, b)
        return (b & m) | (a & ~m & self.full)

    def coprime(self, a: int, b: int) -> bool:
        return self.gcd(a, b) == 0

    @staticmethod
    def degree(mono: int) -> int:
        # sum of base-256 digits; valid while the total degree stays below 255
        return mono % FIELD

    def support_mask(self, mono: int) -> int:
        """Full-field mask of the variables occurring in ``mono``."""
        g = ((mono | self.guard) - self._low_ones) & self.guard
        return (g >> (BITS - 1)) * FIELD

    @cached_property
    def _low_ones(self) -> int:
        ones = 0
        for v in range(self.var_count):
            ones |= 1 << self.shift(v)
        return ones

    def render_monomial(self, mono: int) -> str:
        parts = []
        for v, e in enumerate(self.exponents(mono)):
            if e == 1:
                parts.append(self.var_name(v))
            elif e > 1:
                parts.append(f"{self.var_name(v)}^{e}")
        return "*".join(parts) if parts else "1"

    def monomials_of_degree(self, d: int, variables: Sequence[int] | None = None) -> list[int]:
        """All monomials of total degree ``d`` in the given variables (default: all but t)."""
        if variables is None:
            variables = range(1, self.var_count)
        units = [self.unit(v) for v in variables]
        return [sum(c) for c in combinations_with_replacement(units, d)]


class MultiPoly:
    """Immutable polynomial: a map from packed monomials to nonzero rationals."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: RingSpec, terms: Terms | None = None):
        self.ring = ring
        self.terms = {m: mpq(c) for m, c in (terms or {}).items() if c}
        self._lm = max(self.terms) if self.terms else None

    @classmethod
    def _wrap(cls, ring: RingSpec, terms: Terms) -> MultiPoly:
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._lm = max(terms) if terms else None
        return p

    @classmethod
    def monomial(cls, ring: RingSpec, mono: int, coeff=1) -> MultiPoly:
        return cls._wrap(ring, {mono: mpq(coeff)} if coeff else {})

    @classmethod
    def constant(cls, ring: RingSpec, c=1) -> MultiPoly:
        return cls.monomial(ring, 0, c)

    @classmethod
    def x(cls, ring: RingSpec, i: int) -> MultiPoly:
        return cls.monomial(ring, ring.x(i))

    @classmethod
    def y(cls, ring: RingSpec, i: int) -> MultiPoly:
        return cls.monomial(ring, ring.y(i))

    @classmethod
    def aux(cls, ring: RingSpec) -> MultiPoly:
        return cls.monomial(ring, ring.t)

    # -- accessors -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> int:
        if self._lm is None:
            raise ValueError("the zero polynomial has no leading monomial")
        return self._lm

    @property
    def lc(self) -> mpq:
        return self.terms[self.lm]

    def total_degree(self) -> int:
        return max((RingSpec.degree(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({RingSpec.degree(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monic(self) -> MultiPoly:
        if not self.terms:
            return self
        inv = 1 / self.lc
        return MultiPoly._wrap(self.ring, {m: c * inv for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[int, mpq]]:
        return sorted(self.terms.items(), reverse=True)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: MultiPoly) -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._wrap(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._wrap(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            c = mpq(other)
            if not c:
                return MultiPoly._wrap(self.ring, {})
            return MultiPoly._wrap(self.ring, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        out: Terms = {}
        guard = self.ring.guard
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                if m & guard:
                    raise OverflowError("exponent exceeds the packed field width")
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly._wrap(self.ring, out)

    __rmul__ = __mul__

    def mul_term(self, mono: int, coeff=1) -> MultiPoly:
        c = mpq(coeff)
        return MultiPoly._wrap(self.ring, {m + mono: v * c for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.terms == {0: mpq(other)}

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        return render(self)


def render(f: MultiPoly) -> str:
    """Terms in descending order; coefficients printed as exact p/q."""
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = f.ring.render_monomial(m)
        if mono == "1":
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


def f_ij(ring: RingSpec, i: int, j: int) -> MultiPoly:
    """The 2-minor x_i y_j - x_j y_i."""
    if i > j:
        i, j = j, i
    return MultiPoly._wrap(ring, {ring.x(i) + ring.y(j): mpq(1), ring.x(j) + ring.y(i): mpq(-1)})


# -- reduction -----------------------------------------------------------------


def _reduce(ring: RingSpec, terms: Terms, basis: Sequence[tuple[int, mpq, Terms]]) -> Terms:
    """Full multivariate division remainder.

    Always rewrites the greatest reducible term using the first basis
    element (in list order) whose leading monomial divides it.
    """
    p = dict(terms)
    rem: Terms = {}
    guard = ring.guard
    while p:
        m = max(p)
        c = p.pop(m)
        mg = m | guard
        for bm, bc, bt in basis:
            if (mg - bm) & guard == guard:
                q = m - bm
                f = c / bc
                for mm, cc in bt.items():
                    if mm == bm:
                        continue
                    k = mm + q
                    v = p.get(k, 0) - f * cc
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
                break
        else:
            rem[m] = c
    return rem


def _as_basis(polys: Iterable[MultiPoly]) -> list[tuple[int, mpq, Terms]]:
    return [(p.lm, p.lc, p.terms) for p in polys if not p.is_zero()]


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of f on division by ``basis``; no remainder term is divisible by a basis LM."""
    return MultiPoly._wrap(f.ring, _reduce(f.ring, f.terms, _as_basis(basis)))


def divide_exact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Quotient f / g, which must be exact."""
    ring = f.ring
    p = dict(f.terms)
    quot: Terms = {}
    glm, glc = g.lm, g.lc
    while p:
        m = max(p)
        if not ring.divides(glm, m):
            raise AssertionError("inexact division: " + render(f) + " by " + render(g))
        c = p[m] / glc
        q = m - glm
        quot[q] = c
        for mm, cc in g.terms.items():
            k = mm + q
            v = p.get(k, 0) - c * cc
            if v:
                p[k] = v
            else:
                p.pop(k, None)
    return MultiPoly._wrap(ring, quot)


# -- Buchberger ----------------------------------------------------------------


def _spoly(ring: RingSpec, f: tuple[int, Terms], g: tuple[int, Terms]) -> Terms:
    """S-polynomial of two monic polynomials."""
    lcm = ring.lcm(f[0], g[0])
    qf, qg = lcm - f[0], lcm - g[0]
    out: Terms = {}
    for m, c in f[1].items():
        if m != f[0]:
            out[m + qf] = c
    for m, c in g[1].items():
        if m == g[0]:
            continue
        k = m + qg
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _monic_terms(terms: Terms) -> tuple[int, Terms]:
    lm = max(terms)
    inv = 1 / terms[lm]
    if inv == 1:
        return lm, terms
    return lm, {m: c * inv for m, c in terms.items()}


def _buchberger_terms(ring: RingSpec, gens: Sequence[Terms]) -> list[tuple[int, Terms]]:
    """Reduced monic lex Groebner basis, as (lm, terms) sorted by descending lm.

    Normal selection strategy; pairs are discarded by Buchberger's coprime
    criterion and the chain criterion, organised as the Gebauer-Moeller update.
    """
    polys: list[tuple[int, Terms]] = []  # every basis element ever added
    active: list[int] = []  # indices whose leading monomials are minimal
    pairs: dict[tuple[int, int], int] = {}  # (i, j) -> lcm

    def basis_view() -> list[tuple[int, mpq, Terms]]:
        return [(polys[i][0], mpq(1), polys[i][1]) for i in active]

    def add(h_terms: Terms) -> None:
        h = len(polys)
        lm_h, terms_h = _monic_terms(h_terms)
        polys.append((lm_h, terms_h))
        lcm = ring.lcm
        lcms = {g: lcm(polys[g][0], lm_h) for g in active}

        # chain criterion among the new pairs, keeping coprime ones for now
        cand = list(active)
        kept: list[int] = []
        while cand:
            g1 = cand.pop()
            l1 = lcms[g1]
            if ring.coprime(polys[g1][0], lm_h) or not (
                any(ring.divides(lcms[g2], l1) for g2 in cand)
                or any(ring.divides(lcms[g2], l1) for g2 in kept)
            ):
                kept.append(g1)
        new_pairs = {
            (g, h): lcms[g] for g in kept if not ring.coprime(polys[g][0], lm_h)
        }

        # drop old pairs whose lcm is a proper multiple witnessed by h
        for (a, b), l in list(pairs.items()):
            if (
                ring.divides(lm_h, l)
                and lcm(polys[a][0], lm_h) != l
                and lcm(polys[b][0], lm_h) != l
            ):
                del pairs[(a, b)]
        pairs.update(new_pairs)
        active[:] = [g for g in active if not ring.divides(lm_h, polys[g][0])] + [h]

    for gen in gens:
        if not gen:
            continue
        r = _reduce(ring, gen, basis_view())
        if r:
            add(r)

    while pairs:
        key = min(pairs, key=lambda k: (RingSpec.degree(pairs[k]), pairs[k], k))
        del pairs[key]
        s = _spoly(ring, polys[key[0]], polys[key[1]])
        if not s:
            continue
        r = _reduce(ring, s, basis_view())
        if r:
            add(r)

    # interreduce the minimal basis into the reduced basis
    minimal = sorted((polys[i] for i in active), key=lambda p: p[0])
    reduced: list[tuple[int, Terms]] = []
    for idx, (lm, terms) in enumerate(minimal):
        others = [(m, mpq(1), t) for j, (m, t) in enumerate(minimal) if j != idx]
        tail = {m: c for m, c in terms.items() if m != lm}
        tail = _reduce(ring, tail, others)
        tail[lm] = mpq(1)
        reduced.append((lm, tail))
    reduced.sort(key=lambda p: p[0], reverse=True)
    return reduced


def buchberger(gens: Sequence[MultiPoly]) -> list[MultiPoly]:
    """Reduced, monic lex Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    return [MultiPoly._wrap(ring, t) for _, t in _buchberger_terms(ring, [g.terms for g in gens])]


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    fm, gm = f.monic(), g.monic()
    return MultiPoly._wrap(f.ring, _spoly(f.ring, (fm.lm, fm.terms), (gm.lm, gm.terms)))


def is_groebner(gens: Sequence[MultiPoly]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return True
    basis = _as_basis(gens)
    ring = gens[0].ring
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            s = s_polynomial(gens[a], gens[b])
            if s.terms and _reduce(ring, s.terms, basis):
                return False
    return True


def find_nonreducing_spair(gens: Sequence[MultiPoly]) -> tuple[int, int, MultiPoly] | None:
    """First S-pair (a, b) whose S-polynomial has a nonzero remainder, with that remainder."""
    gens = [g for g in gens if not g.is_zero()]
    basis = _as_basis(gens)
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            s = s_polynomial(gens[a], gens[b])
            r = _reduce(s.ring, s.terms, basis)
            if r:
                return a, b, MultiPoly._wrap(s.ring, r)
    return None


# -- ideals --------------------------------------------------------------------


class IdealHandle:
    """Generators plus a lazily computed, memoized reduced Groebner basis."""

    def __init__(self, ring: RingSpec, generators: Iterable[MultiPoly], *, gb: list[MultiPoly] | None = None):
        self.ring = ring
        self.generators = tuple(g for g in generators if not g.is_zero())
        self._gb = gb
        self._lock = threading.Lock()
        self._nf_cache: dict[tuple[int, frozenset], Terms] = {}

    @cached_property
    def _gb_terms(self) -> list[tuple[int, mpq, Terms]]:
        return [(p.lm, mpq(1), p.terms) for p in self.gb]

    @property
    def gb(self) -> list[MultiPoly]:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(self.generators)
        return self._gb

    def leading_monomials(self) -> list[int]:
        return [p.lm for p in self.gb]

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return MultiPoly._wrap(self.ring, _reduce(self.ring, f.terms, self._gb_terms))

    def reduce_terms(self, terms: Terms) -> Terms:
        return _reduce(self.ring, terms, self._gb_terms)

    def contains(self, f: MultiPoly) -> bool:
        return not self.reduce(f).terms

    def contains_ideal(self, other: IdealHandle) -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(p.lm == 0 for p in self.gb)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, IdealHandle) and ideal_equal(self, other)

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        gens = ", ".join(render(g) for g in self.generators[:6])
        more = ", ..." if len(self.generators) > 6 else ""
        return f"IdealHandle({gens}{more})"


def ideal(ring: RingSpec, gens: Iterable[MultiPoly]) -> IdealHandle:
    return IdealHandle(ring, gens)


def ideal_equal(a: IdealHandle, b: IdealHandle) -> bool:
    """Equality of reduced Groebner bases."""
    return [p.terms for p in a.gb] == [p.terms for p in b.gb]


def ideal_sum(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    return IdealHandle(a.ring, a.generators + b.generators)


def ideal_intersection(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """I cap J as the t-free part of a lex basis of t*I + (1 - t)*J."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return IdealHandle(ring, [])
    for g in a.generators + b.generators:
        if any(m >= ring.aux_bound for m in g.terms):
            raise DomainError("inputs to an intersection must be free of t")
    t = MultiPoly.aux(ring)
    one_minus_t = MultiPoly.constant(ring, 1) - t
    gens = [t * g for g in a.generators] + [one_minus_t * g for g in b.generators]
    full = _buchberger_terms(ring, [g.terms for g in gens])
    kept = [MultiPoly._wrap(ring, terms) for lm, terms in full if lm < ring.aux_bound]
    return IdealHandle(ring, kept, gb=kept)


def colon_by_poly(a: IdealHandle, f: MultiPoly) -> IdealHandle:
    """(I : f) = (I cap (f)) / f."""
    if f.is_zero():
        raise DomainError("colon by the zero polynomial")
    ring = a.ring
    if f.terms.keys() == {0}:
        return a
    meet = ideal_intersection(a, IdealHandle(ring, [f]))
    quotients = [divide_exact(g, f) for g in meet.generators]
    return IdealHandle(ring, quotients, gb=buchberger(quotients))


def colon_by_ideal(a: IdealHandle, p: IdealHandle) -> IdealHandle:
    """(I : P) as the intersection of (I : g) over the generators g of P."""
    result: IdealHandle | None = None
    for g in p.generators:
        part = colon_by_poly(a, g)
        result = part if result is None else ideal_intersection(result, part)
    if result is None:
        # (I : 0) is the unit ideal
        return IdealHandle(a.ring, [MultiPoly.constant(a.ring, 1)])
    return result


def alpha_quotient(j: IdealHandle, i: IdealHandle) -> int:
    """Least degree of a nonzero element of J/I, for homogeneous I contained in J.

    By convention alpha(0) = 0, i.e. the result is 0 when J = I.
    """
    if not (i.is_homogeneous() and all(p.is_homogeneous() for p in j.gb)):
        raise DomainError("alpha_quotient needs homogeneous ideals")
    if not j.contains_ideal(i):
        raise DomainError("alpha_quotient needs I contained in J")
    degrees = [p.total_degree() for p in j.gb if not i.contains(p)]
    return min(degrees, default=0)


# -- degree sweep ----------------------------------------------------------------


def _kernel_vector(columns: list[Terms]) -> list[mpq] | None:
    """A nonzero rational vector c with sum_k c_k * columns[k] = 0, or None."""
    pivots: dict[Hashable, tuple[Terms, dict[int, mpq]]] = {}
    order: list[Hashable] = []
    for k, col in enumerate(columns):
        vec = dict(col)
        combo = {k: mpq(1)}
        for key in order:
            if key in vec:
                pv, pc = pivots[key]
                f = vec[key] / pv[key]
                for kk, vv in pv.items():
                    w = vec.get(kk, 0) - f * vv
                    if w:
                        vec[kk] = w
                    else:
                        vec.pop(kk, None)
                for kk, vv in pc.items():
                    w = combo.get(kk, 0) - f * vv
                    if w:
                        combo[kk] = w
                    else:
                        combo.pop(kk, None)
        if not vec:
            return [combo.get(i, mpq(0)) for i in range(len(columns))]
        key = max(vec)
        pivots[key] = (vec, combo)
        order.append(key)
    return None


@dataclass(frozen=True)
class SweepHit:
    degree: int
    witness: MultiPoly


def v_local_sweep(
    i: IdealHandle,
    p: IdealHandle,
    max_degree: int,
    grading: Callable[[int], Hashable] | None = None,
    variables: Sequence[int] | None = None,
) -> SweepHit | None:
    """Least d with (I : P)_d != I_d, with a witness f of that degree.

    Each degree is split into the components of ``grading`` (any map
    from monomials under which I and P are homogeneous).  Components in
    which every monomial contains a variable lying in P are skipped,
    which is sound because I is radical: (I : P) cap P is inside I.
    ``variables`` restricts the monomials outright; callers may pass it
    only when the grading already separates the omitted variables.
    """
    ring = i.ring
    lts = i.leading_monomials()
    guard = ring.guard
    pgens = [g.terms for g in p.generators]
    gkeys = [frozenset(g.items()) for g in pgens]
    var_mask = 0
    for g in p.generators:
        if g.is_monomial() and RingSpec.degree(g.lm) == 1:
            var_mask |= ring.support_mask(g.lm)
    cache = i._nf_cache

    def nf_product(m: int, gi: int) -> Terms:
        key = (m, gkeys[gi])
        hit = cache.get(key)
        if hit is None:
            prod = {mm + m: c for mm, c in pgens[gi].items()}
            hit = i.reduce_terms(prod)
            cache[key] = hit
        return hit

    def standard(m: int) -> bool:
        mg = m | guard
        return not any((mg - lt) & guard == guard for lt in lts)

    for d in range(max_degree + 1):
        groups: dict[Hashable, list[int]] = {}
        for m in ring.monomials_of_degree(d, variables):
            groups.setdefault(grading(m) if grading else 0, []).append(m)
        for key in sorted(groups, key=repr):
            comp = groups[key]
            if var_mask and all(m & var_mask for m in comp):
                continue
            std = sorted((m for m in comp if standard(m)), reverse=True)
            if not std:
                continue
            columns = []
            for m in std:
                col: Terms = {}
                for gi in range(len(pgens)):
                    for mm, c in nf_product(m, gi).items():
                        col[(gi, mm)] = c
                columns.append(col)
            kernel = _kernel_vector(columns)
            if kernel is not None:
                witness = MultiPoly(ring, {m: c for m, c in zip(std, kernel) if c})
                return SweepHit(d, witness)
        # keep the cache bounded to the current sweep depth
        if len(cache) > 2_000_000:
            cache.clear()
    return None


def v_local_linear(
    i: IdealHandle,
    p: IdealHandle,
    max_degree: int,
    grading: Callable[[int], Hashable] | None = None,
    variables: Sequence[int] | None = None,
) -> int | None:
    """Degree-sweep value of alpha((I : P)/I), or None if it exceeds ``max_degree``."""
    hit = v_local_sweep(i, p, max_degree, grading, variables)
    return None if hit is None else hit.degree
