"""Binomial edge ideals: minimal primes, v-numbers and executable theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Callable, Hashable, Iterable

from .domination import dc_min, dc_minimal_members
from .errors import DomainError, TheoremViolation, UnsupportedSizeError
from .graph import (
    Graph,
    complete_multipartite,
    component_masks,
    from_mask,
    induced_subgraph,
    iter_bits,
    popcount,
    simple_paths_between,
    to_mask,
)
from .monomial import SquarefreeMonomialIdeal, v_edge_ideal_both_routes, v_monomial
from .polyring import (
    BITS,
    FIELD,
    IdealHandle,
    MultiPoly,
    RingSpec,
    alpha_quotient,
    colon_by_ideal,
    colon_by_poly,
    f_ij,
    ideal_equal,
    ideal_intersection,
    is_groebner,
    v_local_sweep,
)
from .structure import (
    Clutter,
    chained_clique_cover_number,
    initial_graph,
    is_closed_labeling,
    longest_induced_path,
    theta_clique_cover,
)

MAX_COMPONENT_FOR_PRIMES = 20
MODES = ("linear", "colon", "both")


@lru_cache(maxsize=512)
def binomial_edge_ideal(g: Graph) -> IdealHandle:
    """J_G with one generator per edge, in edge order.

    Cached per graph so the Groebner basis and normal-form cache are shared.
    """
    ring = RingSpec(g.n)
    return IdealHandle(ring, [f_ij(ring, i, j) for i, j in g.edges])


# -- primes P_S(G) ---------------------------------------------------------------


def _is_cut_set(g: Graph, s: int) -> bool:
    """Each i in S is a cut point of G restricted to (V \\ S) + i."""
    rest = g.full_mask & ~s
    for i in iter_bits(s):
        bit = 1 << (i - 1)
        before = len(component_masks(g.adj, rest | bit))
        after = len(component_masks(g.adj, rest))
        if after <= before:
            return False
    return True


@dataclass(frozen=True)
class PrimeSpec:
    n: int
    s: frozenset[int]
    components: tuple[frozenset[int], ...]
    minimal: bool = field(default=True, compare=False)

    @cached_property
    def ideal(self) -> IdealHandle:
        ring = RingSpec(self.n)
        gens = []
        for i in sorted(self.s):
            gens += [MultiPoly.x(ring, i), MultiPoly.y(ring, i)]
        for comp in self.components:
            gens += [f_ij(ring, k, l) for k, l in combinations(sorted(comp), 2)]
        return IdealHandle(ring, gens)

    @property
    def height(self) -> int:
        # n - c(S) + |S|
        return self.n - len(self.components) + len(self.s)

    def as_dict(self) -> dict:
        return {"S": sorted(self.s), "components": [sorted(c) for c in self.components]}

    def __str__(self) -> str:
        return "P_{" + ",".join(map(str, sorted(self.s))) + "}"


def prime_PS(g: Graph, s: Iterable[int]) -> PrimeSpec:
    mask = to_mask(s)
    if mask & ~g.full_mask:
        raise DomainError(f"S must be a subset of 1..{g.n}")
    comps = tuple(from_mask(c) for c in component_masks(g.adj, g.full_mask & ~mask))
    return PrimeSpec(g.n, from_mask(mask), comps, minimal=_is_cut_set(g, mask))


def _simplicial(g: Graph, v: int) -> bool:
    nbrs = list(iter_bits(g.adj[v - 1]))
    return all(g.has_edge(a, b) for a, b in combinations(nbrs, 2))


def _component_cut_sets(g: Graph, comp: int) -> list[int]:
    size = popcount(comp)
    if size > MAX_COMPONENT_FOR_PRIMES:
        raise UnsupportedSizeError(
            f"minimal-prime enumeration is capped at components of {MAX_COMPONENT_FOR_PRIMES} vertices"
        )
    # a vertex whose neighbourhood is a clique is never a cut point of an induced subgraph
    candidates = [v for v in iter_bits(comp) if not _simplicial(g, v)]
    found = [0]
    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            s = to_mask(combo)
            if _is_cut_set(g, s):
                found.append(s)
    return found


def minimal_primes(g: Graph) -> list[PrimeSpec]:
    """All minimal primes, by |S| then lexicographically."""
    per_component = [_component_cut_sets(g, c) for c in component_masks(g.adj, g.full_mask)]
    masks = [sum(choice) for choice in product(*per_component)]
    masks.sort(key=lambda m: (popcount(m), tuple(iter_bits(m))))
    return [prime_PS(g, from_mask(m)) for m in masks]


# -- v-number engines ------------------------------------------------------------------


def vertex_grading(ring: RingSpec) -> Callable[[int], Hashable]:
    """Multigrading by vertex multiplicities plus the number of x's.

    J_G and every P_S(G) are homogeneous for it, which keeps sweep
    components tiny.
    """
    n = ring.n
    block = ring.block_mask
    shift = BITS * n

    def key(m: int) -> Hashable:
        xb = (m >> shift) & block
        return (xb + (m & block), xb % FIELD)

    return key


def _sweep(g: Graph, p: PrimeSpec, max_degree: int) -> int | None:
    ring = RingSpec(g.n)
    free = [v for i in g.vertices if i not in p.s for v in (i, g.n + i)]
    hit = v_local_sweep(binomial_edge_ideal(g), p.ideal, max_degree, vertex_grading(ring), free)
    return None if hit is None else hit.degree


def v_local_witness(g: Graph, p: PrimeSpec, max_degree: int | None = None) -> MultiPoly | None:
    """A polynomial f of least degree with f P inside J_G and f outside J_G."""
    ring = RingSpec(g.n)
    free = [v for i in g.vertices if i not in p.s for v in (i, g.n + i)]
    hit = v_local_sweep(
        binomial_edge_ideal(g), p.ideal, g.n if max_degree is None else max_degree,
        vertex_grading(ring), free,
    )
    return None if hit is None else hit.witness


def _colon_oracle(g: Graph, p: PrimeSpec) -> int:
    jg = binomial_edge_ideal(g)
    return alpha_quotient(colon_by_ideal(jg, p.ideal), jg)


def v_local(g: Graph, p: PrimeSpec, mode: str = "linear", max_degree: int | None = None) -> int:
    """v_P(J_G) for a minimal prime P.

    ``linear`` sweeps degrees up to ``max_degree`` (default n) and falls
    back to the colon oracle; ``colon`` uses only the oracle; ``both``
    runs each and insists they agree.
    """
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}")
    if p.n != g.n or not p.minimal or prime_PS(g, p.s) != p:
        raise DomainError(f"{p} is not a minimal prime of {g}")
    if not g.edges:
        return 0
    if mode == "colon":
        return _colon_oracle(g, p)
    swept = _sweep(g, p, g.n if max_degree is None else max_degree)
    if mode == "both":
        oracle = _colon_oracle(g, p)
        if swept != oracle:
            raise TheoremViolation(f"{g} at {p}: sweep {swept}, colon oracle {oracle}")
        return oracle
    return swept if swept is not None else _colon_oracle(g, p)


def v_local_at_Kn(g: Graph, mode: str = "combinatorial") -> int:
    if not g.is_connected():
        raise DomainError(f"{g} is disconnected; J_{{K_n}} is not a minimal prime")
    if mode == "combinatorial":
        return dc_min(g)
    p_empty = prime_PS(g, ())
    if mode == "algebraic":
        return v_local(g, p_empty)
    if mode == "both":
        combinatorial = dc_min(g)
        algebraic = v_local(g, p_empty)
        if combinatorial != algebraic:
            raise TheoremViolation(f"{g}: dc_min {combinatorial}, algebraic {algebraic}")
        return algebraic
    raise DomainError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class VNumberReport:
    v: int
    v_local: dict[PrimeSpec, int]
    v_at_Kn: int | None
    achieving_prime: PrimeSpec
    method: str


def _v_connected(
    h: Graph, mode: str, shortcut: bool, max_degree: int | None
) -> tuple[int, PrimeSpec, dict[PrimeSpec, int], str]:
    p_empty = prime_PS(h, ())
    if h.is_complete():
        return 0, p_empty, {p_empty: 0}, "combinatorial-shortcut"
    primes = minimal_primes(h)
    assert primes[0] == p_empty
    if shortcut:
        best, method = dc_min(h), "combinatorial-shortcut"
    elif mode == "colon":
        best, method = _colon_oracle(h, p_empty), "colon-oracle"
    else:
        best, method = v_local(h, p_empty, mode, max_degree), "linear-sweep"
    local = {p_empty: best}
    achieving = p_empty
    for p in primes[1:]:
        # J_G is not prime here, so no prime can beat 1
        if best <= 1:
            break
        if mode == "colon":
            value = _colon_oracle(h, p)
            local[p] = value
            if value < best:
                best, achieving, method = value, p, "colon-oracle"
            continue
        value = _sweep(h, p, best - 1)
        if value is not None:
            if mode == "both" and value != _colon_oracle(h, p):
                raise TheoremViolation(f"{h} at {p}: sweep and colon oracle disagree")
            local[p] = value
            best, achieving, method = value, p, "linear-sweep"
    return best, achieving, local, method


def _v_direct(g: Graph, mode: str, max_degree: int | None) -> VNumberReport:
    """Minimum over all minimal primes of g, without splitting components."""
    best: int | None = None
    achieving = None
    local: dict[PrimeSpec, int] = {}
    for p in minimal_primes(g):
        if best is not None and best <= 1:
            break
        if mode == "colon" or best is None:
            value = v_local(g, p, mode, max_degree=max_degree)
        else:
            value = _sweep(g, p, best - 1)
        if value is None:
            continue
        local[p] = value
        if best is None or value < best:
            best, achieving = value, p
    if not g.edges:
        best = 0
    assert best is not None and achieving is not None
    method = "colon-oracle" if mode == "colon" else "linear-sweep"
    v_kn = dc_min(g) if g.is_connected() else None
    return VNumberReport(best, local, v_kn, achieving, method)


def v_number(
    g: Graph,
    mode: str = "linear",
    shortcut: bool = True,
    split: bool = True,
    max_degree: int | None = None,
) -> VNumberReport:
    """v(J_G) as the sum over connected components of the least local v-number.

    With ``split=False`` the minimal primes of g itself are swept directly
    and no combinatorial shortcut is taken.  ``max_degree`` bounds the
    first sweep, the one that sets the initial upper bound.
    """
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}")
    if not split:
        return _v_direct(g, mode, max_degree)
    total = 0
    cut: set[int] = set()
    methods = []
    local: dict[PrimeSpec, int] = {}
    comps = component_masks(g.adj, g.full_mask)
    for comp in comps:
        sub, relabel = induced_subgraph(g, from_mask(comp))
        back = {new: old for old, new in relabel.items()}
        value, achieving, sub_local, method = _v_connected(sub, mode, shortcut, max_degree)
        total += value
        cut |= {back[v] for v in achieving.s}
        methods.append(method)
        if len(comps) == 1:
            local = sub_local
    achieving_prime = prime_PS(g, cut)
    if len(comps) > 1:
        local = {achieving_prime: total}
    method = "linear-sweep" if "linear-sweep" in methods else methods[0]
    if "colon-oracle" in methods:
        method = "colon-oracle"
    v_kn = dc_min(g) if len(comps) == 1 else None
    report = VNumberReport(total, local, v_kn, achieving_prime, method)
    if v_kn is not None and total > v_kn:
        raise TheoremViolation(f"{g}: v = {total} exceeds v at J_K_n = {v_kn}")
    return report


# -- complete multipartite graphs ---------------------------------------------------


def multipartite_decomposition(parts: list[int]) -> tuple[Graph, list[IdealHandle]]:
    """The graph with parts sorted ascending, and the primes J_{K_n}, P_{s+1}, ..., P_r."""
    sizes = sorted(parts)
    g = complete_multipartite(sizes)
    ring = RingSpec(g.n)
    primes = [prime_PS(g, ()).ideal]
    start = 1
    blocks = []
    for size in sizes:
        blocks.append(set(range(start, start + size)))
        start += size
    for block in blocks:
        if len(block) == 1:
            continue
        gens = []
        for v in g.vertices:
            if v not in block:
                gens += [MultiPoly.x(ring, v), MultiPoly.y(ring, v)]
        primes.append(IdealHandle(ring, gens))
    return g, primes


def v_multipartite(parts: list[int]) -> int:
    """v-number of a complete multipartite graph from its part sizes.

    All parts of size 1 give a complete graph, whose ideal is prime (v = 0).
    """
    if len(parts) < 2:
        raise DomainError("a complete multipartite graph needs at least 2 parts")
    if any(a < 1 for a in parts):
        raise DomainError("part sizes must be positive")
    if max(parts) == 1:
        return 0
    return 1 if min(parts) == 1 else 2


# -- initial ideal --------------------------------------------------------------------


@dataclass(frozen=True)
class InitialIdeal:
    clutter: Clutter
    monomials: tuple[int, ...]

    def as_monomial_ideal(self) -> SquarefreeMonomialIdeal:
        n = self.clutter.ground // 2
        names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))
        return SquarefreeMonomialIdeal(self.clutter, names)


def initial_ideal(g: Graph) -> InitialIdeal:
    """Leading monomials of the reduced lex basis, as a clutter on 2n variables.

    x_i is ground element i and y_j is n + j.
    """
    ring = RingSpec(g.n)
    lms = binomial_edge_ideal(g).leading_monomials()
    sets = []
    for m in lms:
        exps = ring.exponents(m)
        if any(e > 1 for e in exps):
            raise AssertionError(f"non-squarefree leading monomial {ring.render_monomial(m)}")
        sets.append(frozenset(v for v in range(1, ring.var_count) if exps[v]))
    clutter = Clutter.from_sets(2 * g.n, sets)
    return InitialIdeal(clutter, tuple(sorted(lms, reverse=True)))


def v_init(g: Graph) -> int:
    if not g.edges:
        raise DomainError("the initial ideal of an edgeless graph is zero")
    return v_monomial(initial_ideal(g).as_monomial_ideal())


# -- colon formulas ------------------------------------------------------------------


def build_Ge(g: Graph, e: tuple[int, int]) -> Graph:
    i, j = e
    if i == j or g.has_edge(i, j):
        raise DomainError(f"{{{i},{j}}} must be a non-edge")
    extra = []
    for end in (i, j):
        extra += list(combinations(g.neighbors(end), 2))
    return g.add_edges(extra)


def path_monomials(ring: RingSpec, path: list[int]) -> list[int]:
    """g_{P,t} for t = 0..s over the inner vertices i_1..i_s of the path."""
    inner = path[1:-1]
    out = []
    for t in range(len(inner) + 1):
        mono = sum(ring.y(v) for v in inner[:t]) + sum(ring.x(v) for v in inner[t:])
        out.append(mono)
    return out


def colon_single_edge_check(g: Graph, e: tuple[int, int]) -> bool:
    """Compare (J_G : f_e) with J_{G_e} plus the path monomials g_{P,t}."""
    i, j = sorted(e)
    ring = RingSpec(g.n)
    jg = binomial_edge_ideal(g)
    lhs = colon_by_poly(jg, f_ij(ring, i, j))
    gens = list(binomial_edge_ideal(build_Ge(g, (i, j))).generators)
    monos = set()
    for path in simple_paths_between(g, i, j):
        monos.update(path_monomials(ring, path))
    gens += [MultiPoly.monomial(ring, m) for m in sorted(monos, reverse=True)]
    return ideal_equal(lhs, IdealHandle(ring, gens))


def split_monomials(ring: RingSpec, members: Iterable[frozenset[int]]) -> list[int]:
    """g_{C,D} over every split of every given vertex set."""
    out = set()
    for b in members:
        verts = sorted(b)
        for choice in product((0, 1), repeat=len(verts)):
            out.add(sum(ring.y(v) if c else ring.x(v) for v, c in zip(verts, choice)))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class ColonFormulaResult:
    equal: bool
    groebner_union: bool

    def __bool__(self) -> bool:
        return self.equal and self.groebner_union


def colon_formula_check(g: Graph) -> ColonFormulaResult:
    """(J_G : J_{K_n}) by iterated colons versus J_G + (g_{C,D}).

    Also checks that the reduced basis of J_G together with the g_{C,D}
    is already a Groebner basis.
    """
    if not g.is_connected():
        raise DomainError(f"{g} is disconnected")
    if g.is_complete():
        raise DomainError("the colon formula needs a non-complete graph")
    ring = RingSpec(g.n)
    jg = binomial_edge_ideal(g)
    lhs: IdealHandle | None = None
    for i, j in g.non_edges():
        part = colon_by_poly(jg, f_ij(ring, i, j))
        lhs = part if lhs is None else ideal_intersection(lhs, part)
    assert lhs is not None
    monos = [MultiPoly.monomial(ring, m) for m in split_monomials(ring, dc_minimal_members(g))]
    rhs = IdealHandle(ring, list(jg.generators) + monos)
    union = list(jg.gb) + monos
    return ColonFormulaResult(ideal_equal(lhs, rhs), is_groebner(union))


def decomposition_check(g: Graph) -> bool:
    """J_G equals the intersection of its minimal primes."""
    jg = binomial_edge_ideal(g)
    meet: IdealHandle | None = None
    for p in minimal_primes(g):
        meet = p.ideal if meet is None else ideal_intersection(meet, p.ideal)
    assert meet is not None
    if jg.is_zero():
        return meet.is_zero()
    return ideal_equal(jg, meet)


# -- closed graphs ------------------------------------------------------------------


@dataclass(frozen=True)
class ChainResult:
    v: int
    theta: int
    v_init: int
    ell: int
    passed: bool
    theta_chained: int
    passed_chained: bool

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.theta, self.v_init, self.ell)


def chain_check_closed(g: Graph) -> ChainResult:
    """Evaluate v < theta <= v_init <= ell on a connected closed graph.

    K_n is checked as 0 = v < v_init = theta = ell = 1.  The same chain is
    also evaluated with the chained clique cover number in place of theta.
    """
    if not g.is_connected():
        raise DomainError(f"{g} is disconnected")
    if not is_closed_labeling(g).closed:
        raise DomainError(f"{g} is not closed under its labeling")
    v = v_number(g).v
    theta, _ = theta_clique_cover(g)
    ell = longest_induced_path(g)
    chained = chained_clique_cover_number(g)
    if g.n == 1:
        return ChainResult(0, 1, 0, 0, True, 1, True)
    h = initial_graph(g)
    init_value = v_init(g)
    if init_value != v_edge_ideal_both_routes(h):
        raise TheoremViolation(f"{g}: v_init disagrees with the edge ideal of H_G")
    if g.is_complete():
        passed = v == 0 and theta == init_value == ell == 1
        passed_chained = passed and chained == 1
    else:
        passed = v < theta <= init_value <= ell
        passed_chained = v < chained <= init_value <= ell
    return ChainResult(v, theta, init_value, ell, passed, chained, passed_chained)
