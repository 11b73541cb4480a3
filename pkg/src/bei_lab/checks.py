"""Named verification suites shared by ``bei-lab verify`` and the test suite.

Each suite runs one predicate over a generated corpus and reports the
first counterexample.  Predicates are module-level so they can be sent
to worker processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import corpus
from .bei import (
    binomial_edge_ideal,
    colon_formula_check,
    colon_single_edge_check,
    decomposition_check,
    minimal_primes,
    multipartite_decomposition,
    v_local,
    v_multipartite,
    v_number,
)
from .domination import dc_min, gamma_c
from .errors import BeiLabError
from .graph import Graph, disjoint_union, is_connected_mask, to_mask
from .monomial import v_edge_ideal_both_routes
from .polyring import RingSpec, f_ij, ideal_equal, ideal_intersection, is_groebner
from .structure import (
    find_closed_labeling,
    induced_matching_number,
    initial_graph,
    is_closed_labeling,
    longest_induced_path,
)


def thread_cap() -> int:
    raw = os.environ.get("BEI_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        cap = os.cpu_count() or 1
    return max(1, cap)


def parallel_map(fn: Callable, items: Sequence, workers: int | None = None) -> list:
    """Order-preserving map, spread over processes when allowed."""
    workers = min(workers or thread_cap(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status} {self.name} ({self.cases} cases){tail}"


def _run(name: str, predicate: Callable, items: Sequence) -> CheckResult:
    outcomes = parallel_map(predicate, items)
    for item, outcome in zip(items, outcomes):
        if outcome is not True:
            detail = f"{item}" if outcome is False else f"{item}: {outcome}"
            return CheckResult(name, False, len(items), detail)
    return CheckResult(name, True, len(items))


class _guard:
    """Turn engine errors into failure messages; picklable for worker processes."""

    def __init__(self, fn: Callable[[Graph], bool | str]):
        self.fn = fn

    def __call__(self, g: Graph) -> bool | str:
        try:
            return self.fn(g)
        except BeiLabError as exc:
            return str(exc)


# -- independent oracles -------------------------------------------------------------


def brute_gamma_c(g: Graph) -> int:
    """Smallest nonempty connected dominating set by plain subset enumeration."""
    for k in range(1, g.n + 1):
        for combo in combinations(g.vertices, k):
            mask = to_mask(combo)
            closed = mask
            for v in combo:
                closed |= g.adj[v - 1]
            if closed == g.full_mask and is_connected_mask(g.adj, mask):
                return k
    raise AssertionError("unreachable for connected graphs")


def brute_max_leaves(g: Graph) -> int:
    """Most leaves over all spanning trees, by enumerating (n-1)-edge subsets."""
    best = 0
    for tree in combinations(g.edges, g.n - 1):
        adj = [0] * g.n
        deg = [0] * (g.n + 1)
        for u, v in tree:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
            deg[u] += 1
            deg[v] += 1
        if is_connected_mask(adj, g.full_mask):
            best = max(best, sum(1 for d in deg[1:] if d == 1))
    return best


# -- predicates ----------------------------------------------------------------------


def main_theorem(g: Graph) -> bool | str:
    p_empty = minimal_primes(g)[0]
    algebraic = v_local(g, p_empty)
    combinatorial = dc_min(g)
    return True if algebraic == combinatorial else f"algebraic {algebraic}, dc_min {combinatorial}"


def colon_formulas(g: Graph) -> bool | str:
    for e in g.non_edges():
        if not colon_single_edge_check(g, e):
            return f"single-edge formula fails at {e}"
    result = colon_formula_check(g)
    if not result.equal:
        return "(J_G : J_Kn) differs from J_G + (g_CD)"
    if not result.groebner_union:
        return "basis of J_G plus g_CD is not a Groebner basis"
    return True


def decomposition(g: Graph) -> bool:
    return decomposition_check(g)


def closed_iff_quadratic(g: Graph) -> bool | str:
    ring = RingSpec(g.n)
    natural = [f_ij(ring, i, j) for i, j in g.edges]
    closed = is_closed_labeling(g).closed
    quadratic = is_groebner(natural)
    return True if closed == quadratic else f"closed={closed}, quadratic GB={quadratic}"


def duality(g: Graph) -> bool | str:
    res = gamma_c(g)
    leaves = brute_max_leaves(g)
    if res.gamma_c != brute_gamma_c(g):
        return f"gamma_c {res.gamma_c} disagrees with brute force"
    if res.lf_max != leaves:
        return f"constructed tree has {res.lf_max} leaves, best is {leaves}"
    if res.gamma_c != g.n - leaves:
        return f"gamma_c {res.gamma_c} but n - lf_max = {g.n - leaves}"
    return True


def additivity(pair: tuple[Graph, Graph]) -> bool | str:
    g1, g2 = pair
    union = disjoint_union(g1, g2)
    direct = v_number(union, split=False).v
    parts = v_number(g1).v + v_number(g2).v
    return True if direct == parts else f"direct {direct}, sum of parts {parts}"


def multipartite(parts: list[int]) -> bool | str:
    g, primes = multipartite_decomposition(parts)
    formula = v_multipartite(parts)
    algebraic = v_number(g, shortcut=False).v
    if formula != algebraic:
        return f"formula {formula}, algebraic {algebraic}"
    meet = primes[0]
    for p in primes[1:]:
        meet = ideal_intersection(meet, p)
    if not ideal_equal(meet, binomial_edge_ideal(g)):
        return "listed primes do not intersect to J_G"
    return True


def sweep_matches_colon(g: Graph) -> bool | str:
    for p in minimal_primes(g):
        swept = v_local(g, p, "linear")
        oracle = v_local(g, p, "colon")
        if swept != oracle:
            return f"{p}: sweep {swept}, colon {oracle}"
    return True


def v_bounded_by_dc_min(g: Graph) -> bool | str:
    v = v_number(g, shortcut=False).v
    bound = dc_min(g)
    return True if v <= bound else f"v {v} exceeds dc_min {bound}"


def edge_ideal_routes(g: Graph) -> bool | str:
    if not g.edges:
        return True
    v_edge_ideal_both_routes(g)
    return True


def closed_im_ell(g: Graph) -> bool | str:
    if not is_closed_labeling(g).closed:
        return True
    im = induced_matching_number(initial_graph(g))
    ell = longest_induced_path(g)
    return True if im == ell else f"im(H_G) {im}, ell {ell}"


# -- corpora ---------------------------------------------------------------------------


def labeled_upto(n: int, skip_complete: bool = False) -> list[Graph]:
    out = []
    for k in range(1, n + 1):
        out += [g for g in corpus.labeled_connected_graphs(k) if not (skip_complete and g.is_complete())]
    return out


def classes_upto(n: int, skip_complete: bool = False, min_n: int = 1) -> list[Graph]:
    out = []
    for k in range(min_n, n + 1):
        out += [g for g in corpus.connected_classes(k) if not (skip_complete and g.is_complete())]
    return out


def _random_unions(count: int, max_total: int, seed: int) -> list[tuple[Graph, Graph]]:
    import random

    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        a = rng.randint(1, max_total - 1)
        b = rng.randint(1, max_total - a)
        pairs.append((corpus.random_connected_graph(a, rng), corpus.random_connected_graph(b, rng)))
    return pairs


def closed_representatives(n: int) -> list[Graph]:
    """Each closable isomorphism class on n vertices, under a closed labeling."""
    out = []
    for g in corpus.connected_classes(n):
        cert = find_closed_labeling(g)
        if cert.closed:
            out.append(g.relabel(cert.permutation))
    return out


def run_check(name: str, n: int | None = None, seed: int = 0) -> CheckResult:
    """Run one named suite; ``n`` overrides the exhaustive size where meaningful."""
    if name == "main-theorem":
        top = n or 6
        items = labeled_upto(min(top, 5)) + classes_upto(top, min_n=6)
        items += corpus.random_connected_graphs(max(top, 6), 50, seed)
        return _run(name, _guard(main_theorem), items)
    if name == "colon-formula":
        top = n or 4
        items = labeled_upto(min(top, 4), skip_complete=True)
        items += classes_upto(top + 1, skip_complete=True, min_n=min(top, 4) + 1)
        items += corpus.random_connected_graphs(max(top + 1, 5), 25, seed, exclude_complete=True)
        items += corpus.random_connected_graphs(max(top + 2, 6), 50, seed, exclude_complete=True)
        return _run(name, _guard(colon_formulas), items)
    if name == "decomposition":
        return _run(name, _guard(decomposition), labeled_upto(n or 5))
    if name == "closed-quadratic-gb":
        return _run(name, _guard(closed_iff_quadratic), labeled_upto(n or 5))
    if name == "duality":
        return _run(name, _guard(duality), classes_upto(n or 7, min_n=3))
    if name == "additivity":
        return _run(name, additivity, _random_unions(30, n or 8, seed))
    if name == "multipartite":
        return _run(name, multipartite, list(corpus.multipartite_compositions(n or 6)))
    if name == "sweep-vs-colon":
        return _run(name, _guard(sweep_matches_colon), classes_upto(n or 5))
    if name == "v-below-dc-min":
        return _run(name, _guard(v_bounded_by_dc_min), classes_upto(n or 7))
    if name == "edge-ideal-routes":
        return _run(name, _guard(edge_ideal_routes), classes_upto(n or 7, min_n=2))
    if name == "closed-im-ell":
        top = n or 7
        items = labeled_upto(min(top, 6)) + [g for k in range(7, top + 1) for g in closed_representatives(k)]
        return _run(name, _guard(closed_im_ell), items)
    raise KeyError(name)


CHECKS = (
    "main-theorem",
    "colon-formula",
    "decomposition",
    "closed-quadratic-gb",
    "duality",
    "additivity",
    "multipartite",
    "sweep-vs-colon",
    "v-below-dc-min",
    "edge-ideal-routes",
    "closed-im-ell",
)


def run_all(names: Iterable[str] = CHECKS, n: int | None = None, seed: int = 0) -> list[CheckResult]:
    return [run_check(name, n, seed) for name in names]
