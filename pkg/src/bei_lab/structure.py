"""Closed labelings and the combinatorial invariants theta, im and ell.

``ell`` is always an EDGE count: the longest induced path 1-3-4-6 has
length 3.  For closed graphs reg(S/J_G) = ell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import DomainError, UnsupportedSizeError
from .graph import Graph, build_graph, component_masks, from_mask, iter_bits, popcount, to_mask

MAX_LABELING_SEARCH = 10


@dataclass(frozen=True)
class Clutter:
    ground: int
    edges: tuple[frozenset[int], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        masks = tuple(to_mask(e) for e in self.edges)
        if any(not m for m in masks):
            raise DomainError("clutter edges must be nonempty")
        for a, b in combinations(masks, 2):
            if a & b == a or a & b == b:
                raise DomainError("clutter edges must be pairwise incomparable")
        object.__setattr__(self, "masks", masks)

    @classmethod
    def from_sets(cls, ground: int, sets: Iterable[Iterable[int]]) -> Clutter:
        """Build a clutter keeping only the inclusion-minimal sets."""
        masks = sorted({to_mask(s) for s in sets}, key=lambda m: (popcount(m), m))
        kept: list[int] = []
        for m in masks:
            if not any(k & m == k for k in kept):
                kept.append(m)
        return cls(ground, tuple(from_mask(m) for m in kept))

    @classmethod
    def of_graph(cls, g: Graph) -> Clutter:
        return cls(g.n, tuple(frozenset(e) for e in g.edges))


@dataclass(frozen=True)
class ClosednessCertificate:
    closed: bool
    violation: tuple[int, int, int] | None = None
    permutation: dict[int, int] | None = None


def is_closed_labeling(g: Graph) -> ClosednessCertificate:
    """Check the interval condition under the given labeling.

    Reports the lexicographically smallest violating triple i < j < k.
    """
    for i in g.vertices:
        for k in iter_bits(g.adj[i - 1] >> i << i):
            for j in range(i + 1, k):
                if not (g.has_edge(i, j) and g.has_edge(j, k)):
                    return ClosednessCertificate(False, violation=(i, j, k))
    return ClosednessCertificate(True)


def find_closed_labeling(g: Graph) -> ClosednessCertificate:
    """Search all labelings for one satisfying the interval condition.

    ``permutation`` maps each old vertex to its new label.
    """
    if g.n > MAX_LABELING_SEARCH:
        raise UnsupportedSizeError(
            f"closed-labeling search is capped at n = {MAX_LABELING_SEARCH}, got {g.n}"
        )
    connected = g.is_connected()
    order: list[int] = []

    def consistent(v: int) -> bool:
        p = len(order)
        earlier = [q for q in range(p) if g.has_edge(order[q], v)]
        if connected and p and p - 1 not in earlier:
            # in a connected closed graph consecutive labels are adjacent
            return False
        if not earlier:
            return True
        for q in range(earlier[0], p):
            u = order[q]
            if not g.has_edge(u, v):
                return False
            if any(not g.has_edge(u, order[r]) for r in range(q + 1, p)):
                return False
        return True

    def place(remaining: int) -> bool:
        if not remaining:
            return True
        for v in iter_bits(remaining):
            if consistent(v):
                order.append(v)
                if place(remaining & ~(1 << (v - 1))):
                    return True
                order.pop()
        return False

    if place(g.full_mask):
        perm = {v: pos for pos, v in enumerate(order, start=1)}
        assert is_closed_labeling(g.relabel(perm)).closed
        return ClosednessCertificate(True, permutation=perm)
    return ClosednessCertificate(False)


# -- clique cover --------------------------------------------------------------


def _greedy_clique(adj: tuple[int, ...], n: int) -> int:
    """Size of a clique found greedily from each start vertex (a lower bound)."""
    best = 0
    for start in range(1, n + 1):
        clique = 1 << (start - 1)
        cand = adj[start - 1]
        while cand:
            # pick the candidate with most neighbours among the candidates
            v = max(iter_bits(cand), key=lambda w: (popcount(adj[w - 1] & cand), -w))
            clique |= 1 << (v - 1)
            cand &= adj[v - 1]
        best = max(best, popcount(clique))
    return best


def _chromatic(h: Graph) -> tuple[int, list[int]]:
    """Exact chromatic number of ``h`` by DSATUR branch and bound."""
    n = h.n
    adj = h.adj
    colors = [0] * (n + 1)
    lower = _greedy_clique(adj, n)

    def pick(uncolored: int) -> int:
        best_key, best_v = None, 0
        for v in iter_bits(uncolored):
            sat = len({colors[w] for w in iter_bits(adj[v - 1]) if colors[w]})
            key = (sat, popcount(adj[v - 1] & uncolored), -v)
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        return best_v

    # greedy DSATUR for the initial upper bound
    uncolored = h.full_mask
    while uncolored:
        v = pick(uncolored)
        used = {colors[w] for w in iter_bits(adj[v - 1])}
        colors[v] = next(c for c in range(1, n + 2) if c not in used)
        uncolored &= ~(1 << (v - 1))
    best = max(colors[1:], default=0)
    best_colors = colors[:]
    if best == lower:
        return best, best_colors

    colors = [0] * (n + 1)

    def search(uncolored: int, used_count: int) -> bool:
        nonlocal best, best_colors
        if not uncolored:
            if used_count < best:
                best, best_colors = used_count, colors[:]
            return best == lower
        v = pick(uncolored)
        forbidden = {colors[w] for w in iter_bits(adj[v - 1])}
        for c in range(1, used_count + 2):
            if c >= best:
                break
            if c in forbidden:
                continue
            colors[v] = c
            if search(uncolored & ~(1 << (v - 1)), max(used_count, c)):
                return True
            colors[v] = 0
        return False

    search(h.full_mask, 0)
    return best, best_colors


def theta_clique_cover(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """Minimum clique cover of G, as a colouring of its complement."""
    k, colors = _chromatic(g.complement())
    classes = [frozenset(v for v in g.vertices if colors[v] == c) for c in range(1, k + 1)]
    classes.sort(key=lambda s: min(s))
    return k, classes


def chained_clique_cover_number(g: Graph) -> int:
    """Fewest interval cliques [a_i, b_i] covering a connected closed graph
    with a_i < a_(i+1) <= b_i < b_(i+1), i.e. consecutive cliques overlap.

    Greedy interval jumping is optimal here.  This is not theta: the two
    differ as soon as a minimum clique cover needs disjoint cliques.
    """
    if not g.is_connected():
        raise DomainError("chained clique covers need a connected graph")
    if not is_closed_labeling(g).closed:
        raise DomainError("chained clique covers need a closed labeling")
    if g.n == 1:
        return 1

    def reach_right(a: int) -> int:
        return max(a, g.adj[a - 1].bit_length())

    count, end = 1, reach_right(1)
    while end < g.n:
        end = max(reach_right(a) for a in range(1, end + 1))
        count += 1
    return count


def max_clique_size(g: Graph) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length()
            cand ^= low
            grow(size + 1, cand & g.adj[v - 1])

    grow(0, g.full_mask)
    return best


# -- induced matchings and induced paths --------------------------------------


def induced_matching_number(g: Graph) -> int:
    closed = [g.adj[v - 1] | 1 << (v - 1) for v in g.vertices]
    best = 0

    def search(avail: int, size: int) -> None:
        nonlocal best
        # only vertices with an available neighbour can still be matched
        live = 0
        for v in iter_bits(avail):
            if g.adj[v - 1] & avail:
                live |= 1 << (v - 1)
        best = max(best, size)
        if size + popcount(live) // 2 <= best or not live:
            return
        low = live & -live
        v = low.bit_length()
        for w in iter_bits(g.adj[v - 1] & live):
            search(live & ~closed[v - 1] & ~closed[w - 1], size + 1)
        search(live & ~low, size)

    search(g.full_mask, 0)
    return best


def longest_induced_path(g: Graph) -> int:
    """Edge length of a longest induced path."""
    best = 0

    def extend(last: int, length: int, on_path: int, blocked: int) -> None:
        nonlocal best
        best = max(best, length)
        # new vertices may touch the last vertex only
        for w in iter_bits(g.adj[last - 1] & ~on_path & ~blocked):
            extend(w, length + 1, on_path | 1 << (w - 1), blocked | g.adj[last - 1] | 1 << (last - 1))

    for v in g.vertices:
        extend(v, 0, 1 << (v - 1), 0)
    return best


# -- initial graph, vertex covers, stable sets ---------------------------------


def initial_graph(g: Graph) -> Graph:
    """Bipartite graph H_G on 2n vertices: x_i is i, y_j is n + j."""
    if not is_closed_labeling(g).closed:
        raise DomainError("the initial ideal is an edge ideal only under a closed labeling")
    return build_graph(2 * g.n, [(i, g.n + j) for i, j in g.edges])


def _minimal_covers_masks(ground: int, edge_masks: tuple[int, ...]) -> list[int]:
    found: set[int] = set()

    def is_minimal(cover: int) -> bool:
        for v in iter_bits(cover):
            bit = 1 << (v - 1)
            if not any(e & cover == bit for e in edge_masks):
                return False
        return True

    def branch(cover: int) -> None:
        for e in edge_masks:
            if not e & cover:
                for v in iter_bits(e):
                    branch(cover | 1 << (v - 1))
                return
        if is_minimal(cover):
            found.add(cover)

    if edge_masks:
        branch(0)
    return sorted(found, key=lambda m: (popcount(m), tuple(iter_bits(m))))


def minimal_vertex_covers(c: Clutter) -> list[frozenset[int]]:
    """All minimal vertex covers, ordered by size then lexicographically."""
    return [from_mask(m) for m in _minimal_covers_masks(c.ground, c.masks)]


def v_edge_ideal_combinatorial(g: Graph) -> int:
    """min |A| over stable sets A whose neighbourhood is a minimal vertex cover.

    Isolated vertices do not affect I(G) and are ignored.
    """
    if not g.edges:
        raise DomainError("the edge ideal of an edgeless graph is zero")
    edge_masks = tuple(to_mask(e) for e in g.edges)
    covers = set(_minimal_covers_masks(g.n, edge_masks))
    support = [v for v in g.vertices if g.adj[v - 1]]
    for k in range(1, len(support) + 1):
        for combo in combinations(support, k):
            a = to_mask(combo)
            if any(g.adj[v - 1] & a for v in combo):
                continue
            nbhd = 0
            for v in combo:
                nbhd |= g.adj[v - 1]
            if nbhd in covers:
                return k
    raise AssertionError("a maximal stable set always qualifies")


def reg_closed(g: Graph) -> int:
    """reg(S/J_G) of a connected closed graph, i.e. ell."""
    if not g.is_connected():
        raise DomainError("reg_closed needs a connected graph")
    if not is_closed_labeling(g).closed:
        raise DomainError("reg_closed needs a closed labeling")
    return longest_induced_path(g)


def components_of(g: Graph) -> list[int]:
    return component_masks(g.adj, g.full_mask)
