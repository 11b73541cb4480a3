"""Connected domination: exact gamma_c, the D_c(G) family and max-leaf trees."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError
from .graph import Graph, from_mask, is_connected_mask, iter_bits, reach, to_mask


@dataclass(frozen=True)
class DominationResult:
    gamma_c: int
    witness: frozenset[int]
    lf_max: int
    tree_witness: tuple[tuple[int, int], ...]


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DomainError(f"{g} is disconnected; connected domination is undefined")


def _closed_nbhd(g: Graph, mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= g.adj[v - 1]
    return out


def is_connected_dominating(g: Graph, b: Iterable[int]) -> bool:
    _require_connected(g)
    mask = to_mask(b)
    return bool(mask) and is_connected_mask(g.adj, mask) and _closed_nbhd(g, mask) == g.full_mask


def _dc_member_mask(g: Graph, mask: int, non_edges: list[tuple[int, int]]) -> bool:
    for i, j in non_edges:
        within = mask | 1 << (i - 1) | 1 << (j - 1)
        if not reach(g.adj, i, within) >> (j - 1) & 1:
            return False
    return True


def dc_membership(g: Graph, b: Iterable[int]) -> bool:
    """True iff every non-edge {i,j} is joined by a path with all inner vertices in ``b``."""
    _require_connected(g)
    return _dc_member_mask(g, to_mask(b), g.non_edges())


def connected_subsets(g: Graph, k: int) -> Iterator[int]:
    """Each connected vertex set of size ``k`` exactly once, as a mask (ESU enumeration)."""
    if k <= 0:
        return
    adj = g.adj

    def nbhd(mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= adj[v - 1]
        return out

    def extend(sub: int, ext: int, size: int, above: int) -> Iterator[int]:
        if size == k:
            yield sub
            return
        sub_nbhd = nbhd(sub) | sub
        while ext:
            w = ext & -ext
            ext ^= w
            exclusive = adj[w.bit_length() - 1] & ~sub_nbhd & above
            yield from extend(sub | w, ext | exclusive, size + 1, above)

    for v in g.vertices:
        above = g.full_mask & ~((1 << v) - 1)
        start = 1 << (v - 1)
        yield from extend(start, adj[v - 1] & above, 1, above)


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def minimum_cds_mask(g: Graph) -> int:
    """Lexicographically smallest minimum connected dominating set of a connected graph."""
    _require_connected(g)
    n = g.n
    if n == 1:
        return 1
    delta = g.max_degree()
    k = 1
    # a k-set dominates at most k * (delta + 1) vertices
    while k * (delta + 1) < n:
        k += 1
    full = g.full_mask
    while True:
        best = None
        for cand in connected_subsets(g, k):
            if _closed_nbhd(g, cand) == full:
                if best is None or _lex_key(cand) < _lex_key(best):
                    best = cand
        if best is not None:
            return best
        k += 1


def _spanning_tree_from_cds(g: Graph, b: int) -> list[tuple[int, int]]:
    root = (b & -b).bit_length()
    edges = []
    seen = 1 << (root - 1)
    queue = [root]
    while queue:
        u = queue.pop(0)
        for w in iter_bits(g.adj[u - 1] & b & ~seen):
            seen |= 1 << (w - 1)
            edges.append((u, w))
            queue.append(w)
    for v in g.vertices:
        if not b >> (v - 1) & 1:
            anchor = (g.adj[v - 1] & b & -(g.adj[v - 1] & b)).bit_length()
            edges.append((anchor, v))
    return sorted((min(e), max(e)) for e in edges)


def _leaf_count(n: int, edges: list[tuple[int, int]]) -> int:
    deg = [0] * (n + 1)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg[1:] if d == 1)


def gamma_c(g: Graph) -> DominationResult:
    """Exact connected domination number with a witness and a max-leaf spanning tree.

    Follows the convention gamma_c(K_n) = 1 (a dominating set is nonempty).
    """
    b = minimum_cds_mask(g)
    tree = _spanning_tree_from_cds(g, b) if g.n >= 2 else []
    return DominationResult(
        gamma_c=bin(b).count("1"),
        witness=from_mask(b),
        lf_max=_leaf_count(g.n, tree),
        tree_witness=tuple(tree),
    )


def max_leaf_spanning_tree(g: Graph) -> tuple[list[tuple[int, int]], int]:
    """A spanning tree with the most leaves, built around a minimum CDS.

    For n >= 3 the leaf count is n - gamma_c.  K_2 is its own tree and has 2 leaves.
    """
    if g.n < 2:
        raise DomainError("a spanning tree with leaves needs at least 2 vertices")
    res = gamma_c(g)
    if g.n >= 3:
        assert res.lf_max == g.n - res.gamma_c
    return list(res.tree_witness), res.lf_max


def dc_min(g: Graph) -> int:
    """Minimum |B| over D_c(G), searched directly through dc_membership.

    This is 0 exactly for complete graphs.
    """
    _require_connected(g)
    non_edges = g.non_edges()
    for k in range(g.n + 1):
        for combo in combinations(g.vertices, k):
            if _dc_member_mask(g, to_mask(combo), non_edges):
                return k
    raise AssertionError("the full vertex set always lies in D_c(G)")


def dc_minimal_members(g: Graph) -> list[frozenset[int]]:
    """Inclusion-minimal members of D_c(G), in order of size then lexicographically."""
    _require_connected(g)
    non_edges = g.non_edges()
    found: list[int] = []
    for k in range(g.n + 1):
        for combo in combinations(g.vertices, k):
            mask = to_mask(combo)
            if any(prev & mask == prev for prev in found):
                continue
            if _dc_member_mask(g, mask, non_edges):
                found.append(mask)
    return [from_mask(m) for m in found]
