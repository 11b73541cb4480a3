"""Simple undirected graphs on vertices 1..n with bit-set adjacency.

Vertices are 1-indexed at every public boundary.  Internally vertex ``v``
is bit ``v - 1`` of a Python int, so vertex sets double as bit masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InputError, UnsupportedSizeError

MAX_VERTICES = 64

VertexSet = frozenset  # frozenset[int] of 1-indexed vertices


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the 1-indexed vertices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    def nbr_mask(self, v: int) -> int:
        return self.adj[v - 1]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v - 1]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v - 1])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in self.vertices
            for j in range(i + 1, self.n + 1)
            if not self.has_edge(i, j)
        ]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n > 0 and reach(self.adj, 1, self.full_mask) == self.full_mask

    def complement(self) -> Graph:
        return build_graph(self.n, self.non_edges())

    def relabel(self, perm: dict[int, int] | list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``.

        A list is read as ``perm[v - 1]``.
        """
        if isinstance(perm, list):
            perm = {v: perm[v - 1] for v in self.vertices}
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        return build_graph(self.n, list(self.edges) + list(extra))

    def __str__(self) -> str:
        body = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(n={self.n}: {body})"


def build_graph(n: int, edge_list: Iterable[Iterable[int]]) -> Graph:
    """Validate, normalize (u < v) and deduplicate an edge list."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"n = {n} exceeds the cap of {MAX_VERTICES} vertices")
    seen: set[tuple[int, int]] = set()
    adj = [0] * n
    for pair in edge_list:
        u, v = tuple(pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge {{{u},{v}}} has a vertex outside 1..{n}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            continue
        seen.add(e)
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(sorted(seen)), tuple(adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} centred at vertex 1."""
    return build_graph(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


def complete_multipartite(parts: list[int]) -> Graph:
    """Complete multipartite graph; part ``l`` gets consecutive labels."""
    blocks, start = [], 1
    for size in parts:
        blocks.append(range(start, start + size))
        start += size
    edges = [
        (u, v)
        for a in range(len(blocks))
        for b in range(a + 1, len(blocks))
        for u in blocks[a]
        for v in blocks[b]
    ]
    return build_graph(start - 1, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return build_graph(g.n + h.n, list(g.edges) + shifted)


# -- mask-level helpers shared by the search modules ------------------------


def reach(adj: tuple[int, ...] | list[int], start: int, within: int) -> int:
    """Mask of vertices reachable from ``start`` using only vertices in ``within``."""
    seen = 1 << (start - 1)
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v - 1]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(adj: tuple[int, ...] | list[int], within: int) -> list[int]:
    """Connected components of the subgraph induced on ``within``, by smallest member."""
    comps = []
    rest = within
    while rest:
        low = rest & -rest
        comp = reach(adj, low.bit_length(), within)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(adj: tuple[int, ...] | list[int], mask: int) -> bool:
    if not mask:
        return False
    low = mask & -mask
    return reach(adj, low.bit_length(), mask) == mask


# -- public graph queries ----------------------------------------------------


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [from_mask(c) for c in component_masks(g.adj, g.full_mask)]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph | None, dict[int, int]]:
    """Induced subgraph on ``s`` relabelled to 1..|s| in increasing order.

    Returns ``(None, {})`` for the empty set, since graphs need n >= 1.
    """
    members = sorted(set(s))
    relabel = {old: new for new, old in enumerate(members, start=1)}
    if not members:
        return None, relabel
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return build_graph(len(members), edges), relabel


def is_cut_point(g: Graph, v: int) -> bool:
    before = len(component_masks(g.adj, g.full_mask))
    after = len(component_masks(g.adj, g.full_mask & ~(1 << (v - 1))))
    return after > before


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    out = 0
    for v in s:
        out |= g.adj[v - 1]
    return from_mask(out)


def simple_paths_between(g: Graph, i: int, j: int) -> list[list[int]]:
    """All simple i-j paths, as full vertex sequences, in lexicographic order."""
    if i == j:
        raise InputError("path endpoints must differ")
    paths: list[list[int]] = []
    path = [i]

    def extend(v: int, on_path: int) -> None:
        for w in iter_bits(g.adj[v - 1] & ~on_path):
            path.append(w)
            if w == j:
                paths.append(list(path))
            else:
                extend(w, on_path | 1 << (w - 1))
            path.pop()

    extend(i, 1 << (i - 1))
    return paths


# -- text format -------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise InputError("empty graph file", line=1)
    lineno, header = rows[0]
    if len(header) != 2:
        raise InputError("header must be 'n m'", line=lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputError("header must contain two integers", line=lineno) from None
    if len(rows) - 1 != m:
        last = rows[-1][0]
        raise InputError(f"header announces {m} edges, found {len(rows) - 1}", line=last)
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise InputError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError("edge endpoints must be integers", line=lineno) from None
        if n >= 1 and not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"vertex out of range 1..{n}", line=lineno)
        if u == v:
            raise InputError(f"loop at vertex {u}", line=lineno)
        edges.append((u, v))
    return build_graph(n, edges)


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
