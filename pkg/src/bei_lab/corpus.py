"""Named example graphs, the 5-vertex catalog and graph enumerators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import Graph, build_graph, cycle_graph


def _g(n: int, pairs: str) -> Graph:
    """Edges written as digit pairs, e.g. "12 23"; "9-10" for two-digit labels."""
    edges = []
    for token in pairs.split():
        u, v = token.split("-") if "-" in token else (token[0], token[1:])
        edges.append((int(u), int(v)))
    return build_graph(n, edges)


TREE_10 = _g(10, "12 23 34 45 56 78 47 49 9-10")
CLOSED_8 = _g(8, "12 13 23 24 34 45 56 57 67 68 78")
CLOSED_6 = _g(6, "12 23 34 45 56 13 46")
NON_CLOSED_6 = _g(6, "12 23 34 45 15 26 56")


@dataclass(frozen=True)
class Expectation:
    """Reference values for one named graph; None means "not asserted"."""

    name: str
    graph: Graph
    v: int | None = None
    v_at_Kn: int | None = None
    v_init: int | None = None
    gamma_c: int | None = None
    theta: int | None = None
    ell: int | None = None
    lf_max: int | None = None


EXAMPLES: tuple[Expectation, ...] = (
    Expectation("C6", cycle_graph(6), v=4, v_at_Kn=4, v_init=4, gamma_c=4),
    Expectation("C7", cycle_graph(7), v=5, v_at_Kn=5, v_init=5, gamma_c=5),
    Expectation("closed-8", CLOSED_8, v=3, v_at_Kn=4, v_init=5, theta=5, ell=5),
    Expectation("non-closed-6", NON_CLOSED_6, v=2, v_at_Kn=2, v_init=2),
    Expectation("tree-10", TREE_10, v=3, v_at_Kn=6, v_init=6, gamma_c=6, theta=5, ell=5, lf_max=4),
)


@dataclass(frozen=True)
class TableEntry:
    index: int
    graph: Graph
    v: int
    v_init: int
    reg: int
    best_effort: bool = False


# (v, v_init, reg) and the drawn labeling, in reading order of the table.
_TABLE_ROWS: tuple[tuple[tuple[int, int, int], str], ...] = (
    ((0, 1, 1), "12 13 14 15 23 24 25 34 35 45"),
    ((3, 3, 3), "12 15 23 34 45"),
    ((1, 1, 2), "12 13 14 15 23 25 34 45"),
    ((2, 2, 2), "13 15 23 25 34 45"),
    ((1, 1, 2), "12 15 23 24 25 35 45"),
    ((1, 2, 2), "12 13 14 23 24 25 34 35 45"),
    ((1, 1, 2), "12 13 14 15"),
    ((1, 2, 2), "12 23 24 25 34 35 45"),
    ((1, 2, 2), "12 13 23 24 25 34 35 45"),
    ((2, 2, 3), "12 13 15 45"),
    ((1, 2, 2), "12 13 23 34 35 45"),
    # two vertices carry the label 4 in the drawing; one reading is stored
    ((1, 2, 3), "13 12 34 35 23 45 25"),
    ((1, 1, 2), "15 25 34 35 45"),
    ((2, 3, 3), "13 24 34 35 45"),
    ((2, 3, 3), "12 13 23 24 34 45"),
    ((1, 1, 2), "15 23 25 34 35 45"),
    ((2, 4, 4), "12 23 34 45"),
    ((2, 3, 3), "12 23 34 35 45"),
    ((2, 2, 2), "12 13 15 23 25 34 45"),
    ((2, 2, 3), "12 13 23 24 35 45"),
    ((2, 2, 3), "13 23 25 34 45"),
)
AMBIGUOUS_ROW = 11


def table_five() -> list[TableEntry]:
    return [
        TableEntry(k, _g(5, edges), *triple, best_effort=(k == AMBIGUOUS_ROW))
        for k, (triple, edges) in enumerate(_TABLE_ROWS)
    ]


# -- enumeration ------------------------------------------------------------------


def _from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: k for k, v in enumerate(nodes, start=1)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on n <= 7 vertices."""
    if not 1 <= n <= 7:
        raise ValueError("the graph atlas covers 1 to 7 vertices")
    return tuple(
        _from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)
    )


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on the labeled vertex set 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        g = build_graph(n, [pairs[k] for k in range(len(pairs)) if bits >> k & 1])
        if g.is_connected():
            yield g


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        g = build_graph(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            return g


def random_connected_graphs(n: int, count: int, seed: int, exclude_complete: bool = False) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_connected_graph(n, rng)
        if exclude_complete and g.is_complete():
            continue
        out.append(g)
    return out


def multipartite_compositions(max_vertices: int) -> Iterator[list[int]]:
    """Part-size lists (ascending, at least 2 parts) with total at most max_vertices."""

    def grow(prefix: list[int], remaining: int) -> Iterator[list[int]]:
        if len(prefix) >= 2:
            yield list(prefix)
        low = prefix[-1] if prefix else 1
        for size in range(low, remaining + 1):
            yield from grow(prefix + [size], remaining - size)

    yield from grow([], max_vertices)
