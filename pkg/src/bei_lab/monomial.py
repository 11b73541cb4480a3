"""v-numbers of squarefree monomial ideals by pure bit-mask arithmetic.

A squarefree monomial is the mask of its variables (bit ``k - 1`` for
variable ``k``), so divisibility is ``a & b == a`` and lcm is ``a | b``.
No Groebner machinery is involved, which makes this module an
independent oracle for polyring on monomial inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, TheoremViolation
from .graph import Graph, component_masks, from_mask, popcount, to_mask
from .structure import Clutter, _minimal_covers_masks, v_edge_ideal_combinatorial


def _minimalize(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: (popcount(m), m)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _divisible(m: int, gens: Sequence[int]) -> bool:
    return any(g & m == g for g in gens)


def colon_by_variable(gens: Sequence[int], var: int) -> list[int]:
    """Minimal generators of (I : t_var)."""
    bit = 1 << (var - 1)
    return _minimalize(g & ~bit for g in gens)


def intersect(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Minimal generators of the intersection, from pairwise lcms."""
    return _minimalize(x | y for x in a for y in b)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    clutter: Clutter
    ground_names: tuple[str, ...] = ()

    @property
    def generators(self) -> tuple[int, ...]:
        return self.clutter.masks

    @classmethod
    def of_graph(cls, g: Graph) -> SquarefreeMonomialIdeal:
        """The edge ideal I(g), ignoring isolated vertices."""
        return cls(Clutter.of_graph(g), tuple(f"t{v}" for v in g.vertices))

    def contains(self, mask: int) -> bool:
        return _divisible(mask, self.generators)

    def minimal_primes(self) -> list[frozenset[int]]:
        """Minimal vertex covers of the clutter, i.e. the associated primes."""
        return [from_mask(m) for m in _minimal_covers_masks(self.clutter.ground, self.generators)]

    def colon_by_prime(self, cover: Iterable[int]) -> list[int]:
        """Minimal generators of (I : (t_w : w in cover))."""
        result: list[int] | None = None
        for w in sorted(cover):
            part = colon_by_variable(self.generators, w)
            result = part if result is None else intersect(result, part)
        return result if result is not None else [0]

    def render(self, mask: int) -> str:
        names = self.ground_names or tuple(f"t{k}" for k in range(1, self.clutter.ground + 1))
        return "*".join(names[v - 1] for v in sorted(from_mask(mask))) or "1"


def v_local_monomial(ideal: SquarefreeMonomialIdeal, cover: Iterable[int]) -> int:
    """alpha((I : p)/I) for the prime p of a minimal vertex cover."""
    gens = ideal.generators
    degrees = [popcount(m) for m in ideal.colon_by_prime(cover) if not _divisible(m, gens)]
    if not degrees:
        raise DomainError("the cover does not give an associated prime")
    return min(degrees)


def v_monomial(ideal: SquarefreeMonomialIdeal) -> int:
    if not ideal.generators:
        raise DomainError("the zero ideal has no associated primes")
    return min(v_local_monomial(ideal, w) for w in ideal.minimal_primes())


def v_edge_ideal_both_routes(h: Graph) -> int:
    """v(I(h)) by the algebraic route, checked against the stable-set route.

    The stable-set route is compared only when the edges of ``h`` form a
    single connected piece.
    """
    if not h.edges:
        raise DomainError("the edge ideal of an edgeless graph is zero")
    algebraic = v_monomial(SquarefreeMonomialIdeal.of_graph(h))
    support = to_mask(v for v in h.vertices if h.adj[v - 1])
    if len(component_masks(h.adj, support)) == 1:
        combinatorial = v_edge_ideal_combinatorial(h)
        if combinatorial != algebraic:
            raise TheoremViolation(
                f"{h}: stable-set route gives {combinatorial}, algebraic route {algebraic}"
            )
    return algebraic
