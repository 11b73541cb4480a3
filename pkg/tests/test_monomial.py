import pytest

from bei_lab.bei import initial_ideal
from bei_lab.corpus import CLOSED_6, TREE_10, connected_classes
from bei_lab.errors import DomainError
from bei_lab.graph import build_graph, cycle_graph, path_graph
from bei_lab.monomial import (
    SquarefreeMonomialIdeal,
    colon_by_variable,
    intersect,
    v_edge_ideal_both_routes,
    v_local_monomial,
    v_monomial,
)
from bei_lab.polyring import MultiPoly, RingSpec, alpha_quotient, colon_by_ideal, ideal
from bei_lab.structure import Clutter, initial_graph

from oracles import edge_ideal_v_stable_sets, minimal_vertex_covers


def monomial_ideal(ground, sets):
    return SquarefreeMonomialIdeal(Clutter.from_sets(ground, sets))


def test_colon_and_intersection_arithmetic():
    # (t1 t2, t2 t3) : t2 = (t1, t3)
    assert sorted(colon_by_variable([0b011, 0b110], 2)) == [0b001, 0b100]
    # (t1) cap (t2) = (t1 t2); (t1) cap (t1 t2) = (t1 t2)
    assert intersect([0b01], [0b10]) == [0b11]
    assert intersect([0b01], [0b11]) == [0b11]


def test_single_edge():
    assert v_monomial(monomial_ideal(2, [{1, 2}])) == 1
    assert v_edge_ideal_both_routes(path_graph(2)) == 1


def test_zero_ideal_is_rejected():
    with pytest.raises(DomainError):
        v_monomial(SquarefreeMonomialIdeal(Clutter(3, ())))
    with pytest.raises(DomainError):
        v_edge_ideal_both_routes(build_graph(3, []))


def test_initial_ideal_values():
    assert v_monomial(initial_ideal(cycle_graph(6)).as_monomial_ideal()) == 4
    assert v_monomial(initial_ideal(TREE_10).as_monomial_ideal()) == 6


def test_c5_edge_ideal(derived):
    assert v_edge_ideal_both_routes(cycle_graph(5)) == derived["c5_edge_ideal_v"] == 2


def test_initial_graph_of_closed_example(derived):
    assert v_edge_ideal_both_routes(initial_graph(CLOSED_6)) == derived["closed6_initial_graph_v"]


def test_minimal_primes_are_vertex_covers(derived):
    ideal_c5 = SquarefreeMonomialIdeal.of_graph(cycle_graph(5))
    covers = sorted(sorted(c) for c in ideal_c5.minimal_primes())
    assert covers == sorted(derived["c5_minimal_covers"])
    for cover in ideal_c5.minimal_primes():
        mask = sum(1 << (v - 1) for v in cover)
        assert all(g & mask for g in ideal_c5.generators)


def test_non_prime_ideals_have_positive_v():
    for g in connected_classes(5):
        i = SquarefreeMonomialIdeal.of_graph(g)
        assert v_monomial(i) >= 1


def test_v_local_monomial_rejects_non_covers():
    i = SquarefreeMonomialIdeal.of_graph(path_graph(3))
    with pytest.raises(DomainError):
        v_local_monomial(i, {1, 2, 3})


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_routes_agree_with_independent_oracle(n):
    for g in connected_classes(n):
        assert v_edge_ideal_both_routes(g) == edge_ideal_v_stable_sets(g.n, g.edges), g


@pytest.mark.parametrize("n", [3, 4, 5])
def test_covers_match_oracle(n):
    for g in connected_classes(n):
        ours = sorted(sorted(c) for c in SquarefreeMonomialIdeal.of_graph(g).minimal_primes())
        assert ours == sorted(minimal_vertex_covers(g.n, g.edges))


def test_agrees_with_groebner_route_on_monomial_inputs():
    # edge ideal of the path 1-2-3-4 with t_k read as x_k
    ring = RingSpec(4)
    x = [None] + [MultiPoly.x(ring, k) for k in range(1, 5)]
    i_poly = ideal(ring, [x[1] * x[2], x[2] * x[3], x[3] * x[4]])
    mono = SquarefreeMonomialIdeal.of_graph(path_graph(4))
    for cover in mono.minimal_primes():
        p = ideal(ring, [x[k] for k in sorted(cover)])
        assert v_local_monomial(mono, cover) == alpha_quotient(colon_by_ideal(i_poly, p), i_poly)


def test_render():
    i = monomial_ideal(3, [{1, 3}])
    assert i.render(0b101) == "t1*t3" and i.render(0) == "1"
