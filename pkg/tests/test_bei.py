import pytest

from bei_lab.bei import (
    binomial_edge_ideal,
    build_Ge,
    chain_check_closed,
    colon_formula_check,
    colon_single_edge_check,
    decomposition_check,
    initial_ideal,
    minimal_primes,
    multipartite_decomposition,
    path_monomials,
    prime_PS,
    split_monomials,
    v_init,
    v_local,
    v_local_at_Kn,
    v_local_witness,
    v_multipartite,
    v_number,
)
from bei_lab.corpus import CLOSED_6, CLOSED_8, NON_CLOSED_6, TREE_10
from bei_lab.errors import DomainError
from bei_lab.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph
from bei_lab.polyring import RingSpec, colon_by_poly, f_ij, ideal_equal, is_groebner

from oracles import sympy_natural_generators_are_gb

P3 = path_graph(3)
C4 = cycle_graph(4)
C5 = cycle_graph(5)


def test_binomial_edge_ideal_generators():
    jg = binomial_edge_ideal(P3)
    ring = jg.ring
    assert list(jg.generators) == [f_ij(ring, 1, 2), f_ij(ring, 2, 3)]
    assert binomial_edge_ideal(build_graph(3, [])).is_zero()


def test_prime_PS():
    p = prime_PS(P3, [2])
    assert p.minimal and p.height == 2 and str(p) == "P_{2}"
    assert p.as_dict() == {"S": [2], "components": [[1], [3]]}
    assert not prime_PS(P3, [1]).minimal
    with pytest.raises(DomainError):
        prime_PS(P3, [4])


def test_minimal_primes_examples():
    assert [p.s for p in minimal_primes(P3)] == [frozenset(), frozenset({2})]
    c5 = minimal_primes(C5)
    assert c5[0].s == frozenset()
    rest = {tuple(sorted(p.s)) for p in c5[1:]}
    assert rest == {(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)}
    assert [p.s for p in minimal_primes(complete_graph(4))] == [frozenset()]


def test_minimal_primes_of_a_disconnected_graph_multiply():
    g = build_graph(6, [(1, 2), (2, 3), (4, 5), (5, 6)])
    assert len(minimal_primes(g)) == 4


@pytest.mark.parametrize("g", [P3, C4, C5, star_graph(3), complete_graph(3), NON_CLOSED_6])
def test_decomposition(g):
    assert decomposition_check(g)


# -- local v-numbers ----------------------------------------------------------------


def test_v_local_examples():
    assert v_local(complete_graph(4), prime_PS(complete_graph(4), ())) == 0
    assert v_local(P3, prime_PS(P3, [2])) == 2
    assert v_local(P3, prime_PS(P3, [2]), mode="both") == 2
    c6 = cycle_graph(6)
    assert v_local(c6, prime_PS(c6, ())) == 4


def test_v_local_rejects_non_minimal_primes_and_bad_modes():
    with pytest.raises(DomainError):
        v_local(P3, prime_PS(P3, [1]))
    with pytest.raises(DomainError):
        v_local(P3, prime_PS(P3, [2]), mode="fast")


def test_v_local_witness_is_a_witness():
    p = prime_PS(P3, [2])
    f = v_local_witness(P3, p)
    jg = binomial_edge_ideal(P3)
    assert f.total_degree() == 2 and not jg.contains(f)
    assert all(jg.contains(f * q) for q in p.ideal.generators)


def test_v_local_at_Kn():
    assert v_local_at_Kn(TREE_10) == 6
    assert v_local_at_Kn(CLOSED_8) == 4
    assert v_local_at_Kn(complete_graph(5)) == 0
    assert v_local_at_Kn(C5, mode="both") == 3
    with pytest.raises(DomainError):
        v_local_at_Kn(build_graph(4, [(1, 2), (3, 4)]))


def test_v_number_values():
    assert v_number(cycle_graph(6)).v == 4
    report = v_number(CLOSED_8)
    assert report.v == 3 and report.v_at_Kn == 4
    assert v_number(C5).v == 3
    assert v_number(C5, shortcut=False, mode="colon").v == 3
    assert v_number(complete_graph(3)).v == 0


def test_v_number_non_closed6_achieving_prime():
    report = v_number(NON_CLOSED_6)
    assert report.v == 2
    assert report.achieving_prime.minimal
    assert v_local(NON_CLOSED_6, report.achieving_prime) == 2


def test_v_number_of_a_union_adds():
    g = build_graph(7, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7)])
    report = v_number(g)
    assert report.v == v_number(C4).v + v_number(P3).v == 3
    assert report.v_at_Kn is None
    assert v_number(g, split=False).v == 3


def test_v_number_of_edgeless_graph_is_zero():
    assert v_number(build_graph(3, [])).v == 0


# -- complete multipartite graphs ---------------------------------------------------


def test_v_multipartite_examples():
    assert v_multipartite([1, 1, 1]) == 0
    assert v_multipartite([1, 3]) == 1
    assert v_multipartite([2, 2]) == 2
    assert v_multipartite([2, 3, 1]) == 1
    for bad in ([3], [0, 2]):
        with pytest.raises(DomainError):
            v_multipartite(bad)


def test_multipartite_decomposition_sorts_parts():
    g, primes = multipartite_decomposition([3, 1])
    assert g.n == 4 and g.has_edge(1, 2) and not g.has_edge(2, 3)
    assert len(primes) == 2


# -- initial ideal --------------------------------------------------------------------


def test_initial_ideal_of_a_closed_graph_is_the_natural_leading_terms():
    ring = RingSpec(3)
    init = initial_ideal(P3)
    assert set(init.monomials) == {ring.x(1) + ring.y(2), ring.x(2) + ring.y(3)}
    assert sorted(map(sorted, init.clutter.edges)) == [[1, 5], [2, 6]]


def test_v_init_values():
    assert v_init(cycle_graph(6)) == 4
    assert v_init(complete_graph(5)) == 1
    assert v_init(CLOSED_8) == 5
    with pytest.raises(DomainError):
        v_init(build_graph(2, []))


# -- colon formulas ------------------------------------------------------------------


def test_build_Ge():
    ge = build_Ge(P3, (1, 3))
    assert ge.edges == P3.edges
    ge = build_Ge(C4, (1, 3))
    assert ge.has_edge(2, 4)
    with pytest.raises(DomainError):
        build_Ge(P3, (1, 2))


def test_path_monomials():
    ring = RingSpec(4)
    monos = path_monomials(ring, [1, 2, 3, 4])
    assert monos == [ring.x(2) + ring.x(3), ring.y(2) + ring.x(3), ring.y(2) + ring.y(3)]


def test_split_monomials():
    ring = RingSpec(2)
    assert len(split_monomials(ring, [frozenset({1, 2})])) == 4


@pytest.mark.parametrize("g,e", [(P3, (1, 3)), (C4, (1, 3)), (C4, (2, 4)), (C5, (1, 3))])
def test_colon_single_edge(g, e):
    assert colon_single_edge_check(g, e)


@pytest.mark.parametrize("g", [P3, C4, C5, star_graph(3)])
def test_colon_formula(g):
    result = colon_formula_check(g)
    assert result.equal and result.groebner_union and result


def test_colon_formula_refuses_complete_and_disconnected():
    with pytest.raises(DomainError):
        colon_formula_check(complete_graph(3))
    with pytest.raises(DomainError):
        colon_formula_check(build_graph(3, [(1, 2)]))


def test_single_edge_colon_matches_p3_prime():
    ring = RingSpec(3)
    col = colon_by_poly(binomial_edge_ideal(P3), f_ij(ring, 1, 3))
    assert ideal_equal(col, prime_PS(P3, [2]).ideal)


# -- closedness and the chain on closed graphs ----------------------------------------


@pytest.mark.parametrize("g", [P3, C4, CLOSED_6, star_graph(3)])
def test_closedness_agrees_with_sympy_criterion(g):
    natural = list(binomial_edge_ideal(g).generators)
    assert is_groebner(natural) == sympy_natural_generators_are_gb(g.n, g.edges)


def test_chain_on_complete_graph():
    result = chain_check_closed(complete_graph(4))
    assert result.as_tuple() == (0, 1, 1, 1) and result.passed


def test_chain_with_chained_cover_on_closed_examples(derived):
    for g, ell in ((CLOSED_6, derived["closed6_ell"]), (CLOSED_8, derived["closed8_ell"])):
        result = chain_check_closed(g)
        assert result.ell == ell
        assert result.passed_chained


def test_chain_refuses_non_closed():
    with pytest.raises(DomainError):
        chain_check_closed(C4)
