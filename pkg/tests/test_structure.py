import pytest

from bei_lab.corpus import CLOSED_6, CLOSED_8, TREE_10, connected_classes
from bei_lab.errors import DomainError, UnsupportedSizeError
from bei_lab.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph
from bei_lab.structure import (
    Clutter,
    chained_clique_cover_number,
    find_closed_labeling,
    induced_matching_number,
    initial_graph,
    is_closed_labeling,
    longest_induced_path,
    max_clique_size,
    minimal_vertex_covers,
    reg_closed,
    theta_clique_cover,
    v_edge_ideal_combinatorial,
)


def test_closed_labelings():
    assert is_closed_labeling(CLOSED_6).closed
    cert = is_closed_labeling(cycle_graph(4))
    assert not cert.closed and cert.violation == (1, 2, 4)
    assert is_closed_labeling(complete_graph(6)).closed


def test_find_closed_labeling(derived):
    p4 = build_graph(4, [(1, 3), (3, 2), (2, 4)])
    cert = find_closed_labeling(p4)
    assert cert.closed and is_closed_labeling(p4.relabel(cert.permutation)).closed
    assert find_closed_labeling(cycle_graph(4)).closed is derived["c4_has_closed_labeling"]
    assert find_closed_labeling(star_graph(3)).closed is derived["claw_has_closed_labeling"]
    with pytest.raises(UnsupportedSizeError):
        find_closed_labeling(path_graph(11))


def test_closed_labeling_min_degree_vertex_need_not_be_an_end():
    # two K4's joined through a path; vertex 5 has least degree but sits in the middle
    edges = [(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
    edges += [(4, 5), (5, 6)] + [(a, b) for a in range(6, 10) for b in range(a + 1, 10)]
    g = build_graph(9, edges)
    assert is_closed_labeling(g).closed
    shuffled = g.relabel([5, 1, 2, 3, 4, 6, 7, 8, 9])
    assert find_closed_labeling(shuffled).closed


def test_closable_matches_oracle(derived):
    for row in derived["connected_classes"]:
        g = build_graph(row["n"], row["edges"])
        assert find_closed_labeling(g).closed is row["closable"], g


def test_theta(derived):
    assert theta_clique_cover(complete_graph(5))[0] == 1
    assert theta_clique_cover(TREE_10)[0] == derived["tree_theta"] == 5
    k, cover = theta_clique_cover(CLOSED_8)
    assert k == derived["closed8_theta"]
    assert set().union(*cover) == set(CLOSED_8.vertices)
    for clique in cover:
        assert all(CLOSED_8.has_edge(a, b) for a in clique for b in clique if a < b)


def test_theta_against_oracle(derived):
    for row in derived["connected_classes"]:
        g = build_graph(row["n"], row["edges"])
        theta = theta_clique_cover(g)[0]
        assert theta == row["theta"], g
        assert theta * max_clique_size(g) >= g.n


def test_chained_cover():
    assert chained_clique_cover_number(CLOSED_8) == 5
    assert chained_clique_cover_number(CLOSED_6) == 3
    assert chained_clique_cover_number(complete_graph(4)) == 1
    with pytest.raises(DomainError):
        chained_clique_cover_number(cycle_graph(4))


def test_induced_matching(derived):
    assert induced_matching_number(path_graph(2)) == 1
    assert induced_matching_number(initial_graph(CLOSED_6)) == derived["closed6_initial_graph_im"] == 3
    assert induced_matching_number(cycle_graph(6)) == derived["c6_induced_matching"]
    for row in derived["connected_classes"]:
        g = build_graph(row["n"], row["edges"])
        assert induced_matching_number(g) == row["im"], g


def test_longest_induced_path(derived):
    assert longest_induced_path(path_graph(4)) == 3
    assert longest_induced_path(CLOSED_6) == derived["closed6_ell"] == 3
    assert longest_induced_path(TREE_10) == 5
    for row in derived["connected_classes"]:
        g = build_graph(row["n"], row["edges"])
        assert longest_induced_path(g) == row["ell"], g


def test_initial_graph():
    h = initial_graph(CLOSED_6)
    assert h.n == 12 and h.m == 7
    assert initial_graph(complete_graph(2)).edges == ((1, 4),)
    assert initial_graph(path_graph(3)).edges == ((1, 5), (2, 6))
    with pytest.raises(DomainError):
        initial_graph(cycle_graph(4))


def test_minimal_vertex_covers(derived):
    assert minimal_vertex_covers(Clutter.of_graph(path_graph(2))) == [{1}, {2}]
    assert minimal_vertex_covers(Clutter.of_graph(path_graph(3))) == [{2}, {1, 3}]
    covers = minimal_vertex_covers(Clutter.of_graph(cycle_graph(5)))
    assert sorted(sorted(c) for c in covers) == derived["c5_minimal_covers"]


def test_clutter_validation():
    with pytest.raises(DomainError):
        Clutter(3, (frozenset({1}), frozenset({1, 2})))
    assert Clutter.from_sets(3, [{1, 2}, {1}, {2, 3}]).edges == (frozenset({1}), frozenset({2, 3}))


def test_v_edge_ideal_combinatorial(derived):
    assert v_edge_ideal_combinatorial(path_graph(2)) == 1
    assert v_edge_ideal_combinatorial(cycle_graph(5)) == derived["c5_edge_ideal_v"]
    assert v_edge_ideal_combinatorial(initial_graph(CLOSED_6)) == derived["closed6_initial_graph_v"]
    with pytest.raises(DomainError):
        v_edge_ideal_combinatorial(build_graph(3, []))


def test_reg_closed():
    assert reg_closed(complete_graph(5)) == 1
    assert reg_closed(CLOSED_8) == 5
    assert reg_closed(CLOSED_6) == 3
    with pytest.raises(DomainError):
        reg_closed(cycle_graph(5))


def test_closed_im_equals_ell_small():
    for n in range(2, 6):
        for g in connected_classes(n):
            cert = find_closed_labeling(g)
            if cert.closed:
                h = g.relabel(cert.permutation)
                assert induced_matching_number(initial_graph(h)) == longest_induced_path(h)
