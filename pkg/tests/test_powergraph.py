import json

import pytest

import groupsum as gs
from groupsum import numtheory as nt
from groupsum import powergraph as pg


# --- independent brute-force oracle ---


def naive_power_set(group, g):
    """All powers of g, by repeated multiplication (no library helpers)."""
    powers = {g}
    x = group.mul(g, g)
    while x != g:
        powers.add(x)
        x = group.mul(x, g)
    return frozenset(powers)


def naive_edges(group):
    n = group.order
    powers = [naive_power_set(group, g) for g in range(n)]
    directed = {
        (g, h) for g in range(n) for h in powers[g] if h != g
    }
    undirected = {
        (g, h)
        for g in range(n)
        for h in range(g + 1, n)
        if (g, h) in directed and (h, g) in directed
    }
    return directed, undirected


def test_trivial_group_has_no_edges():
    graph = pg.build(gs.cyclic(1))
    assert graph.directed_edges == frozenset()
    assert graph.undirected_edges == frozenset()


def test_c2_single_directed_edge():
    graph = pg.build(gs.cyclic(2))
    assert graph.directed_edges == {(1, 0)}
    assert pg.undirected_edge_count(graph) == 0


def test_c6_undirected_edges():
    graph = pg.build(gs.cyclic(6))
    assert pg.undirected_edge_count(graph) == 2
    assert graph.undirected_edges == {(1, 5), (2, 4)}


def test_klein_four_no_undirected():
    graph = pg.build(gs.abelian([2, 2]))
    assert pg.undirected_edge_count(graph) == 0


def test_c5_six_undirected():
    # all four generators of C5 pairwise mutual: C(4, 2) = 6
    graph = pg.build(gs.cyclic(5))
    assert pg.undirected_edge_count(graph) == 6


def test_degrees():
    graph = pg.build(gs.cyclic(6))
    assert pg.undirected_degree(graph, 0) == 0
    assert pg.undirected_degree(graph, 1) == 1
    graph5 = pg.build(gs.cyclic(5))
    assert pg.undirected_degree(graph5, 1) == 3
    with pytest.raises(IndexError):
        pg.undirected_degree(graph5, 5)


def test_edges_match_brute_force_oracle():
    for n in range(1, 41):
        for group in gs.catalog(n):
            graph = pg.build(group)
            directed, undirected = naive_edges(group)
            assert graph.directed_edges == directed
            assert graph.undirected_edges == undirected


def test_edge_count_identity_over_catalog():
    for n in range(1, 41):
        for group in gs.catalog(n):
            graph = pg.build(group)
            count = pg.undirected_edge_count(graph)
            assert 2 * count + n == gs.phi_of_group(group)


def test_directed_count_is_sum_of_orders_minus_one():
    for group in [gs.cyclic(12), gs.symmetric(3), gs.dicyclic(3), gs.alternating(4)]:
        graph = pg.build(group)
        assert len(graph.directed_edges) == sum(
            o - 1 for o in group.element_orders()
        )


def test_degree_law_over_catalog():
    for n in range(1, 31):
        for group in gs.catalog(n):
            graph = pg.build(group)
            orders = group.element_orders()
            for g in range(n):
                assert pg.undirected_degree(graph, g) == nt.totient(orders[g]) - 1


# --- exports ---


def test_dot_export_c2():
    text = pg.export_dot(pg.build(gs.cyclic(2)))
    assert text == (
        'digraph "cyclic:2" {\n'
        '  0 [label="0"];\n'
        '  1 [label="1"];\n'
        "  1 -> 0;\n"
        "}\n"
    )


def test_dot_export_trivial():
    text = pg.export_dot(pg.build(gs.cyclic(1)))
    assert "->" not in text
    assert '0 [label="0"];' in text


def test_json_export_shape():
    data = json.loads(pg.export_json(pg.build(gs.cyclic(6))))
    assert set(data) == {"group", "n", "directed", "undirected"}
    assert data["group"] == "cyclic:6"
    assert data["n"] == 6
    assert len(data["undirected"]) == 2
    assert data["directed"] == sorted(data["directed"])


def test_json_round_trip():
    for group in [gs.cyclic(8), gs.dihedral(4), gs.alternating(4)]:
        graph = pg.build(group)
        parsed = pg.parse_export(pg.export_json(graph))
        assert parsed["directed"] == graph.directed_edges
        assert parsed["undirected"] == graph.undirected_edges
        assert parsed["n"] == group.order


def test_exports_are_byte_stable():
    g = gs.dicyclic(3)
    assert pg.export_json(pg.build(g)) == pg.export_json(pg.build(g))
    assert pg.export_dot(pg.build(g)) == pg.export_dot(pg.build(g))


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        pg.PowerGraph(gs.cyclic(2), frozenset({(1, 1)}))
