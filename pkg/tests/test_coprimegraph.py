import json
import math

import pytest
from hypothesis import given, strategies as st

from endvertex import coprimegraph as cg
from endvertex.constructions import build
from endvertex.errors import DegenerateGroup
from endvertex.numtheory import rad
from endvertex.permgroup import is_p_group


def graph(spec):
    return cg.build_graph(build(spec))


def test_z4_is_star():
    g = graph("Cyclic(4)")
    assert cg.is_star(g)
    assert cg.explicit_edges(g) == [(0, 1), (0, 2), (0, 3)]
    assert cg.end_vertices(g).count == 3


def test_trivial_group():
    g = graph("Cyclic(1)")
    assert g.n_vertices == 1 and cg.explicit_edges(g) == []
    assert json.loads(cg.export(g, "json"))["edges"] == []
    with pytest.raises(DegenerateGroup):
        cg.is_star(g)
    with pytest.raises(DegenerateGroup):
        cg.diameter(g)


def test_z6_edges_and_degrees():
    g = graph("Cyclic(6)")
    o = g.vertex_orders
    edges = set(cg.explicit_edges(g))
    for u, v in edges:
        assert math.gcd(o[u], o[v]) == 1
    six = [v for v in range(6) if o[v] == 6]
    two = o.index(2)
    assert all(cg.degree(g, v) == 1 for v in six)
    assert cg.degree(g, two) == 3
    assert cg.degree(g, 0) == 5
    assert all((min(two, v), max(two, v)) in edges for v in range(6) if o[v] == 3)


@pytest.mark.parametrize("spec, count", [("Cyclic(2)", 1), ("Cyclic(2) x Cyclic(2)", 3), ("Symmetric(3)", 0),
                                         ("Cyclic(6)", 2), ("Cyclic(8)", 7)])
def test_end_vertex_counts(spec, count):
    assert cg.end_vertices(graph(spec)).count == count


@pytest.mark.parametrize("spec, star", [("Cyclic(8)", True), ("Cyclic(6)", False), ("Cyclic(2)", True)])
def test_is_star(spec, star):
    assert cg.is_star(graph(spec)) is star


@pytest.mark.parametrize("spec, d", [("Cyclic(2)", 1), ("Cyclic(6)", 2), ("Cyclic(3)", 2), ("Symmetric(3)", 2)])
def test_diameter(spec, d):
    assert cg.diameter(graph(spec)) == d


def _bfs_diameter(orders):
    n = len(orders)
    adj = [[j for j in range(n) if j != i and math.gcd(orders[i], orders[j]) == 1] for i in range(n)]
    worst = 0
    for s in range(n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            frontier = [v for u in frontier for v in adj[u] if v not in dist and not dist.__setitem__(v, dist[u] + 1)]
        worst = max(worst, max(dist.values()))
    return worst


order_tuples = st.lists(st.sampled_from([2, 3, 4, 5, 6, 9, 10, 12, 15]), min_size=1, max_size=14).map(
    lambda xs: (1, *xs)
)


@given(order_tuples)
def test_compressed_graph_matches_bruteforce(orders):
    g = cg.build_graph(orders)
    assert cg.explicit_edges(g) == cg.brute_force_edges(orders)
    assert cg.diameter(g) == _bfs_diameter(orders)
    brute_deg = [sum(math.gcd(o, p) == 1 for j, p in enumerate(orders) if j != i) for i, o in enumerate(orders)]
    assert [cg.degree(g, v) for v in range(len(orders))] == brute_deg
    ends = {v for v in range(1, len(orders)) if brute_deg[v] == 1}
    assert cg.end_vertices(g).end_vertices == ends
    assert sum(brute_deg) % 2 == 0


def test_catalog_invariants(catalog, realized):
    for e in catalog:
        G = realized[e.label]
        g = cg.build_graph(G)
        rep = cg.end_vertices(g)
        assert cg.degree(g, 0) == G.order - 1
        if G.order >= 2:
            by_rad = {x for x in range(1, G.order) if rad(G.order_of[x]) == rad(G.order)}
            assert rep.end_vertices == by_rad, e.label
            assert cg.is_star(g) == (is_p_group(G) is not None)
            if cg.is_star(g):
                assert rep.count == G.order - 1
        assert all(G.inv(x) in rep.end_vertices for x in rep.end_vertices)
        assert all(rad(m) == rep.rad_of_group for m in rep.end_vertex_orders)


def test_export_dot_z4():
    text = cg.export(graph("Cyclic(4)"), "dot")
    assert text.startswith('graph "Cyclic(4)" {')
    assert text.count("--") == 3
    assert text.count("[label=") == 4
    assert text.count("doublecircle") == 3


def test_export_json_z6_has_order2_order3_edge():
    g = graph("Cyclic(6)")
    doc = json.loads(cg.export(g, "json"))
    o = doc["orders"]
    assert any({o[u], o[v]} == {2, 3} for u, v in doc["edges"])


def test_export_is_deterministic():
    a = cg.export(graph("Dihedral(12)"), "json")
    b = cg.export(graph("Dihedral(12)"), "json")
    assert a == b
    assert cg.export(graph("Dicyclic(12)"), "dot") == cg.export(graph("Dicyclic(12)"), "dot")
    with pytest.raises(ValueError):
        cg.export(graph("Cyclic(3)"), "png")


def test_bare_orders_need_identity_first():
    with pytest.raises(ValueError):
        cg.build_graph((2, 1))
