"""Coprime graphs of finite groups.

Two elements are adjacent when their orders are coprime. Adjacency depends
only on element orders, so the graph is stored compressed: one class per
element order, plus a class-level adjacency flag. The explicit edge list is
only materialized for export and for the brute-force cross-check.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DegenerateGroup
from .numtheory import rad
from .permgroup import FiniteGroup

__all__ = [
    "CoprimeGraph",
    "EndVertexReport",
    "build_graph",
    "degree",
    "end_vertices",
    "is_star",
    "diameter",
    "export",
    "explicit_edges",
    "brute_force_edges",
]


@dataclass(frozen=True)
class CoprimeGraph:
    label: str
    vertex_orders: tuple[int, ...]
    order_classes: dict[int, int]
    class_adjacency: dict[tuple[int, int], bool] = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_orders)

    def adjacent_classes(self, m: int) -> list[int]:
        return [n for n in self.order_classes if self.class_adjacency[m, n]]

    @property
    def group_order(self) -> int:
        return self.n_vertices


@dataclass(frozen=True)
class EndVertexReport:
    label: str
    end_vertices: frozenset[int]
    end_vertex_orders: dict[int, int]
    is_star: bool
    rad_of_group: int

    @property
    def count(self) -> int:
        return len(self.end_vertices)


def build_graph(G: FiniteGroup | tuple[int, ...], label: str | None = None) -> CoprimeGraph:
    """Coprime graph of G (or of a bare tuple of element orders, identity first)."""
    if isinstance(G, FiniteGroup):
        orders, label = G.order_of, label or G.label
    else:
        orders, label = tuple(G), label or "G"
    if not orders or orders[0] != 1:
        raise ValueError("vertex 0 must be the identity (order 1)")
    classes: dict[int, int] = {}
    for o in orders:
        classes[o] = classes.get(o, 0) + 1
    classes = dict(sorted(classes.items()))
    adj = {(m, n): math.gcd(m, n) == 1 for m in classes for n in classes}
    return CoprimeGraph(label, tuple(orders), classes, adj)


def _class_degree(graph: CoprimeGraph, m: int) -> int:
    d = sum(c for n, c in graph.order_classes.items() if graph.class_adjacency[m, n])
    return d - 1 if graph.class_adjacency[m, m] else d  # no loops


def degree(graph: CoprimeGraph, v: int) -> int:
    return _class_degree(graph, graph.vertex_orders[v])


def end_vertices(graph: CoprimeGraph) -> EndVertexReport:
    """Non-identity vertices of degree exactly 1."""
    end_classes = {m for m in graph.order_classes if m != 1 and _class_degree(graph, m) == 1}
    ends = frozenset(v for v, o in enumerate(graph.vertex_orders) if o in end_classes)
    return EndVertexReport(
        label=graph.label,
        end_vertices=ends,
        end_vertex_orders={m: graph.order_classes[m] for m in sorted(end_classes)},
        is_star=_is_star(graph),
        rad_of_group=rad(graph.n_vertices),
    )


def _is_star(graph: CoprimeGraph) -> bool:
    if graph.n_vertices < 2:
        return False
    # K_{1,n-1} centred at the identity: no two non-identity vertices adjacent
    nontrivial = [m for m in graph.order_classes if m != 1]
    return all(not graph.class_adjacency[m, n] for m, n in combinations(nontrivial, 2))


def is_star(graph: CoprimeGraph) -> bool:
    if graph.n_vertices < 2:
        raise DegenerateGroup("star shape is undefined for the trivial group")
    return _is_star(graph)


def diameter(graph: CoprimeGraph) -> int:
    """Diameter, computed by BFS on the order classes."""
    if graph.n_vertices < 2:
        raise DegenerateGroup("diameter is undefined for a single vertex")
    classes = list(graph.order_classes)
    nbrs = {m: graph.adjacent_classes(m) for m in classes}
    worst = 0
    for src in classes:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            m = queue.popleft()
            for n in nbrs[m]:
                if n not in dist:
                    dist[n] = dist[m] + 1
                    queue.append(n)
        for dst in classes:
            if dst != src:
                worst = max(worst, dist[dst])
        if graph.order_classes[src] > 1:
            # two distinct vertices of one class: adjacent, or meet through a neighbour class
            if graph.class_adjacency[src, src]:
                worst = max(worst, 1)
            else:
                worst = max(worst, min((1 + dist[n] for n in nbrs[src]), default=math.inf))
    return worst


def explicit_edges(graph: CoprimeGraph) -> list[tuple[int, int]]:
    """Expand the class adjacency into a sorted vertex edge list."""
    members: dict[int, list[int]] = {}
    for v, o in enumerate(graph.vertex_orders):
        members.setdefault(o, []).append(v)
    edges = []
    for m, n in graph.class_adjacency:
        if not graph.class_adjacency[m, n] or m > n:
            continue
        if m == n:
            edges.extend(combinations(members[m], 2))
        else:
            edges.extend((min(u, v), max(u, v)) for u in members[m] for v in members[n])
    return sorted(edges)


def brute_force_edges(orders) -> list[tuple[int, int]]:
    """Quadratic pairwise-gcd edge list; a reference for the compressed graph."""
    orders = list(orders)
    return [
        (i, j)
        for i in range(len(orders))
        for j in range(i + 1, len(orders))
        if math.gcd(orders[i], orders[j]) == 1
    ]


def export(graph: CoprimeGraph, format: str = "json") -> str:
    format = format.lower()
    edges = explicit_edges(graph)
    if format == "json":
        doc = {"label": graph.label, "orders": list(graph.vertex_orders), "edges": [list(e) for e in edges]}
        return json.dumps(doc, sort_keys=True)
    if format == "dot":
        ends = end_vertices(graph).end_vertices
        lines = [f"graph {json.dumps(graph.label)} {{"]
        for v, o in enumerate(graph.vertex_orders):
            style = ", shape=doublecircle, style=filled, fillcolor=lightgrey" if v in ends else ""
            lines.append(f'  {v} [label="{v}:{o}"{style}];')
        lines.extend(f"  {u} -- {v};" for u, v in edges)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {format!r}")
