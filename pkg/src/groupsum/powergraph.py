"""Directed power graphs of finite groups, and their undirected edge sets.

The directed power graph has an edge (g, h) whenever h is a power of g
other than g itself.  A pair of oppositely directed edges ("undirected
edge") occurs exactly between distinct elements generating the same cyclic
subgroup; the undirected set is always derived from the directed set, and
the build asserts that derivation agrees with the mutual-generation
criterion.
"""

from __future__ import annotations

import json
from typing import FrozenSet, Tuple

from . import numtheory
from .groups import FiniteGroup

Edge = Tuple[int, int]


class PowerGraph:
    """Immutable directed power graph over a group's element indices."""

    __slots__ = ("group", "directed_edges", "_undirected")

    def __init__(self, group: FiniteGroup, directed_edges: FrozenSet[Edge]):
        self.group = group
        self.directed_edges = frozenset(directed_edges)
        for g, h in self.directed_edges:
            if g == h:
                raise ValueError(f"self-loop at {g}")
        self._undirected = None

    @property
    def undirected_edges(self) -> FrozenSet[Edge]:
        """Unordered pairs {g, h} with both (g, h) and (h, g) directed."""
        if self._undirected is None:
            de = self.directed_edges
            self._undirected = frozenset(
                (g, h) for g, h in de if g < h and (h, g) in de
            )
        return self._undirected


def build(group: FiniteGroup) -> PowerGraph:
    """Construct the directed power graph of a group.

    The cyclic subgroup of each element is computed once; the derived
    undirected set is checked against mutual generation (same cyclic
    subgroup, distinct elements) before returning.
    """
    generated = [frozenset(group.cyclic_subgroup(g)) for g in range(group.order)]
    directed = frozenset(
        (g, h) for g in range(group.order) for h in generated[g] if h != g
    )
    graph = PowerGraph(group, directed)
    mutual = frozenset(
        (g, h)
        for g in range(group.order)
        for h in range(g + 1, group.order)
        if generated[g] == generated[h]
    )
    if graph.undirected_edges != mutual:
        raise AssertionError(
            f"undirected edges disagree with mutual generation in {group.name}"
        )
    return graph


def undirected_edge_count(graph: PowerGraph) -> int:
    """Number of undirected edges; equals (phi(G) - |G|) / 2, asserted."""
    count = len(graph.undirected_edges)
    n = graph.group.order
    phi_g = graph.group.phi()
    if 2 * count + n != phi_g:
        raise AssertionError(
            f"{graph.group.name}: 2*{count} + {n} != totient sum {phi_g}"
        )
    return count


def undirected_degree(graph: PowerGraph, g: int) -> int:
    """Undirected degree of g; equals phi(order(g)) - 1, asserted."""
    if not 0 <= g < graph.group.order:
        raise IndexError(f"element index {g} out of range")
    degree = sum(1 for e in graph.undirected_edges if g in e)
    expected = numtheory.totient(graph.group.element_order(g)) - 1
    if degree != expected:
        raise AssertionError(
            f"{graph.group.name}: degree of {g} is {degree}, expected {expected}"
        )
    return degree


def export_dot(graph: PowerGraph) -> str:
    """Graphviz digraph; one node line per element, one '->' line per
    directed edge, in ascending index order (byte-stable)."""
    group = graph.group
    lines = [f'digraph "{group.name}" {{']
    for g in range(group.order):
        lines.append(f'  {g} [label="{group.labels[g]}"];')
    for g, h in sorted(graph.directed_edges):
        lines.append(f"  {g} -> {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(graph: PowerGraph) -> str:
    """JSON edge lists, pairs sorted ascending for byte-stable output."""
    payload = {
        "group": graph.group.name,
        "n": graph.group.order,
        "directed": sorted(list(e) for e in graph.directed_edges),
        "undirected": sorted(list(e) for e in graph.undirected_edges),
    }
    return json.dumps(payload, sort_keys=True)


def parse_export(text: str) -> dict:
    """Parse `export_json` output back into edge sets (for round-trips)."""
    data = json.loads(text)
    return {
        "group": data["group"],
        "n": data["n"],
        "directed": frozenset((int(a), int(b)) for a, b in data["directed"]),
        "undirected": frozenset((int(a), int(b)) for a, b in data["undirected"]),
    }
