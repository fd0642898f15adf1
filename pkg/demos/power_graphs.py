#!/usr/bin/env python3
"""Directed power graphs: edges, mutual edges, and the degree law.

The directed power graph joins g -> h when h is a proper power of g.
Two opposite edges appear exactly between distinct generators of the same
cyclic subgroup, which ties the undirected edge count to the totient-sum
invariant: |undirected| = (phi(G) - |G|) / 2.
"""

import groupsum as gs
from groupsum import powergraph as pg

c6 = gs.cyclic(6)
graph = pg.build(c6)
print(f"{c6.name}: {len(graph.directed_edges)} directed edges,",
      f"{pg.undirected_edge_count(graph)} undirected")
print("undirected pairs:", sorted(graph.undirected_edges))
print("(1,5) generate the whole group; (2,4) generate the same C3.")
print()

print("degree of g in the undirected graph is phi(order(g)) - 1:")
for g in range(6):
    print(f"  element {g}: order {c6.element_order(g)},"
          f" degree {pg.undirected_degree(graph, g)}")
print()

print("edge-count identity 2*undirected + |G| = phi(G), across order 24:")
for group in gs.catalog(24):
    graph = pg.build(group)
    count = pg.undirected_edge_count(graph)
    print(f"  {group.name:<14} undirected={count:>3}  phi(G)={group.phi():>3}")
print()

print("DOT export of the quaternion group's power graph:")
print(pg.export_dot(pg.build(gs.dicyclic(2))))
