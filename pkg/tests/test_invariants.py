"""Module invariants swept at their full stated ranges (catalog order 200).

Slower than the unit tests but still exhaustive and exact: the edge-count
identity, the per-element degree law, and the Sylow order/count laws for
every prime divisor of every catalog group.
"""

from collections import Counter

import groupsum as gs
from groupsum import numtheory as nt
from groupsum import powergraph as pg


def test_catalog_invariants_to_order_200():
    checked = 0
    for n in range(1, 201):
        fact = nt.factorize(n)
        for group in gs.catalog(n):
            graph = pg.build(group)
            count = pg.undirected_edge_count(graph)
            assert 2 * count + n == gs.phi_of_group(group)

            degrees = Counter()
            for g, h in graph.undirected_edges:
                degrees[g] += 1
                degrees[h] += 1
            orders = group.element_orders()
            for g in range(n):
                assert degrees[g] == nt.totient(orders[g]) - 1, (group.name, g)

            for q, a in fact.factors:
                sylow = group.sylow_subgroup(q)
                assert len(sylow) == q**a, (group.name, q)
                # count_sylow itself enforces the congruence and divisibility laws
                group.count_sylow(q)
            checked += 1
    assert checked > 1000
