#!/usr/bin/env python3
"""Tour of the totient-sum invariant phi(G) = sum of phi(order(g)).

Walks through the invariant on familiar small groups, shows that the
cyclic group of each order maximizes it, and ends with the classic
coincidence: two non-isomorphic groups of order 16 sharing phi(G) = 28.
"""

from collections import Counter

import groupsum as gs

print("phi(G) sums Euler's totient of every element order.")
print()

for group in [gs.cyclic(12), gs.abelian([2, 6]), gs.dihedral(6),
              gs.dicyclic(3), gs.alternating(4)]:
    census = Counter(group.element_orders())
    breakdown = " + ".join(
        f"{count}*phi({order})" for order, count in sorted(census.items())
    )
    print(f"{group.name:<12} order census {dict(sorted(census.items()))}")
    print(f"{'':<12} phi(G) = {breakdown} = {group.phi()}")
print()

print("Among the constructible groups of each order, the cyclic group")
print("always attains the maximum (strictly, unless the group is cyclic):")
for n in (8, 12, 16, 24):
    rows = sorted(
        ((g.phi(), g.name) for g in gs.catalog(n)), reverse=True
    )
    top = ", ".join(f"{name}={phi}" for phi, name in rows[:4])
    print(f"  n={n:>2}: phi(C_n)={gs.phi_cyclic_sum(n):>3}  |  {top}, ...")
print()

print("The invariant does not determine the group:")
a = gs.direct_product(gs.cyclic(4), gs.cyclic(4))
b = gs.direct_product(gs.cyclic(2), gs.dicyclic(2))
print(f"  phi({a.name}) = {a.phi()}")
print(f"  phi({b.name}) = {b.phi()}")
print("  both have three elements of order 2 and twelve of order 4,")
print("  yet one is abelian and the other is not.")
