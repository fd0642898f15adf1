#!/usr/bin/env python3
"""The witness criterion for a normal cyclic Sylow subgroup.

With n = |G| and Q the product of (p+1)/(p-1) over the primes of n, any
element g with n < Q * phi(order(g)) forces the Sylow subgroup for the
largest prime to be unique, normal, cyclic, and contained in <g>.  The
order-12 alternating group shows the bound is tight: it reaches
n = Q * phi(order(g)) exactly and has four Sylow 3-subgroups.
"""

from fractions import Fraction

import groupsum as gs
from groupsum import numtheory as nt
from groupsum import verify

c12 = gs.cyclic(12)
print(f"{c12.name}: Q = {nt.format_rational(nt.q_of(12))}")
for outcome in verify.check_witnesses(c12):
    print(f"  witness {outcome.witness} (order {outcome.witness_order}):"
          f" Sylow-{outcome.sylow_prime} of order {outcome.sylow_order},"
          f" unique={outcome.unique}, normal={outcome.normal},"
          f" inside <g>={outcome.contained_in_gen}")
print()

a4 = gs.alternating(4)
q = nt.q_of(12)
max_phi = max(nt.totient(o) for o in a4.element_orders())
print(f"{a4.name}: Q = {nt.format_rational(q)}, max phi(o(g)) = {max_phi}")
print(f"  Q * phi(o(g)) = {nt.format_rational(q * max_phi)} = n -- not a witness,")
print(f"  and indeed there are {a4.count_sylow(3)} Sylow 3-subgroups.")
print()

print("contrapositive: several Sylow subgroups for the largest prime")
print("mean no element can satisfy the witness inequality:")
for group in [gs.alternating(4), gs.symmetric(4), gs.dihedral(9)]:
    verdict = verify.verify_contrapositive(group)
    print(f"  {group.name:<10} {verdict.detail}")
print()

print("sweeping every catalog group of order up to 60:")
verdicts = verify.criterion_sweep(60)
for key, verdict in verdicts.items():
    print(f"  {key}: {'pass' if verdict.passed else 'FAIL'} ({verdict.detail})")
