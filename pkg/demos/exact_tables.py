#!/usr/bin/env python3
"""Exact rational tables and the exhaustive arithmetic sweep.

Everything is computed with arbitrary-precision rationals: the tabulated
special values of Q, the exceptional-case spot checks at minimal
exponents (including the row whose printed decimal disagrees with the
exact value), and the inequality sweep.
"""

from groupsum import numtheory as nt
from groupsum import verify

print("Q over the first-primes and skip-one families:")
print("  ell  prime  Q(first)  Q(skip)")
for row in nt.table1():
    skip = "*" if row.q_skip is None else nt.format_rational(row.q_skip)
    print(f"  {row.ell:>3}  {row.prime:>5}  {nt.format_rational(row.q_first):>8}  {skip:>8}")
print()

print("exceptional-case spot checks (minimal exponents):")
for key, row in verify.table2_spot_check().items():
    ratio = nt.format_rational(row.ratio)
    q = nt.format_rational(row.q)
    mark = "" if row.printed_matches else "  <-- printed value flagged"
    print(f"  {key:<24} n={row.n:<9} n/phi(o(g)) = {ratio:>14} {row.case.relation} Q = {q}{mark}")
print()

print("arithmetic sweep up to 20000:")
for key, verdict in sorted(verify.verify_numtheory_sweep(20000).items()):
    print(f"  {key}: {'pass' if verdict.passed else 'FAIL'} ({verdict.detail})")
