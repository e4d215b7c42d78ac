#!/usr/bin/env python3
"""Exhaustive small-order search, the independent ground truth.

Enumerates one representative per isomorphism class (counts are gated
against the known sequence) and reports the minimal-ABC tree.  At order
7 the path ties with the three-leg spider: in both trees every edge
touches a degree-2 vertex.
"""

from minabc import brute_min_abc, free_tree_count

print("free-tree class counts:")
for n in range(4, 13):
    print(f"  n={n:>2}: {free_tree_count(n)}")

for n in (4, 5, 7, 10):
    r = brute_min_abc(n)
    print(f"\nminimum at n={n}: abc={r.abc_value:.10f} "
          f"({r.searched} classes searched, {len(r.trees)} argmin(s))")
    print(f"  degrees: {sorted(r.tree.degrees(), reverse=True)}")
