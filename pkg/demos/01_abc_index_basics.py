#!/usr/bin/env python3
"""Tour of the ABC index on explicit trees.

The index sums sqrt((d(u) + d(v) - 2) / (d(u) d(v))) over edges.  Any
edge touching a degree-2 vertex weighs exactly 1/sqrt(2), so paths and
pendant-path structures give clean closed forms.
"""

import math

from minabc import (
    abc_index,
    apply_switch,
    edge_weight,
    path_tree,
    star_tree,
    tree_from_edges,
)

print("edge weights:")
for x, y in ((2, 2), (1, 2), (4, 2), (53, 4)):
    print(f"  w({x:>2},{y}) = {edge_weight(x, y):.10f}")

print("\npaths: ABC(P_n) = (n-1)/sqrt(2) for n >= 3")
for n in (3, 4, 8, 20):
    print(f"  P_{n:<2} -> {abc_index(path_tree(n)):.10f}"
          f"   closed form {(n - 1) / math.sqrt(2):.10f}")

print("\nstars: ABC(K_1,n-1) = sqrt((n-1)(n-2))")
for n in (4, 5, 9):
    print(f"  K_1,{n - 1} -> {abc_index(star_tree(n)):.10f}"
          f"   closed form {math.sqrt((n - 1) * (n - 2)):.10f}")

spider = tree_from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
print(f"\nspider with legs (2,1,1): {abc_index(spider):.10f}")
print("  = 2 w(3,1) + w(3,2) + w(2,1) =",
      f"{2 * edge_weight(3, 1) + edge_weight(3, 2) + edge_weight(2, 1):.10f}")

print("\nthe degree-preserving switch never raises the index when the")
print("degree conditions d(p) >= d(r), d(q) <= d(s) hold:")
t = path_tree(6)
t2 = apply_switch(t, (1, 0), (4, 5))
print(f"  P_6 before {abc_index(t):.10f}, after {abc_index(t2):.10f} (equal degrees: tie)")
