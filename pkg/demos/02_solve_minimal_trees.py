#!/usr/bin/env python3
"""Exact minimal-ABC tree parameters at interesting orders.

The feasible candidates at each order form residue classes of a linear
Diophantine equation; the solver walks exactly those classes and ranks
the closed-form objective, re-ranking leaders in 32-digit arithmetic
when binary64 cannot separate them.
"""

import time

from minabc import materialize, root_degree, solve
from minabc.cli import edges_text

for n in (5047, 6956, 16443, 1014814, 1142741, 1257073, 13290000000000000):
    t0 = time.time()
    r = solve(n)
    p = r.best
    print(f"n={n}")
    print(f"  z={p.z}  size-z={p.n_z}  size-z+1={p.n_zp1}  hubs3={p.n3}  hubs4={p.n4}")
    print(f"  root degree {root_degree(p)}, abc {r.abc_value:.6f}, "
          f"{r.nodes_explored} candidates, {time.time() - t0:.2f}s")
    if r.ties:
        print(f"  ties: {r.ties}")

print("\nmaterialized 107-vertex optimum, first lines of the edge format:")
tree = materialize(solve(107).best)
print("\n".join(edges_text(tree).splitlines()[:6]))
