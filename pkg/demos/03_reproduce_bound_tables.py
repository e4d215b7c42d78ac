#!/usr/bin/env python3
"""Re-derive the two branch-count tables numerically.

Each row claims an ABC-change expression is negative for every feasible
root degree.  The scan evaluates the exact form on a finite grid up to
a crossover and the degree-monotone surrogate beyond it; the crossover
of the hardest row lands at root degree 259226.
"""

from minabc.scans import scan_t4, scan_t5, scan_t6

for scan in (scan_t4, scan_t5):
    rep = scan()
    print(rep.to_text().splitlines()[0])
    worst = max(rep.rows, key=lambda r: r.max_value)
    print(f"  tightest row: {worst.label} margin {worst.max_value:.3g} "
          f"crossover {worst.crossover}")

for special in (False, True):
    rep = scan_t6(special)
    print(rep.to_text().splitlines()[0])
