#!/usr/bin/env python3
"""Full verification sweep: every negativity scan plus property checks.

Equivalent to ``minabc verify all``.  Prints one line per scan and the
worst (closest to zero) margin observed anywhere.
"""

from minabc import verify

reports = verify("all", samples=100_000)
worst = max(r.max_value for r in reports if r.rows)
for r in reports:
    print(f"{r.scope:>24}: {'PASS' if r.passed else 'FAIL'} "
          f"({len(r.rows)} rows, worst {r.max_value:.3g}, {r.seconds:.1f}s)")
print(f"\noverall: {'PASS' if all(r.passed for r in reports) else 'FAIL'}, "
      f"worst margin {worst:.3g}")
