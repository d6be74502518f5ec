"""Time BLT against HHL on a handful of small groups.

Absolute timings depend on the machine.  What carries over is the ordering:
BLT enumerates involutions, HHL enumerates all elements of order >= 3, and
the gap widens as the involution ratio drops.  PSL(3,3) takes about half a
minute in total.
"""

import sys

from chiralatlas.atlas import bench_table, run_bench

groups = sys.argv[1:] or ["alt:5", "sym:5", "psl3:2", "alt:6", "sym:6", "psl3:3"]
rows = run_bench(groups, min_time=0.5, max_runs=3)
print(bench_table(rows))
