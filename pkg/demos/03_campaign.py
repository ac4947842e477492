"""Stress the bounds on random AND-NOT networks.

Each sample is analyzed, then every state is enumerated to count the
attractors, and the count is compared with each certified bound. Any
violation would be printed with the network text so it can be replayed.
"""

import sys
import time

from andnot_bounds import GeneratorConfig
from andnot_bounds.report import verify_campaign

n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
samples = int(sys.argv[2]) if len(sys.argv) > 2 else 300

start = time.perf_counter()
summary = verify_campaign(GeneratorConfig(n=n, seed=42), samples)
print(f"{samples} networks with {n} variables in {time.perf_counter() - start:.1f}s")
for check, count in summary.violation_counts.items():
    print(f"  {check:34} checked {summary.checked[check]:5}   violations {count}")

for v in summary.violations:
    print(f"\nsample {v['sample']}: {v['check']}: {v['detail']}\n{v['network']}")
