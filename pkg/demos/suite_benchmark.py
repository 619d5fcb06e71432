"""Generate the seeded corner-problem suite into a scratch directory and benchmark it.

Usage: python3 demos/suite_benchmark.py [count]
"""

import sys
import tempfile

from rzsearch.bench import Config, run_bench
from rzsearch.solver import SearchBudget
from rzsearch.suites import write_corner_suite

count = int(sys.argv[1]) if len(sys.argv) > 1 else 6
with tempfile.TemporaryDirectory() as d:
    write_corner_suite(d, count=count)
    report = run_bench(d, [Config(False), Config(True)], SearchBudget(max_nodes=50_000, max_depth=30))
    print(report.format())
    plain = sum(r.nodes for r in report.rows if r.config == "plain")
    zone = sum(r.nodes for r in report.rows if r.config == "rzs")
    print(f"total nodes: plain {plain}, zone search {zone} ({plain / zone:.1f}x fewer)")
