"""A 7x7 kill-all problem where two refutations empty Black's must-play region.

Compares zone search with plain depth-first search on the same position
and move ordering.
"""

from rzsearch import catalog
from rzsearch.board import render
from rzsearch.geometry import grid_name
from rzsearch.solver import SearchBudget, achieve_goal

entry = catalog.get("killall_wall")
p, rules = entry.position(), entry.rules()
print(render(p))

budget = SearchBudget(max_nodes=20_000, max_depth=entry.max_depth)
rz = achieve_goal(p, rules, budget, entry.ordering())
plain = achieve_goal(p, rules, budget, entry.ordering(), rzs=False)

for child, remaining in zip(rz.tree.children, rz.tree.must_play):
    print(f"Black {grid_name(child.move, 7)} refuted; {len(remaining)} Black moves left in the region")
print(f"\nzone search : {rz.status.name:7} {rz.stats.nodes:6} nodes")
print(f"plain search: {plain.status.name:7} {plain.stats.nodes:6} nodes, {plain.stats.table_hits} table hits")
