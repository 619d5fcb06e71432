"""Zone search on Hex, where nothing is ever captured and dilation does nothing.

White must connect the stone on C3 to the bottom edge with Black to
move.  Each Black try that White refutes shrinks the set of Black moves
that still need checking.
"""

from rzsearch import catalog
from rzsearch.geometry import grid_name
from rzsearch.hexgame import render
from rzsearch.solver import SearchBudget, achieve_goal

entry = catalog.get("hex_bridge")
p = entry.position()
print(render(p))

r = achieve_goal(p, entry.rules(), SearchBudget(max_depth=entry.max_depth), entry.ordering())
print(f"\nverdict {r.status.name} after {r.stats.nodes} nodes")
tree = r.tree
for child, remaining in zip(tree.children, tree.must_play):
    left = ", ".join(sorted(grid_name(g, 4) for g in remaining)) or "nothing"
    print(f"Black {grid_name(child.move, 4)} refuted; still to check: {left}")
