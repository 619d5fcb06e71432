"""Walk through a small corner life-and-death search and show how the must-play region shrinks.

White tries to live in the lower-right corner; Black moves first.  After
each Black try is refuted, the proof's zone tells us which remaining
Black moves could still matter.
"""

from rzsearch import catalog
from rzsearch.board import render
from rzsearch.geometry import grid_name
from rzsearch.solver import SearchBudget, achieve_goal

entry = catalog.get("corner_eye")
p = entry.position()
print("Start position (Black to move, White wants an unconditionally alive group):")
print(render(p))

result = achieve_goal(p, entry.rules(), SearchBudget(max_depth=entry.max_depth), entry.ordering())
print(f"\nverdict {result.status.name} after {result.stats.nodes} nodes\n")

tree = result.tree
for child, remaining in zip(tree.children, tree.must_play):
    tag = "null move, zone untouched" if child.null else "inside the zone"
    left = ", ".join(sorted(grid_name(g, 7) for g in remaining)) or "nothing"
    print(f"Black {grid_name(child.move, 7):>3}: refuted ({tag}); Black moves still worth trying: {left}")

print("\nRelevance zone of the whole proof (# marks a zone grid):")
print(render(p, result.rz))
print("\nAny position that agrees with this one on the # grids is also a White win.")
