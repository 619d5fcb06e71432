"""Why zones must grow: captures, border blocks and suicide points.

For each case the zone at the root is compared with the plain union of
its children's zones; the difference is what dilation added.
"""

from rzsearch import catalog
from rzsearch.board import render
from rzsearch.solver import SearchBudget, achieve_goal
from rzsearch.zone import Zone

CASES = {
    "capture_dilation": "White's winning move captures, so the captured block's surroundings join the zone",
    "border_dilation": "a White block on the zone edge needs a second liberty inside the zone",
    "suicide_dilation": "a point that is suicide for Black must stay suicide on every matching board",
}

for name, why in CASES.items():
    entry = catalog.get(name)
    p = entry.position()
    r = achieve_goal(p, entry.rules(), SearchBudget(max_depth=entry.max_depth), entry.ordering())
    union = Zone.empty(p.size)
    for c in r.tree.children:
        union = union | c.rz
    added = sorted((r.rz - union).names()) if r.tree.children else []
    print(f"== {name}: {why}")
    print(render(p, r.rz))
    print(f"verdict {r.status.name}, {r.stats.nodes} nodes; grids added at the root: {', '.join(added) or 'none'}\n")
