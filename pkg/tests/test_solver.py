import threading

import pytest

from rzsearch import catalog
from rzsearch.benson import GoGoal
from rzsearch.board import WHITE, from_stones
from rzsearch.errors import MoveNotInRegion
from rzsearch.geometry import PASS, grid_name, parse_grid
from rzsearch.go import GoRules
from rzsearch.solver import (MoveOrdering, MustPlayRegion, NodeKind, SearchBudget, TranspositionTable,
                             Verdict, achieve_goal, order_moves, parse_priors, update_and_node)
from rzsearch.zone import Zone


def names(moves, n=7):
    return [grid_name(m, n) for m in moves]


def solve(name, **kw):
    e = catalog.get(name)
    return achieve_goal(e.position(), e.rules(), SearchBudget(max_depth=e.max_depth), e.ordering(), **kw)


def test_corner_eye_trace():
    r = solve("corner_eye")
    assert r.status is Verdict.WIN
    tree = r.tree
    assert tree.kind is NodeKind.AND
    assert names(c.move for c in tree.children) == ["D1", "E2", "F2"]
    assert [c.null for c in tree.children] == [True, False, False]
    assert [sorted(names(m)) for m in tree.must_play] == [["E2", "F2"], ["F2"], []]
    assert r.rz == tree.children[0].rz | tree.children[1].rz | tree.children[2].rz


def test_corner_eye_zone():
    r = solve("corner_eye")
    assert r.rz.names() == ["D1", "E1", "F1", "G1", "D2", "E2", "F2", "G2", "E3", "F3", "G3"]


def test_already_alive_is_a_leaf(corner_eye_lines, killall_rules):
    p = corner_eye_lines["null"]
    r = achieve_goal(p, killall_rules)
    assert r.win and r.tree.kind is NodeKind.LEAF
    assert r.stats.nodes == 1
    assert r.rz == killall_rules.status(p)[1]


def test_budget_exhaustion_is_unknown():
    e = catalog.get("killall_wall")
    r = achieve_goal(e.position(), e.rules(), SearchBudget(max_nodes=10), e.ordering())
    assert r.status is Verdict.UNKNOWN and r.tree is None


def test_killall_wall_branches():
    r = solve("killall_wall")
    assert r.win
    tree = r.tree
    assert names(c.move for c in tree.children) == ["D2", "F4"]
    assert all(c.null for c in tree.children)
    assert tree.must_play[-1] == frozenset()
    shared = tree.children[0].rz & tree.children[1].rz
    legal_inside = [m for m in catalog.get("killall_wall").rules().legal_moves(catalog.get("killall_wall").position())
                    if m != PASS and shared.contains(m)]
    assert legal_inside == []


def test_shared_table_reuses_symmetric_line():
    e = catalog.get("killall_wall")
    rules, p = e.rules(), e.position()
    table = TranspositionTable()
    first = achieve_goal(p, rules, SearchBudget(max_depth=30), e.ordering(), table=table)
    f4 = rules.play(p, parse_grid("F4", 7))
    again = achieve_goal(f4, rules, SearchBudget(max_depth=30), e.ordering(), table=table)
    assert first.win and again.win
    assert again.stats.table_hits > 0


def test_plain_search_uses_table():
    e = catalog.get("killall_wall")
    r = achieve_goal(e.position(), e.rules(), SearchBudget(max_depth=30), e.ordering(), rzs=False)
    assert r.win and r.stats.table_hits > 0


def test_no_rzs_needs_more_nodes():
    for name in ("corner_eye", "border_dilation", "suicide_dilation", "capture_dilation"):
        on, off = solve(name), solve(name, rzs=False)
        assert on.status == off.status
        assert on.stats.nodes <= off.stats.nodes


def test_killall_wall_plain_small_budget_unknown():
    e = catalog.get("killall_wall")
    r = achieve_goal(e.position(), e.rules(), SearchBudget(max_nodes=1000, max_depth=30), e.ordering(), rzs=False)
    assert r.status is Verdict.UNKNOWN


def test_hex_bridge_must_play():
    r = solve("hex_bridge")
    assert r.win
    tree = r.tree
    assert names((c.move for c in tree.children), 4) == ["B2", "C2", "B1"]
    assert sorted(names(tree.must_play[1], 4)) == ["B1"]
    assert tree.must_play[-1] == frozenset()


def test_hex_root_zone_is_child_union():
    r = solve("hex_bridge")
    union = Zone.empty(4)
    for c in r.tree.children:
        union = union | c.rz
    assert r.rz == union


# --------------------------------------------------------------------------
# must-play updates


def test_null_move_intersects(corner_eye):
    z_b = Zone.from_grids(7, ["E1", "F1", "G1", "D2", "E2", "F2", "G2", "E3", "F3", "G3"])
    region = MustPlayRegion(frozenset(parse_grid(x, 7) for x in ("A1", "D1", "E2", "F2", "A7")))
    out = update_and_node(region, parse_grid("D1", 7), z_b)
    assert sorted(names(out.remaining)) == ["E2", "F2"]


def test_in_zone_move_only_removed():
    z = Zone.from_grids(7, ["E2", "F2"])
    region = MustPlayRegion(frozenset(parse_grid(x, 7) for x in ("D1", "E2", "F2")))
    out = update_and_node(region, parse_grid("E2", 7), z)
    assert sorted(names(out.remaining)) == ["D1", "F2"]


def test_pass_is_a_null_move():
    z = Zone.from_grids(7, ["E2"])
    region = MustPlayRegion(frozenset({PASS, parse_grid("E2", 7), parse_grid("A1", 7)}))
    out = update_and_node(region, PASS, z)
    assert out.remaining == frozenset({parse_grid("E2", 7)})


def test_move_outside_region_rejected():
    with pytest.raises(MoveNotInRegion):
        update_and_node(MustPlayRegion(frozenset({1})), 2, Zone.empty(7))


# --------------------------------------------------------------------------
# table and ordering


def test_table_store_lookup():
    t = TranspositionTable()
    z = Zone.from_grids(5, ["C3"])
    t.store("g", 42, Verdict.WIN, z)
    assert t.lookup("g", 42)[:2] == (Verdict.WIN, z)
    assert t.lookup("g", 43) is None
    assert t.lookup("other", 42) is None
    with pytest.raises(ValueError):
        t.store("g", 1, Verdict.UNKNOWN)


def test_table_shared_between_threads():
    t = TranspositionTable()

    def fill(offset):
        for i in range(500):
            t.store("g", offset + i, Verdict.FAIL)

    threads = [threading.Thread(target=fill, args=(k * 1000,)) for k in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert len(t) == 2000


def test_lex_ordering(corner_eye):
    moves = [parse_grid("F2", 7), parse_grid("E2", 7)]
    assert names(order_moves(corner_eye, moves, MoveOrdering())) == ["E2", "F2"]


def test_liberty_pressure_prefers_contact(corner_eye):
    moves = [parse_grid(x, 7) for x in ("A7", "A1", "F2")]
    assert names(order_moves(corner_eye, moves, MoveOrdering("liberty")))[0] == "F2"


def test_priors_put_listed_move_first():
    e = catalog.get("killall_wall")
    p = e.position()
    pri = MoveOrdering("priors", parse_priors("F4", 7), wins_first=False)
    moves = e.rules().legal_moves(p)
    assert names(order_moves(p, moves, pri))[0] == "F4"
    assert order_moves(p, moves, pri)[-1] == PASS


def test_conditional_priors_follow_board():
    pri = MoveOrdering("priors", parse_priors("W C3 if B B2\nW D4", 5), wins_first=False)
    with_b2 = from_stones(5, black=["B2"], to_move=WHITE)
    without = from_stones(5, black=["A5"], to_move=WHITE)
    moves = [parse_grid(x, 5) for x in ("C3", "D4")]
    assert names(order_moves(with_b2, moves, pri), 5) == ["C3", "D4"]
    assert names(order_moves(without, moves, pri), 5) == ["D4", "C3"]


def test_priors_parse_errors():
    with pytest.raises(ValueError):
        parse_priors("Q C3", 5)
    with pytest.raises(ValueError):
        parse_priors("B C3 if B", 5)


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(deadline=-1)


def test_deterministic_trees():
    a, b = solve("suicide_dilation"), solve("suicide_dilation")
    assert a.tree == b.tree


def test_crucial_goal_fail_when_captured():
    rules = GoRules(GoGoal.crucial_safety(3, ["B2"]))
    p = from_stones(3, black=["A2", "C2", "B1"], white=["B2"])
    r = achieve_goal(p, rules, SearchBudget(max_depth=6))
    assert r.status is Verdict.FAIL
