import pytest

from rzsearch import catalog
from rzsearch.benson import Status
from rzsearch.board import BLACK, WHITE
from rzsearch.errors import OccupiedGrid
from rzsearch.geometry import PASS, parse_grid
from rzsearch.hexgame import (HexGoal, HexPosition, HexRules, format_hex_problem, from_diagram, hex_dilate,
                              hex_goal_status, hex_play, parse_hex_problem)
from rzsearch.solver import NodeKind, SearchBudget, achieve_goal
from rzsearch.zone import Zone


def test_place_one_stone():
    p = hex_play(HexPosition(3), parse_grid("C3", 3))
    assert p.black == 1 << parse_grid("C3", 3) and p.white == 0 and p.to_move == WHITE


def test_occupied_and_pass():
    p = hex_play(HexPosition(3), 0)
    with pytest.raises(OccupiedGrid):
        hex_play(p, 0)
    with pytest.raises(ValueError):
        hex_play(p, PASS)


def test_bridge_completed_by_white():
    e = catalog.get("hex_bridge")
    goal = e.spec().goal()
    p = e.position()
    assert hex_goal_status(p, goal)[0] is Status.UNDECIDED
    done = from_diagram(["....", "..O.", "..O.", ".O.."], BLACK)
    status, z = hex_goal_status(done, goal)
    assert status is Status.ACHIEVED
    assert sorted(z.names()) == ["B1", "C2", "C3"]


def test_empty_board_undecided():
    goal = HexGoal.make(3, (), ("bottom", "top"))
    assert hex_goal_status(HexPosition(3), goal)[0] is Status.UNDECIDED


def test_ringed_crucial_stone_failed():
    goal = HexGoal.make(4, ["B2"], ("bottom",))
    p = from_diagram(["....", "XXX.", "XOX.", "XXX."], WHITE)
    assert hex_goal_status(p, goal)[0] is Status.FAILED


def test_goal_validation():
    with pytest.raises(ValueError):
        HexGoal.make(3, (), ("left",), WHITE)
    with pytest.raises(ValueError):
        HexGoal.make(3, (), ("bottom",))


def test_dilation_is_identity():
    z = Zone.from_grids(4, ["A1", "B2"])
    assert hex_dilate(z) == z
    assert hex_dilate(Zone.empty(4)) == Zone.empty(4)


def test_problem_text_round_trip():
    text = "size 4\n....\n..O.\n....\n....\nto_move: B\ncrucial: C3\ntarget: bottom\n"
    prob = parse_hex_problem(text)
    assert format_hex_problem(prob) == text


def test_untried_moves_are_covered_by_null_children():
    e = catalog.get("hex_bridge")
    r = achieve_goal(e.position(), e.rules(), SearchBudget(max_depth=e.max_depth), e.ordering())
    rules = e.rules()
    stack = [(r.tree, e.position())]
    while stack:
        node, p = stack.pop()
        if node.kind is NodeKind.AND:
            tried = {c.move for c in node.children}
            for g in rules.legal_moves(p):
                if g not in tried:
                    assert any(c.null and not c.rz.contains(g) for c in node.children)
        stack.extend((c, rules.play(p, c.move)) for c in node.children)
