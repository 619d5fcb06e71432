import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rzsearch import catalog
from rzsearch.board import Position, play
from rzsearch.errors import PatternMismatch
from rzsearch.geometry import parse_grid
from rzsearch.go import GoRules
from rzsearch.replay import (check_cr_conditions, is_exhaustive, same_pattern_positions, tree_positions,
                             verify_replay, with_zone, zz1_violations)
from rzsearch.solver import NodeKind, SearchBudget, achieve_goal
from rzsearch.zone import Zone


def solved(name, **rule_flags):
    e = catalog.get(name)
    p = e.position()
    rules = e.rules(**rule_flags) if rule_flags else e.rules()
    r = achieve_goal(p, rules, SearchBudget(max_depth=e.max_depth), e.ordering())
    assert r.win
    return p, rules, r


def test_identity_replay():
    p, rules, r = solved("corner_eye")
    assert verify_replay(r.tree, p, p, rules)


def test_extra_black_stone_anywhere_outside():
    p, rules, r = solved("corner_eye")
    outside = [g for g in range(49) if not r.rz.contains(g) and not p.occupied >> g & 1]
    for g in outside:
        q = Position(7, p.black | 1 << g, p.white, p.to_move)
        assert verify_replay(r.tree, p, q, rules), g


def test_mismatched_pattern_rejected():
    p, rules, r = solved("corner_eye")
    q = Position(7, p.black | 1 << parse_grid("E2", 7), p.white, p.to_move)
    with pytest.raises(PatternMismatch):
        verify_replay(r.tree, p, q, rules)


def test_undilated_capture_fails_on_control():
    e = catalog.get("capture_dilation")
    p = e.position()
    rules = GoRules(e.spec().goal(), dilate=False)
    r = achieve_goal(p, rules, SearchBudget(max_depth=e.max_depth), e.ordering())
    control = catalog.get("capture_dilation_control").position()
    why = []
    assert not verify_replay(r.tree, p, control, rules, explain=why)
    assert why


def test_dilated_capture_excludes_control():
    p, rules, r = solved("capture_dilation")
    control = catalog.get("capture_dilation_control").position()
    with pytest.raises(PatternMismatch):
        verify_replay(r.tree, p, control, rules)


def test_cr_identity_and_in_zone_moves():
    p, rules, r = solved("corner_eye")
    assert check_cr_conditions(p, r.rz, r.tree, p, rules)
    for q in same_pattern_positions(p, r.rz, rules, limit=30):
        assert check_cr_conditions(p, r.rz, r.tree, q, rules)


def test_cr_fails_for_undilated_suicide_zone():
    p, rules, r = solved("suicide_dilation")
    z_b = Zone.empty(7)
    for c in r.tree.children:
        z_b = z_b | c.rz
    # F4 lies outside the undilated zone; emptying it lets Black play G4.
    f4 = parse_grid("F4", 7)
    p_d = Position(7, p.black & ~(1 << f4), p.white, p.to_move)
    why = []
    assert not check_cr_conditions(p, z_b, with_zone(r.tree, z_b), p_d, rules, explain=why)
    assert why == ["in-zone move legal only on the perturbed position"]


def test_same_pattern_enumeration_is_exhaustive_when_small():
    e = catalog.get("hex_bridge")
    p, rules = e.position(), e.rules()
    r = achieve_goal(p, rules, SearchBudget(max_depth=e.max_depth), e.ordering())
    assert is_exhaustive(p, r.rz)
    qs = list(same_pattern_positions(p, r.rz, rules))
    outside = 16 - len(r.rz)
    assert len(qs) == 3 ** outside - 1


def test_sampled_enumeration_is_seeded():
    p, rules, r = solved("corner_eye")
    a = list(same_pattern_positions(p, r.rz, rules, limit=10, rng=random.Random(3)))
    b = list(same_pattern_positions(p, r.rz, rules, limit=10, rng=random.Random(3)))
    assert a == b and len(a) == 10


@pytest.mark.parametrize("name", ["corner_eye", "border_dilation", "suicide_dilation", "capture_dilation",
                                  "killall_wall", "hex_bridge"])
def test_child_zones_nest(name):
    _, _, r = solved(name)
    assert zz1_violations(r.tree) == []


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 48), st.sampled_from(["corner_eye", "border_dilation", "capture_dilation"]))
def test_superset_zones_still_transfer(extra, name):
    p, rules, r = solved(name)
    for node, node_p in tree_positions(r.tree, p, rules):
        if node.kind is NodeKind.LEAF:
            continue
        grown = node.rz.add(1 << extra)
        if node.kind is NodeKind.AND:
            grown = rules.dilate_and(node_p, grown)
        else:
            grown = rules.dilate_or(node_p, node.winning_move, grown)
        for q in same_pattern_positions(node_p, grown, rules, limit=5):
            assert check_cr_conditions(node_p, grown, node, q, rules)


@pytest.mark.parametrize("name", ["corner_eye", "hex_bridge"])
def test_generated_keys_match_scratch(name):
    e = catalog.get(name)
    p, rules = e.position(), e.rules()
    r = achieve_goal(p, rules, SearchBudget(max_depth=e.max_depth), e.ordering())
    for q in same_pattern_positions(p, r.rz, rules, limit=200):
        assert q.key == type(q)(q.size, q.black, q.white, q.to_move).key
