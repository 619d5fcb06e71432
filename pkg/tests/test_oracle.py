import pytest

from rzsearch import catalog
from rzsearch.oracle import OracleResult, oracle_solve, read_fixture, write_fixture
from rzsearch.solver import SearchBudget, TranspositionTable, Verdict, achieve_goal

from sweeps import SWEEPS, oracle_table


def test_alive_position_is_one_node(corner_eye_lines, killall_rules):
    assert oracle_solve(corner_eye_lines["null"], killall_rules, 4) == OracleResult(Verdict.WIN, 1)


def test_corner_eye_agrees(corner_eye, killall_rules):
    assert oracle_solve(corner_eye, killall_rules, 2).status is Verdict.WIN


def test_depth_cap_gives_unknown(corner_eye, killall_rules):
    assert oracle_solve(corner_eye, killall_rules, 1).status is Verdict.UNKNOWN


def test_fixture_round_trip(tmp_path):
    rows = [(0x1F, Verdict.WIN, 6), (0xABCDEF, Verdict.UNKNOWN, 6)]
    write_fixture(tmp_path / "f.csv", rows)
    assert (tmp_path / "f.csv").read_text().splitlines()[0] == "000000000000001f,WIN,6"
    assert read_fixture(tmp_path / "f.csv") == {0x1F: (Verdict.WIN, 6), 0xABCDEF: (Verdict.UNKNOWN, 6)}


@pytest.mark.parametrize("name", sorted(SWEEPS))
def test_sweep_sample_matches_oracle(name, regen_oracle):
    """Every fifth position; the acceptance suite runs the full sweep."""
    table = oracle_table(name, regen_oracle)
    make_rules, positions, depth = SWEEPS[name]
    rules = make_rules()
    shared = TranspositionTable()
    mismatches = []
    count = 0
    for i, p in enumerate(positions()):
        count += 1
        if i % 5:
            continue
        expected, _ = table[p.key]
        got = achieve_goal(p, rules, SearchBudget(max_depth=depth), table=shared).status
        if Verdict.UNKNOWN not in (expected, got) and got is not expected:
            mismatches.append((p, expected, got))
    assert count == len(table)
    assert mismatches == []


@pytest.mark.parametrize("name", sorted(SWEEPS))
def test_zones_never_cost_nodes(name):
    make_rules, positions, depth = SWEEPS[name]
    rules = make_rules()
    for i, p in enumerate(positions()):
        if i % 7:
            continue
        rz = achieve_goal(p, rules, SearchBudget(max_depth=depth), table=None)
        full = oracle_solve(p, rules, depth)
        assert rz.stats.nodes <= full.nodes
