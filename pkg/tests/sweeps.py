"""Shared setup for the small-board equivalence sweeps."""

from pathlib import Path

from rzsearch.benson import GoGoal
from rzsearch.go import GoRules
from rzsearch.hexgame import HexGoal, HexRules
from rzsearch.oracle import oracle_solve, read_fixture, write_fixture
from rzsearch.suites import go_positions, hex_positions

FIXTURES = Path(__file__).parent / "fixtures"

SWEEPS = {
    # name: (rules factory, positions factory, depth)
    "go3": (lambda: GoRules(GoGoal.kill_all()), lambda: go_positions(3, 3), 6),
    "hex3": (lambda: HexRules(HexGoal.make(3, (), ("bottom", "top"))), lambda: hex_positions(3, 2), 9),
}


def oracle_table(name: str, regen: bool = False) -> dict:
    """``hash -> (verdict, depth)`` from the committed fixture, recomputed on request."""
    path = FIXTURES / f"oracle_{name}.csv"
    if regen or not path.exists():
        make_rules, positions, depth = SWEEPS[name]
        rules = make_rules()
        rows = [(p.key, oracle_solve(p, rules, depth).status, depth) for p in positions()]
        FIXTURES.mkdir(exist_ok=True)
        write_fixture(path, rows)
    return read_fixture(path)
