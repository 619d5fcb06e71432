"""Relevance-zone search: AND-OR game solving with zone-based pruning for Go and Hex."""

from .benson import GoGoal, Status, unconditionally_alive
from .board import BLACK, EMPTY, WHITE, Color, Position, from_diagram, from_stones
from .errors import (EmptyUcaSet, IllegalMove, InconsistentSetup, MalformedSgf, MoveNotInRegion,
                     OccupiedGrid, PatternMismatch, RzError, SizeMismatch, SuicideMove)
from .go import GoRules
from .hexgame import HexGoal, HexPosition, HexRules
from .problem import ProblemSpec, load_problem, parse_sgf, to_sgf
from .replay import check_cr_conditions, verify_replay
from .solver import (MoveOrdering, RzstNode, SearchBudget, SolveResult, TranspositionTable, Verdict,
                     achieve_goal)
from .zone import Zone

__all__ = [
    "BLACK", "EMPTY", "WHITE", "Color", "EmptyUcaSet", "GoGoal", "GoRules", "HexGoal", "HexPosition",
    "HexRules", "IllegalMove", "InconsistentSetup", "MalformedSgf", "MoveNotInRegion", "MoveOrdering",
    "OccupiedGrid", "PatternMismatch", "Position", "ProblemSpec", "RzError", "RzstNode", "SearchBudget",
    "SizeMismatch", "SolveResult", "Status", "SuicideMove", "TranspositionTable", "Verdict", "Zone",
    "achieve_goal", "check_cr_conditions", "from_diagram", "from_stones", "load_problem", "parse_sgf",
    "to_sgf", "unconditionally_alive", "verify_replay",
]
