"""Go life-and-death rules bundled for the generic search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import board, dilation
from .benson import GoGoal, Status, goal_status
from .board import Color, Position
from .geometry import PASS
from .zone import Zone, ZonePattern, pattern_of


CACHE_SIZE = 1 << 18


@lru_cache(maxsize=CACHE_SIZE)
def _status(size: int, black: int, white: int, goal: GoGoal):
    return goal_status(Position(size, black, white), goal)


@lru_cache(maxsize=CACHE_SIZE)
def _legal(size: int, black: int, white: int, to_move: Color) -> tuple:
    return tuple(board.legal_moves(Position(size, black, white, to_move)))


@lru_cache(maxsize=CACHE_SIZE)
def _play(p: Position, m: int) -> Position:
    return board.play(p, m)


def clear_caches() -> None:
    for f in (_status, _legal, _play):
        f.cache_clear()


@dataclass(frozen=True)
class GoRules:
    """Rules, goal and rule flags for one Go problem.

    ``pass_and``/``pass_or`` control whether PASS is offered to the
    AND-player (attacker) and OR-player (defender).  With ``dilate`` off,
    zones are used exactly as unioned; that setting exists only as a
    negative control for the replay checks.
    """

    goal: GoGoal
    pass_and: bool = True
    pass_or: bool = False
    dilate: bool = True

    game = "go"

    @property
    def or_color(self):
        return self.goal.defender

    def is_or(self, p: Position) -> bool:
        return p.to_move == self.goal.defender

    def legal_moves(self, p: Position) -> list[int]:
        allow = self.pass_or if self.is_or(p) else self.pass_and
        moves = list(_legal(p.size, p.black, p.white, p.to_move))
        if allow:
            moves.append(PASS)
        return moves

    def is_legal(self, p: Position, m: int) -> bool:
        if m == PASS:
            return self.pass_or if self.is_or(p) else self.pass_and
        return board.is_legal(p, m)

    def play(self, p: Position, m: int) -> Position:
        return _play(p, m)

    def status(self, p: Position) -> tuple[Status, Zone | None]:
        return _status(p.size, p.black, p.white, self.goal)

    def dilate_or(self, p: Position, m: int, z_u: Zone) -> Zone:
        if not self.dilate:
            return z_u if m == PASS else z_u.add(1 << m)
        return dilation.dilate_or(p, m, z_u)

    def dilate_and(self, p: Position, z_u: Zone) -> Zone:
        if not self.dilate:
            return z_u
        return dilation.dilate_and(p, z_u)

    def changes_pattern(self, p: Position, m: int, z: Zone) -> bool:
        return dilation.changes_pattern(p, m, z)

    def pattern(self, p: Position, z: Zone) -> ZonePattern:
        return pattern_of(p.black, p.white, z)

    def is_valid(self, p: Position) -> bool:
        return board.is_valid(p)

    def ident(self) -> str:
        return f"go|{self.goal.ident()}|pass_and={self.pass_and}|pass_or={self.pass_or}"
