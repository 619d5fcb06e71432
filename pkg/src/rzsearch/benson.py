"""Benson's unconditional life and Go life-and-death goals."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .board import BLACK, WHITE, Block, Color, Position, blocks
from .errors import EmptyUcaSet
from .geometry import parse_grid
from .zone import Zone


@dataclass(frozen=True, slots=True)
class Region:
    """Maximal connected set of grids not holding ``player`` stones."""

    player: Color
    grids: int
    empties: int
    bordering: frozenset  # stone bitsets of the bordering player blocks


def regions(p: Position, player: Color, own_blocks: list[Block] | None = None) -> list[Region]:
    geo = p.geo
    own = p.stones(player)
    own_blocks = own_blocks if own_blocks is not None else blocks(p, player)
    empty = p.empty
    out = []
    for comp in geo.components(geo.full & ~own):
        halo = geo.grow(comp) & own
        border = frozenset(b.stones for b in own_blocks if b.stones & halo)
        out.append(Region(player, comp, comp & empty, border))
    return out


def _is_vital(region: Region, block: Block) -> bool:
    return block.stones in region.bordering and region.empties & ~block.liberties == 0


def vital_regions(p: Position, player: Color) -> dict[Block, list[Region]]:
    """For each ``player`` block, the regions whose empty grids are all its liberties."""
    bl = blocks(p, player)
    regs = regions(p, player, bl)
    return {b: [r for r in regs if _is_vital(r, b)] for b in bl}


def benson_fixpoint(
    p: Position, player: Color, rng: random.Random | None = None
) -> tuple[list[Block], list[Region]]:
    """Surviving blocks and the regions still enclosed by survivors.

    With ``rng`` given, blocks are removed one at a time in random order
    instead of all at once; the fixpoint is the same either way.
    """
    alive = blocks(p, player)
    regs = regions(p, player, alive)
    while True:
        stones = {b.stones for b in alive}
        regs = [r for r in regs if r.bordering <= stones]
        weak = [b for b in alive if sum(1 for r in regs if _is_vital(r, b)) < 2]
        if not weak:
            return alive, regs
        if rng is not None:
            victim = rng.choice(weak)
            alive = [b for b in alive if b is not victim]
        else:
            weak_ids = {id(b) for b in weak}
            alive = [b for b in alive if id(b) not in weak_ids]


def unconditionally_alive(p: Position, player: Color) -> list[Block]:
    return benson_fixpoint(p, player)[0]


def leaf_rzone(p: Position, uca: list[Block]) -> Zone:
    """Stones of the UCA blocks plus every region vital to one of them."""
    if not uca:
        raise EmptyUcaSet("leaf zone needs at least one unconditionally alive block")
    player = uca[0].owner
    bits = 0
    for b in uca:
        bits |= b.stones
    alive = {b.stones for b in uca}
    for r in regions(p, player, blocks(p, player)):
        if r.bordering and r.bordering <= alive and any(_is_vital(r, b) for b in uca):
            bits |= r.grids
    return Zone(p.size, bits)


class GoalKind(Enum):
    CRUCIAL_SAFETY = "crucial"
    KILL_ALL_DEFENSE = "killall"


class Status(Enum):
    ACHIEVED = "achieved"
    FAILED = "failed"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class GoGoal:
    """The defender (OR-player) wants some crucial stone, or any stone, to be UCA."""

    kind: GoalKind
    defender: Color = WHITE
    crucial: frozenset = frozenset()

    @classmethod
    def kill_all(cls, defender: Color = WHITE) -> "GoGoal":
        return cls(GoalKind.KILL_ALL_DEFENSE, Color(defender))

    @classmethod
    def crucial_safety(cls, size: int, crucial, defender: Color = WHITE) -> "GoGoal":
        idx = frozenset(parse_grid(g, size) if isinstance(g, str) else g for g in crucial)
        return cls(GoalKind.CRUCIAL_SAFETY, Color(defender), idx)

    @property
    def crucial_mask(self) -> int:
        m = 0
        for g in self.crucial:
            m |= 1 << g
        return m

    def ident(self) -> str:
        if self.kind is GoalKind.KILL_ALL_DEFENSE:
            return f"killall:{self.defender.name}"
        return f"crucial:{self.defender.name}:{sorted(self.crucial)}"


def goal_status(p: Position, g: GoGoal) -> tuple[Status, Zone | None]:
    defender = g.defender
    if g.kind is GoalKind.CRUCIAL_SAFETY:
        crucial = g.crucial_mask
        if not p.stones(defender) & crucial:
            return Status.FAILED, None
    elif not p.stones(defender):
        return Status.UNDECIDED, None
    uca = unconditionally_alive(p, defender)
    if g.kind is GoalKind.CRUCIAL_SAFETY:
        uca_hit = any(b.stones & crucial for b in uca)
    else:
        uca_hit = bool(uca)
    if uca_hit:
        return Status.ACHIEVED, leaf_rzone(p, uca)
    return Status.UNDECIDED, None
