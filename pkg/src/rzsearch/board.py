"""Go rules on bitboards: positions, blocks, captures, suicide, hashing."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import IntEnum

from .errors import OccupiedGrid, SuicideMove
from .geometry import PASS, Geometry, grid_name, iter_bits, parse_grid, square, zobrist
from .zone import Zone, ZonePattern, pattern_of


class Color(IntEnum):
    EMPTY = 0
    BLACK = 1
    WHITE = 2

    @property
    def opponent(self) -> "Color":
        return Color(3 - self)

    @property
    def char(self) -> str:
        return ".XO"[self]


BLACK, WHITE, EMPTY = Color.BLACK, Color.WHITE, Color.EMPTY


@dataclass(frozen=True, slots=True)
class Position:
    """Board configuration plus the player to move.

    ``black``/``white`` are bitsets over grid indices.  ``key`` is the
    incrementally maintained 64-bit Zobrist hash and is excluded from
    equality (it is a function of the other fields).
    """

    size: int
    black: int = 0
    white: int = 0
    to_move: Color = BLACK
    key: int = field(default=-1, compare=False)

    def __post_init__(self):
        if self.key == -1:
            object.__setattr__(self, "key", scratch_hash(self))

    @property
    def geo(self) -> Geometry:
        return square(self.size)

    @property
    def occupied(self) -> int:
        return self.black | self.white

    @property
    def empty(self) -> int:
        return self.geo.full & ~(self.black | self.white)

    def stones(self, color: Color) -> int:
        return self.black if color == BLACK else self.white

    def at(self, g: int) -> Color:
        if self.black >> g & 1:
            return BLACK
        if self.white >> g & 1:
            return WHITE
        return EMPTY

    def with_to_move(self, color: Color) -> "Position":
        return replace(self, to_move=Color(color), key=-1)

    def __str__(self) -> str:
        return render(self)


def scratch_hash(p: Position) -> int:
    kb, kw, side = zobrist(p.size)
    h = 0
    for g in iter_bits(p.black):
        h ^= kb[g]
    for g in iter_bits(p.white):
        h ^= kw[g]
    if p.to_move == WHITE:
        h ^= side
    return h


def from_diagram(rows: list[str] | str, to_move: Color = BLACK) -> Position:
    """Build a position from text rows (top row first) of ``X``, ``O``, ``.``."""
    if isinstance(rows, str):
        rows = [r.strip() for r in rows.strip().splitlines() if r.strip()]
    rows = [r.replace(" ", "") for r in rows]
    n = len(rows)
    black = white = 0
    for i, line in enumerate(rows):
        if len(line) != n:
            raise ValueError(f"row {i} has {len(line)} cells, expected {n}")
        r = n - 1 - i
        for c, ch in enumerate(line):
            if ch in "Xx":
                black |= 1 << (r * n + c)
            elif ch in "Oo":
                white |= 1 << (r * n + c)
            elif ch not in ".+":
                raise ValueError(f"unexpected board character {ch!r}")
    return Position(n, black, white, Color(to_move))


def from_stones(size: int, black=(), white=(), to_move: Color = BLACK) -> Position:
    def bits(gs):
        m = 0
        for g in gs:
            m |= 1 << (parse_grid(g, size) if isinstance(g, str) else g)
        return m

    return Position(size, bits(black), bits(white), Color(to_move))


@dataclass(frozen=True, slots=True)
class Block:
    owner: Color
    stones: int
    liberties: int

    def grids(self, n: int) -> list[str]:
        return [grid_name(g, n) for g in iter_bits(self.stones)]


def liberties(p: Position, stones: int) -> int:
    geo = p.geo
    return geo.grow(stones) & geo.full & ~(p.black | p.white)


def block_at(p: Position, g: int) -> Block:
    color = p.at(g)
    if color == EMPTY:
        raise ValueError(f"no stone at {grid_name(g, p.size)}")
    stones = p.geo.flood(p.stones(color), 1 << g)
    return Block(color, stones, liberties(p, stones))


def blocks(p: Position, color: Color | None = None) -> list[Block]:
    """All maximal 4-connected same-colour blocks, ordered by lowest grid."""
    geo = p.geo
    empty = geo.full & ~(p.black | p.white)
    out = []
    colors = (BLACK, WHITE) if color is None else (color,)
    for c in colors:
        for comp in geo.components(p.stones(c)):
            out.append(Block(c, comp, geo.grow(comp) & empty))
    out.sort(key=lambda b: b.stones & -b.stones)
    return out


def blocks_touching(p: Position, color: Color, mask: int) -> int:
    """Union of the ``color`` blocks having a stone adjacent to or inside ``mask``."""
    geo = p.geo
    own = p.stones(color)
    seeds = (geo.grow(mask) | mask) & own
    return geo.flood(own, seeds) if seeds else 0


def play(p: Position, m: int) -> Position:
    """Play ``m`` (grid index or PASS) for the side to move."""
    kb, kw, side = zobrist(p.size)
    if m == PASS:
        return Position(p.size, p.black, p.white, p.to_move.opponent, p.key ^ side)
    bit = 1 << m
    if (p.black | p.white) & bit:
        raise OccupiedGrid(f"{grid_name(m, p.size)} is occupied")
    geo = p.geo
    if p.to_move == BLACK:
        me, opp, kme, kopp = p.black | bit, p.white, kb, kw
    else:
        me, opp, kme, kopp = p.white | bit, p.black, kw, kb
    key = p.key ^ kme[m] ^ side
    occupied = me | opp
    captured = 0
    for nb in geo.neighbor_lists[m]:
        if opp >> nb & 1 and not captured >> nb & 1:
            blk = geo.flood(opp, 1 << nb)
            if not geo.grow(blk) & ~occupied:
                captured |= blk
    if captured:
        opp &= ~captured
        for g in iter_bits(captured):
            key ^= kopp[g]
    else:
        own = geo.flood(me, bit)
        if not geo.grow(own) & ~(me | opp) & geo.full:
            raise SuicideMove(f"{grid_name(m, p.size)} is suicide for {p.to_move.name}")
    if p.to_move == BLACK:
        return Position(p.size, me, opp, WHITE, key)
    return Position(p.size, opp, me, BLACK, key)


def captures(p: Position, m: int) -> int:
    """Opponent stones that placing at ``m`` would capture (0 if none or PASS)."""
    if m == PASS:
        return 0
    geo = p.geo
    bit = 1 << m
    me = p.stones(p.to_move) | bit
    opp = p.stones(p.to_move.opponent)
    occupied = me | opp
    captured = 0
    for nb in geo.neighbor_lists[m]:
        if opp >> nb & 1 and not captured >> nb & 1:
            blk = geo.flood(opp, 1 << nb)
            if not geo.grow(blk) & ~occupied:
                captured |= blk
    return captured


def is_legal(p: Position, m: int) -> bool:
    if m == PASS:
        return True
    bit = 1 << m
    if (p.black | p.white) & bit:
        return False
    geo = p.geo
    nbrs = geo.neighbors[m]
    if nbrs & ~(p.black | p.white):
        return True
    if captures(p, m):
        return True
    me = p.stones(p.to_move) | bit
    own = geo.flood(me, bit)
    return bool(geo.grow(own) & ~(me | p.stones(p.to_move.opponent)) & geo.full)


def legal_moves(p: Position, allow_pass: bool = False) -> list[int]:
    """Non-suicidal placements in grid order, then PASS if enabled."""
    moves = [g for g in iter_bits(p.empty) if is_legal(p, g)]
    if allow_pass:
        moves.append(PASS)
    return moves


def is_valid(p: Position) -> bool:
    """Every block has at least one liberty."""
    return all(b.liberties for b in blocks(p))


def zone_pattern(p: Position, z: Zone) -> ZonePattern:
    return pattern_of(p.black, p.white, z)


def render(p: Position, z: Zone | None = None) -> str:
    """ASCII board, top row first; with a zone, a ``#`` overlay is appended per row."""
    n = p.size
    lines = []
    zrows = z.rows() if z is not None else None
    for i, r in enumerate(reversed(range(n))):
        cells = "".join(p.at(r * n + c).char for c in range(n))
        line = f"{r + 1:>2} {cells}"
        if zrows is not None:
            line += f"   {zrows[i]}"
        lines.append(line)
    letters = "   " + "".join("ABCDEFGHJKLMNOPQRST"[:n])
    if z is not None:
        letters += "   " + "ABCDEFGHJKLMNOPQRST"[:n]
    lines.append(letters)
    return "\n".join(lines)


def parse_overlay(text: str) -> Zone:
    """Recover the zone from a :func:`render` overlay."""
    rows = []
    for line in text.splitlines():
        parts = line.split()
        if len(parts) == 3 and parts[0].isdigit():
            rows.append(parts[2])
    return Zone.parse("/".join(rows))
