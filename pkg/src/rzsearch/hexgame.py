"""Hex on an n x n parallelogram, with connection goals.

Cell (c, r) touches (c±1, r), (c, r±1), (c-1, r-1) and (c+1, r+1).  White
owns the bottom (row 1) and top sides, Black the left and right sides.
There are no captures and no forbidden placements, so zone dilation is
the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .benson import Status
from .board import BLACK, EMPTY, WHITE, Color
from .errors import OccupiedGrid
from .geometry import PASS, Geometry, grid_name, hexagon, iter_bits, parse_grid, zobrist
from .zone import Zone, ZonePattern, pattern_of

SIDES = ("bottom", "top", "left", "right")
SIDE_OWNER = {"bottom": WHITE, "top": WHITE, "left": BLACK, "right": BLACK}


@dataclass(frozen=True, slots=True)
class HexPosition:
    size: int
    black: int = 0
    white: int = 0
    to_move: Color = BLACK
    key: int = field(default=-1, compare=False)

    def __post_init__(self):
        if self.key == -1:
            kb, kw, side = zobrist(self.size)
            h = side if self.to_move == WHITE else 0
            for g in iter_bits(self.black):
                h ^= kb[g]
            for g in iter_bits(self.white):
                h ^= kw[g]
            object.__setattr__(self, "key", h)

    @property
    def geo(self) -> Geometry:
        return hexagon(self.size)

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

    def __str__(self) -> str:
        return render(self)


def side_mask(geo: Geometry, side: str) -> int:
    n = geo.n
    return {
        "bottom": geo.rows[0],
        "top": geo.rows[n - 1],
        "left": geo.cols[0],
        "right": geo.cols[n - 1],
    }[side]


def hex_play(p: HexPosition, g: int) -> HexPosition:
    if g == PASS:
        raise ValueError("Hex has no pass move")
    bit = 1 << g
    if (p.black | p.white) & bit:
        raise OccupiedGrid(f"{grid_name(g, p.size)} is occupied")
    kb, kw, side = zobrist(p.size)
    if p.to_move == BLACK:
        return HexPosition(p.size, p.black | bit, p.white, WHITE, p.key ^ kb[g] ^ side)
    return HexPosition(p.size, p.black, p.white | bit, BLACK, p.key ^ kw[g] ^ side)


@dataclass(frozen=True)
class HexGoal:
    """Connect every crucial stone, and every target side, in one ``player`` block."""

    crucial: frozenset = frozenset()
    target: tuple = ("bottom",)
    player: Color = WHITE

    @classmethod
    def make(cls, size: int, crucial=(), target=("bottom",), player: Color = WHITE) -> "HexGoal":
        if isinstance(target, str):
            target = (target,)
        for s in target:
            if s not in SIDES:
                raise ValueError(f"unknown side {s!r}")
            if SIDE_OWNER[s] != player:
                raise ValueError(f"side {s!r} does not belong to {Color(player).name}")
        idx = frozenset(parse_grid(g, size) if isinstance(g, str) else g for g in crucial)
        if not idx and len(target) < 2:
            raise ValueError("a goal without crucial stones needs two target sides")
        return cls(idx, tuple(target), Color(player))

    @property
    def crucial_mask(self) -> int:
        m = 0
        for g in self.crucial:
            m |= 1 << g
        return m

    def ident(self) -> str:
        return f"hex:{self.player.name}:{sorted(self.crucial)}:{','.join(self.target)}"


def _connects(geo: Geometry, cells: int, goal: HexGoal) -> int:
    """The component of ``cells`` joining all crucial grids and target sides, else 0."""
    crucial = goal.crucial_mask
    sides = [side_mask(geo, s) for s in goal.target]
    seed = crucial & -crucial if crucial else sides[0] & cells
    if not seed:
        return 0
    comps = [geo.flood(cells, seed)] if crucial else geo.components(cells & geo.flood(cells, seed))
    for comp in comps:
        if crucial & ~comp:
            continue
        if all(comp & s for s in sides):
            return comp
    return 0


def hex_goal_status(p: HexPosition, g: HexGoal) -> tuple[Status, Zone | None]:
    geo = p.geo
    own = p.stones(g.player)
    if g.crucial_mask & ~own:
        return Status.FAILED, None
    block = _connects(geo, own, g)
    if block:
        return Status.ACHIEVED, Zone(p.size, block)
    if not _connects(geo, own | p.empty, g):
        return Status.FAILED, None
    return Status.UNDECIDED, None


def hex_dilate(z: Zone) -> Zone:
    return z


@dataclass(frozen=True)
class HexRules:
    goal: HexGoal

    game = "hex"

    def is_or(self, p: HexPosition) -> bool:
        return p.to_move == self.goal.player

    def legal_moves(self, p: HexPosition) -> list[int]:
        return list(iter_bits(p.empty))

    def is_legal(self, p: HexPosition, m: int) -> bool:
        return m != PASS and bool(p.empty >> m & 1)

    def play(self, p: HexPosition, m: int) -> HexPosition:
        return hex_play(p, m)

    def status(self, p: HexPosition):
        return hex_goal_status(p, self.goal)

    def dilate_or(self, p: HexPosition, m: int, z_u: Zone) -> Zone:
        return hex_dilate(z_u.add(1 << m))

    def dilate_and(self, p: HexPosition, z_u: Zone) -> Zone:
        return hex_dilate(z_u)

    def changes_pattern(self, p: HexPosition, m: int, z: Zone) -> bool:
        return z.contains(m)

    def pattern(self, p: HexPosition, z: Zone) -> ZonePattern:
        return pattern_of(p.black, p.white, z)

    def is_valid(self, p: HexPosition) -> bool:
        return True

    def ident(self) -> str:
        return self.goal.ident()


def from_diagram(rows, to_move: Color = BLACK) -> HexPosition:
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
            elif ch != ".":
                raise ValueError(f"unexpected board character {ch!r}")
    return HexPosition(n, black, white, Color(to_move))


def render(p: HexPosition, z: Zone | None = None) -> str:
    """Rows top first, each shifted so the parallelogram reads naturally."""
    n = p.size
    zrows = z.rows() if z is not None else None
    lines = []
    for i, r in enumerate(reversed(range(n))):
        cells = "".join(p.at(r * n + c).char for c in range(n))
        line = f"{r + 1:>2} {' ' * r}{cells}"
        if zrows is not None:
            line += " " * (n - r + 2) + zrows[i]
        lines.append(line)
    return "\n".join(lines)


@dataclass(frozen=True)
class HexProblem:
    position: HexPosition
    goal: HexGoal


def parse_hex_problem(text: str) -> HexProblem:
    """Parse the ``size`` / rows / ``to_move:`` / ``crucial:`` / ``target:`` text format."""
    size = None
    rows: list[str] = []
    to_move, crucial, target = BLACK, [], ["bottom"]
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition(":") if ":" in line else (line.split()[0], "", " ".join(line.split()[1:]))
        key = key.strip().lower()
        val = val.strip()
        if key == "size":
            size = int(val)
        elif key == "to_move":
            to_move = BLACK if val.upper().startswith("B") else WHITE
        elif key == "crucial":
            crucial = val.replace(",", " ").split()
        elif key == "target":
            target = val.replace(",", " ").split()
        else:
            rows.append(line.replace(" ", ""))
    if size is None or len(rows) != size:
        raise ValueError("hex problem needs 'size N' followed by N board rows")
    pos = from_diagram(rows, to_move)
    player = SIDE_OWNER[target[0]]
    return HexProblem(pos, HexGoal.make(size, crucial, tuple(target), player))


def format_hex_problem(prob: HexProblem) -> str:
    p, g = prob.position, prob.goal
    n = p.size
    lines = [f"size {n}"]
    for r in reversed(range(n)):
        lines.append("".join(p.at(r * n + c).char for c in range(n)))
    lines.append(f"to_move: {'B' if p.to_move == BLACK else 'W'}")
    if g.crucial:
        lines.append("crucial: " + " ".join(grid_name(c, n) for c in sorted(g.crucial)))
    lines.append("target: " + " ".join(g.target))
    return "\n".join(lines) + "\n"
