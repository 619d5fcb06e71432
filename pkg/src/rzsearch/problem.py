"""Problem files: an SGF subset for Go and a small text format for Hex."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from pathlib import Path

from .benson import GoGoal
from .board import BLACK, WHITE, Color, from_stones, is_valid
from .errors import InconsistentSetup, MalformedSgf
from .geometry import check_size, grid_name, parse_grid
from .go import GoRules
from .hexgame import (SIDE_OWNER, HexGoal, HexPosition, HexProblem, HexRules, format_hex_problem,
                      parse_hex_problem)

GAMES = ("go", "killall", "hex")


@dataclass(frozen=True)
class ProblemSpec:
    """Everything needed to pose one problem.

    Stones and crucial grids are stored as sorted tuples of names such as
    ``"E2"``.  ``game`` is ``go`` (keep a marked stone safe), ``killall``
    (keep any stone safe) or ``hex`` (connect).
    """

    game: str
    size: int
    black: tuple = ()
    white: tuple = ()
    to_move: Color = BLACK
    crucial: tuple = ()
    target: tuple = ()
    source: tuple = ()  # (key, value) metadata pairs

    def __post_init__(self):
        if self.game not in GAMES:
            raise ValueError(f"unknown game {self.game!r}")
        check_size(self.size)
        norm = lambda gs: tuple(sorted({grid_name(parse_grid(g, self.size), self.size) for g in gs},  # noqa: E731
                                       key=lambda g: parse_grid(g, self.size)))
        object.__setattr__(self, "black", norm(self.black))
        object.__setattr__(self, "white", norm(self.white))
        object.__setattr__(self, "crucial", norm(self.crucial))
        object.__setattr__(self, "to_move", Color(self.to_move))
        if set(self.black) & set(self.white):
            raise InconsistentSetup("a grid holds both colours")

    @property
    def defender(self) -> Color:
        if self.game == "hex":
            return SIDE_OWNER[self.target[0]] if self.target else WHITE
        if self.crucial:
            return BLACK if self.crucial[0] in self.black else WHITE
        return WHITE

    def position(self):
        if self.game == "hex":
            return HexPosition(self.size, _mask(self.black, self.size), _mask(self.white, self.size), self.to_move)
        return from_stones(self.size, self.black, self.white, self.to_move)

    def goal(self):
        if self.game == "hex":
            return HexGoal.make(self.size, self.crucial, self.target or ("bottom",), self.defender)
        if self.game == "killall":
            return GoGoal.kill_all(WHITE)
        return GoGoal.crucial_safety(self.size, self.crucial, self.defender)

    def rules(self, pass_and: bool = True, pass_or: bool = False):
        if self.game == "hex":
            return HexRules(self.goal())
        return GoRules(self.goal(), pass_and=pass_and, pass_or=pass_or)

    def with_game(self, game: str) -> "ProblemSpec":
        return ProblemSpec(game, self.size, self.black, self.white, self.to_move, self.crucial, self.target, self.source)

    def meta(self, key: str, default=None):
        return dict(self.source).get(key, default)


def _mask(names, size: int) -> int:
    m = 0
    for g in names:
        m |= 1 << parse_grid(g, size)
    return m


def spec_from_position(p, game: str, crucial=(), target=(), source=()) -> ProblemSpec:
    n = p.size
    names = lambda bits: [grid_name(g, n) for g in range(n * n) if bits >> g & 1]  # noqa: E731
    return ProblemSpec(game, n, names(p.black), names(p.white), p.to_move, tuple(crucial), tuple(target), tuple(source))


# --------------------------------------------------------------------------
# SGF


_PROP = re.compile(rb"\s*([A-Za-z]+)")
_VALUE = re.compile(rb"\s*\[((?:[^\]\\]|\\.)*)\]", re.S)


def _sgf_point(value: str, size: int, offset: int) -> str:
    if len(value) != 2 or not value.isalpha():
        raise MalformedSgf(f"bad point {value!r}", offset)
    col, row = ord(value[0].lower()) - 97, ord(value[1].lower()) - 97
    if not (0 <= col < size and 0 <= row < size):
        raise MalformedSgf(f"point {value!r} outside the board", offset)
    return grid_name((size - 1 - row) * size + col, size)


def _sgf_coord(name: str, size: int) -> str:
    idx = parse_grid(name, size)
    row, col = divmod(idx, size)
    return chr(97 + col) + chr(97 + size - 1 - row)


def _parse_props(data: bytes) -> list[tuple[str, list[str], int]]:
    text = data.lstrip()
    start = len(data) - len(text)
    if not text:
        raise MalformedSgf("empty input", 0)
    if not text.startswith(b"("):
        raise MalformedSgf("expected '('", start)
    pos = start + 1
    m = re.compile(rb"\s*;").match(data, pos)
    if not m:
        raise MalformedSgf("expected ';' opening the root node", pos)
    pos = m.end()
    props = []
    while True:
        m = _PROP.match(data, pos)
        if not m:
            break
        ident = m.group(1).decode()
        if not ident.isupper():
            raise MalformedSgf(f"property name {ident!r} must be upper case", m.start(1))
        at = m.start(1)
        pos = m.end()
        values = []
        while True:
            v = _VALUE.match(data, pos)
            if not v:
                break
            values.append(v.group(1).decode("utf-8", "replace").replace("\\]", "]"))
            pos = v.end()
        if not values:
            raise MalformedSgf(f"property {ident} has no value", pos)
        props.append((ident, values, at))
    rest = data[pos:].lstrip()
    here = len(data) - len(rest)
    if rest.startswith(b";") or rest.startswith(b"("):
        raise MalformedSgf("only a single root node is supported", here)
    if not rest.startswith(b")"):
        raise MalformedSgf("expected ')'", here)
    if rest[1:].strip():
        raise MalformedSgf("trailing data after the game tree", here + 1)
    return props


def parse_sgf(data: bytes | str, game: str | None = None) -> ProblemSpec:
    """Parse a single-node SGF problem (``SZ``, ``AB``, ``AW``, ``PL``, ``MA``).

    Without ``MA`` marks the problem is kill-all; ``RU[killall]`` forces
    that mode and ``game`` overrides both.  ``KM`` is accepted and ignored.
    """
    if isinstance(data, str):
        data = data.encode()
    props = _parse_props(data)
    seen = {}
    for ident, values, at in props:
        if ident in seen:
            raise MalformedSgf(f"duplicate property {ident}", at)
        seen[ident] = (values, at)
    size = 19
    if "SZ" in seen:
        values, at = seen["SZ"]
        try:
            size = int(values[0])
            check_size(size)
        except ValueError:
            raise MalformedSgf(f"bad board size {values[0]!r}", at) from None
    pts = {}
    for key in ("AB", "AW", "MA"):
        values, at = seen.get(key, ([], 0))
        pts[key] = [_sgf_point(v, size, at) for v in values]
    to_move = BLACK
    if "PL" in seen:
        values, at = seen["PL"]
        if values[0].upper() not in ("B", "W"):
            raise MalformedSgf(f"bad player {values[0]!r}", at)
        to_move = BLACK if values[0].upper() == "B" else WHITE
    if "KM" in seen:
        warnings.warn("KM (komi) is ignored by the solver", stacklevel=2)
    rule = seen.get("RU", ([""], 0))[0][0].lower()
    source = tuple((k, seen[k][0][0]) for k in ("GN", "SO", "C") if k in seen)
    marks = pts["MA"]
    if game == "hex":
        raise ValueError("Hex problems use the text format")
    if game is None:
        game = "killall" if rule == "killall" or not marks else "go"
    if game == "go":
        if not marks:
            raise InconsistentSetup("a safety problem needs MA marks on crucial stones")
        black, white = set(pts["AB"]), set(pts["AW"])
        if not all(g in black for g in marks) and not all(g in white for g in marks):
            raise InconsistentSetup("MA marks must all sit on stones of one colour")
    elif game == "killall":
        marks = []
    spec = ProblemSpec(game, size, pts["AB"], pts["AW"], to_move, tuple(marks), (), source)
    if not is_valid(spec.position()):
        raise InconsistentSetup("setup has a block without liberties")
    return spec


def to_sgf(spec: ProblemSpec) -> str:
    """Serialize a Go problem; ``parse_sgf(to_sgf(s)) == s``."""
    if spec.game == "hex":
        raise ValueError("Hex problems use the text format")
    n = spec.size
    parts = ["(;FF[4]GM[1]", f"SZ[{n}]"]
    if spec.game == "killall":
        parts.append("RU[killall]")
    for key, names in (("AB", spec.black), ("AW", spec.white), ("MA", spec.crucial)):
        if names:
            parts.append(key + "".join(f"[{_sgf_coord(g, n)}]" for g in names))
    parts.append(f"PL[{'B' if spec.to_move == BLACK else 'W'}]")
    for k, v in spec.source:
        parts.append(f"{k}[{v.replace(']', chr(92) + ']')}]")
    return "".join(parts) + ")\n"


# --------------------------------------------------------------------------
# Hex text format


def parse_hex(text: str) -> ProblemSpec:
    """Read the Hex text format (see :func:`rzsearch.hexgame.parse_hex_problem`) plus an optional ``name:`` line."""
    source, body = [], []
    for line in text.splitlines():
        if line.strip().lower().startswith("name:"):
            source.append(("GN", line.split(":", 1)[1].strip()))
        else:
            body.append(line)
    prob = parse_hex_problem("\n".join(body))
    spec = spec_from_position(prob.position, "hex", target=prob.goal.target, source=source,
                              crucial=[grid_name(g, prob.position.size) for g in prob.goal.crucial])
    owned = spec.white if prob.goal.player == WHITE else spec.black
    for g in spec.crucial:
        if g not in owned:
            raise InconsistentSetup(f"crucial grid {g} does not hold a stone of the connecting side")
    return spec


def format_hex(spec: ProblemSpec) -> str:
    text = format_hex_problem(HexProblem(spec.position(), spec.goal()))
    name = spec.meta("GN")
    return text + (f"name: {name}\n" if name else "")


def load_problem(path: str | Path, game: str | None = None) -> ProblemSpec:
    """Read ``.sgf`` or ``.hex`` files; ``game`` overrides the inferred mode."""
    path = Path(path)
    if path.suffix.lower() == ".hex" or game == "hex":
        return parse_hex(path.read_text())
    return parse_sgf(path.read_bytes(), game)
