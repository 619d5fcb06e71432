"""Named problems used by the regression tests, demos and ``problems/`` directory.

Each entry carries a board diagram (top row first), the side to move, the
goal and a priors text that fixes the move order used for the documented
search traces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import BLACK, WHITE, Color
from .board import from_diagram as go_diagram
from .hexgame import from_diagram as hex_diagram
from .problem import ProblemSpec, spec_from_position
from .solver import MoveOrdering, parse_priors


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    game: str
    diagram: str
    to_move: Color
    priors: str = ""
    crucial: tuple = ()
    target: tuple = ()
    max_depth: int = 30
    blurb: str = ""

    def position(self):
        if self.game == "hex":
            return hex_diagram(self.diagram.split(), self.to_move)
        return go_diagram(self.diagram, self.to_move)

    def spec(self) -> ProblemSpec:
        return spec_from_position(self.position(), self.game, self.crucial, self.target,
                                  source=(("GN", self.name),))

    def rules(self, **kw):
        return self.spec().rules(**kw)

    def ordering(self) -> MoveOrdering:
        if not self.priors:
            return MoveOrdering()
        return MoveOrdering("priors", parse_priors(self.priors, self.spec().size))


def _e(name, game, diagram, to_move, priors="", blurb="", **kw) -> CatalogEntry:
    return CatalogEntry(name, game, diagram.strip(), to_move, priors.strip(), blurb=blurb, **kw)


ENTRIES = [
    _e("corner_eye", "killall", """
        .......
        .......
        .......
        .......
        ....OOO
        ...O..O
        ....OO.
        """, BLACK, "B D1\nW E2",
       "White corner shape; Black moves first and White still lives."),
    _e("killall_wall", "killall", """
        ....X..
        ....X..
        ....X..
        ....X..
        XXXXXO.
        ....OOO
        .....O.
        """, BLACK, """
        B D2
        B F4
        W F4
        W D2
        W F5 if B G4
        W F6 if B G5
        W F7 if B G6
        W C2 if B D1
        W B2 if B C1
        W A2 if B B1
        """, "Black wall over a White group that can live on either side.", max_depth=30),
    _e("capture_dilation", "killall", """
        .......
        .......
        .....XO
        .....OX
        .....OX
        ...OOOX
        ...O..X
        """, WHITE, "W F1\nB G3\nW G2",
       "White captures four Black stones; the zone must grow over the capture."),
    _e("capture_dilation_control", "killall", """
        .......
        .......
        .....XO
        .....O.
        .....OX
        ...OOOX
        ...O..X
        """, WHITE, "W F1\nB G3\nW G2",
       "The capture position with G4 emptied, outside the undilated zone."),
    _e("border_dilation", "killall", """
        ....XXX
        ....X..
        ....OXX
        ....OX.
        ....XOO
        ..OOOXO
        ..O.O.O
        """, BLACK, "B G4\nW F1",
       "Filling G4 would change a Black block on the zone border."),
    _e("suicide_dilation", "killall", """
        ....XX.
        ....XOO
        ....OXX
        ....OX.
        ....XOO
        ..OOOX.
        ..O.O.O
        """, BLACK, "B G7\nW G2\nB G4\nW F1",
       "Black G4 is suicide here; the zone must include what makes it so."),
    _e("hex_bridge", "hex", """
        ....
        ..O.
        ....
        ....
        """, BLACK, "B B2\nB C2\nB B1\nW C2\nW B2\nW D2\nW B1",
       "White joins C3 to the bottom edge; Black's tries shrink to one grid.",
       crucial=("C3",), target=("bottom",), max_depth=16),
]

CATALOG = {e.name: e for e in ENTRIES}


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"no catalog entry {name!r}; known: {', '.join(CATALOG)}") from None


def export(directory, names=None) -> list:
    """Write each entry as a problem file plus a ``.priors`` sidecar; returns the paths written."""
    from pathlib import Path

    from .problem import format_hex, to_sgf

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for e in ENTRIES:
        if names is not None and e.name not in names:
            continue
        spec = e.spec()
        if e.game == "hex":
            path = d / f"{e.name}.hex"
            path.write_text(format_hex(spec))
        else:
            path = d / f"{e.name}.sgf"
            path.write_text(to_sgf(spec))
        written.append(path)
        if e.priors:
            side = path.with_suffix(".priors")
            side.write_text("\n".join(line.strip() for line in e.priors.splitlines()) + "\n")
            written.append(side)
    return written
