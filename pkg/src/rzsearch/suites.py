"""Position generators: exhaustive small-board sweeps and a seeded corner-problem suite."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from .benson import GoGoal, Status
from .board import BLACK, WHITE, Position, is_valid
from .geometry import square
from .go import GoRules
from .hexgame import HexPosition
from .solver import SearchBudget, Verdict, achieve_goal


def go_positions(size: int, max_stones: int):
    """Every valid ``size`` x ``size`` Go position with at most ``max_stones`` stones, both sides to move."""
    area = size * size
    for k in range(max_stones + 1):
        for cells in itertools.combinations(range(area), k):
            for colors in itertools.product((BLACK, WHITE), repeat=k):
                b = w = 0
                for g, c in zip(cells, colors):
                    if c == BLACK:
                        b |= 1 << g
                    else:
                        w |= 1 << g
                for to_move in (BLACK, WHITE):
                    p = Position(size, b, w, to_move)
                    if is_valid(p):
                        yield p


def hex_positions(size: int, max_stones: int):
    """Every Hex position with at most ``max_stones`` stones, both sides to move."""
    area = size * size
    for k in range(max_stones + 1):
        for cells in itertools.combinations(range(area), k):
            for colors in itertools.product((BLACK, WHITE), repeat=k):
                b = w = 0
                for g, c in zip(cells, colors):
                    if c == BLACK:
                        b |= 1 << g
                    else:
                        w |= 1 << g
                for to_move in (BLACK, WHITE):
                    yield HexPosition(size, b, w, to_move)


def corner_candidate(rng, sizes=(5, 6, 7)) -> Position:
    """A random White group in the lower-right corner, a few Black stones, either side to move."""
    n = rng.choice(sizes)
    geo = square(n)
    corner = [r * n + c for r in range(3) for c in range(n - 4, n)]
    white = 1 << rng.choice(corner)
    for _ in range(rng.randrange(5, 9)):
        frontier = [g for g in corner if (geo.grow(white) & ~white) >> g & 1]
        white |= 1 << rng.choice(frontier)
    black = 0
    free = [g for g in corner if not white >> g & 1]
    for g in rng.sample(free, min(len(free), rng.randrange(0, 3))):
        black |= 1 << g
    outside = [g for g in range(n * n) if not (geo.grow(white) | white | black) >> g & 1]
    for g in rng.sample(outside, rng.randrange(0, 3)):
        black |= 1 << g
    return Position(n, black, white, rng.choice((BLACK, WHITE)))


def corner_suite(count: int = 20, seed: int = 1, max_nodes: int = 5000, max_depth: int = 30,
                 max_tries: int = 20000) -> list[Position]:
    """Distinct kill-all corner problems that relevance-zone search decides within ``max_nodes``.

    Candidates already decided at the root, or settled in fewer than five
    nodes, are skipped.  Plain search is never consulted while selecting.
    """
    rules = GoRules(GoGoal.kill_all())
    rng = random.Random(seed)
    chosen: list[Position] = []
    seen = set()
    for _ in range(max_tries):
        if len(chosen) == count:
            break
        p = corner_candidate(rng)
        ident = (p.size, p.black, p.white, p.to_move)
        if ident in seen or not is_valid(p) or rules.status(p)[0] is not Status.UNDECIDED:
            continue
        seen.add(ident)
        r = achieve_goal(p, rules, SearchBudget(max_nodes=max_nodes, max_depth=max_depth))
        if r.status is not Verdict.UNKNOWN and r.stats.nodes >= 5:
            chosen.append(p)
    return chosen


def write_corner_suite(directory, **kw) -> list[Path]:
    from .problem import spec_from_position, to_sgf

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, p in enumerate(corner_suite(**kw), 1):
        name = f"corner_{i:02d}"
        path = d / f"{name}.sgf"
        path.write_text(to_sgf(spec_from_position(p, "killall", source=(("GN", name),))))
        paths.append(path)
    return paths


if __name__ == "__main__":
    import argparse

    ap = argparse.ArgumentParser(description="Write the small-board corner suite as SGF files.")
    ap.add_argument("out")
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    for path in write_corner_suite(args.out, count=args.count, seed=args.seed):
        print(path)
