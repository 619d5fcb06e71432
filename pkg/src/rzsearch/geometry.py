"""Grid coordinates and bitmask adjacency for square (Go) and hex boards.

A grid is stored as a single int index ``row * n + col``; row 0 is the
bottom row ("1" in Go notation) and column letters skip ``I``.  Sets of
grids are Python ints used as bitsets.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

COLUMN_LETTERS = "ABCDEFGHJKLMNOPQRST"
MIN_SIZE, MAX_SIZE = 2, 19

PASS = -1


def check_size(n: int) -> None:
    if not MIN_SIZE <= n <= MAX_SIZE:
        raise ValueError(f"board size must be in {MIN_SIZE}..{MAX_SIZE}, got {n}")


def grid(col: int, row: int, n: int) -> int:
    if not (0 <= col < n and 0 <= row < n):
        raise ValueError(f"grid ({col}, {row}) outside {n}x{n} board")
    return row * n + col


def grid_name(idx: int, n: int) -> str:
    if idx == PASS:
        return "pass"
    row, col = divmod(idx, n)
    return f"{COLUMN_LETTERS[col]}{row + 1}"


def parse_grid(text: str, n: int) -> int:
    """Parse ``"E2"`` style coordinates (``"pass"`` gives PASS)."""
    text = text.strip().upper()
    if text == "PASS":
        return PASS
    col = COLUMN_LETTERS.find(text[:1])
    try:
        row = int(text[1:]) - 1
    except ValueError:
        raise ValueError(f"bad grid name {text!r}") from None
    if col < 0:
        raise ValueError(f"bad grid name {text!r}")
    return grid(col, row, n)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class Geometry:
    """Precomputed adjacency for one board size and topology."""

    def __init__(self, n: int, hexagonal: bool = False):
        check_size(n)
        self.n = n
        self.hexagonal = hexagonal
        self.area = n * n
        self.full = (1 << self.area) - 1
        col0 = mask_of(r * n for r in range(n))
        last = mask_of(r * n + n - 1 for r in range(n))
        self.not_col0 = self.full & ~col0
        self.not_last = self.full & ~last
        self.rows = [mask_of(r * n + c for c in range(n)) for r in range(n)]
        self.cols = [mask_of(r * n + c for r in range(n)) for c in range(n)]
        self.neighbors = [self.grow(1 << i) for i in range(self.area)]
        self.neighbor_lists = [list(iter_bits(m)) for m in self.neighbors]

    def grow(self, m: int) -> int:
        """Grids adjacent to ``m`` (excluding ``m`` itself unless adjacent)."""
        n = self.n
        out = ((m << 1) & self.not_col0) | ((m >> 1) & self.not_last) | (m << n) | (m >> n)
        if self.hexagonal:
            out |= ((m << (n + 1)) & self.not_col0) | ((m >> (n + 1)) & self.not_last)
        return out & self.full

    def flood(self, allowed: int, seed: int) -> int:
        """Connected component of ``allowed`` containing the bits of ``seed``."""
        blk = seed & allowed
        while True:
            nxt = (blk | self.grow(blk)) & allowed
            if nxt == blk:
                return blk
            blk = nxt

    def components(self, allowed: int) -> list[int]:
        out = []
        rest = allowed
        while rest:
            comp = self.flood(allowed, rest & -rest)
            out.append(comp)
            rest &= ~comp
        return out


@lru_cache(maxsize=None)
def square(n: int) -> Geometry:
    return Geometry(n, hexagonal=False)


@lru_cache(maxsize=None)
def hexagon(n: int) -> Geometry:
    return Geometry(n, hexagonal=True)


@lru_cache(maxsize=None)
def zobrist(n: int) -> tuple[list[int], list[int], int]:
    """Random 64-bit keys per (grid, color) plus a side-to-move key."""
    rng = random.Random(0x525A5300 + n)
    black = [rng.getrandbits(64) for _ in range(n * n)]
    white = [rng.getrandbits(64) for _ in range(n * n)]
    return black, white, rng.getrandbits(64)
