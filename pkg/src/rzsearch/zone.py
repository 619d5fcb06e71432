"""Zones (grid sets) and zone patterns."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SizeMismatch
from .geometry import check_size, grid_name, iter_bits, mask_of, parse_grid, square


@dataclass(frozen=True, slots=True)
class Zone:
    """A set of grids on an ``size`` x ``size`` board, stored as a bitset."""

    size: int
    bits: int = 0

    def __post_init__(self):
        check_size(self.size)
        if self.bits >> (self.size * self.size):
            raise ValueError("zone has members outside the board")

    @classmethod
    def empty(cls, size: int) -> "Zone":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "Zone":
        return cls(size, (1 << (size * size)) - 1)

    @classmethod
    def from_grids(cls, size: int, grids: Iterable[int | str]) -> "Zone":
        idx = [parse_grid(g, size) if isinstance(g, str) else g for g in grids]
        return cls(size, mask_of(idx))

    def _check(self, other: "Zone") -> None:
        if other.size != self.size:
            raise SizeMismatch(f"zone sizes differ: {self.size} vs {other.size}")

    def union(self, other: "Zone") -> "Zone":
        self._check(other)
        return Zone(self.size, self.bits | other.bits)

    def intersect(self, other: "Zone") -> "Zone":
        self._check(other)
        return Zone(self.size, self.bits & other.bits)

    def difference(self, other: "Zone") -> "Zone":
        self._check(other)
        return Zone(self.size, self.bits & ~other.bits)

    __or__ = union
    __and__ = intersect
    __sub__ = difference

    def add(self, mask: int) -> "Zone":
        return Zone(self.size, self.bits | mask)

    def contains(self, g: int) -> bool:
        return g >= 0 and bool(self.bits >> g & 1)

    __contains__ = contains

    def issubset(self, other: "Zone") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def complement(self) -> "Zone":
        return Zone(self.size, ~self.bits & ((1 << self.size * self.size) - 1))

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def names(self) -> list[str]:
        return [grid_name(g, self.size) for g in self]

    def rows(self) -> list[str]:
        """One string per board row, top row first: ``#`` member, ``.`` not."""
        n = self.size
        return [
            "".join("#" if self.bits >> (r * n + c) & 1 else "." for c in range(n))
            for r in reversed(range(n))
        ]

    def serialize(self) -> str:
        return "/".join(self.rows())

    @classmethod
    def parse(cls, text: str) -> "Zone":
        rows = [r for r in text.replace("\n", "/").split("/") if r]
        n = len(rows)
        bits = 0
        for i, line in enumerate(rows):
            if len(line) != n:
                raise ValueError(f"zone row {i} has length {len(line)}, expected {n}")
            r = n - 1 - i
            for c, ch in enumerate(line):
                if ch == "#":
                    bits |= 1 << (r * n + c)
                elif ch != ".":
                    raise ValueError(f"unexpected zone character {ch!r}")
        return cls(n, bits)

    def __repr__(self) -> str:
        return f"Zone({self.size}, {self.names()})"


def union(z1: Zone, z2: Zone) -> Zone:
    return z1.union(z2)


def intersect(z1: Zone, z2: Zone) -> Zone:
    return z1.intersect(z2)


def contains(z: Zone, g: int) -> bool:
    return z.contains(g)


def z_border(z: Zone) -> Zone:
    """Zone grids with at least one orthogonal neighbour outside the zone."""
    geo = square(z.size)
    outside = geo.full & ~z.bits
    return Zone(z.size, z.bits & geo.grow(outside))


@dataclass(frozen=True, slots=True)
class ZonePattern:
    """Board contents restricted to a zone; equal iff same zone and same cells."""

    zone: Zone
    black: int
    white: int

    def restrict(self, sub: Zone) -> "ZonePattern":
        """The pattern on a sub-zone; ``sub`` must lie inside this pattern's zone."""
        if not sub <= self.zone:
            raise ValueError("restriction zone is not contained in the pattern's zone")
        return ZonePattern(sub, self.black & sub.bits, self.white & sub.bits)


def pattern_of(black: int, white: int, z: Zone) -> ZonePattern:
    return ZonePattern(z, black & z.bits, white & z.bits)
