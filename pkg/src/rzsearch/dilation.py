"""Zone dilation for Go: grow a zone until replay on any same-pattern position is consistent.

All functions only ever add grids, and each loop iteration either adds a
grid or stops, so they terminate within ``n * n`` rounds.
"""

from __future__ import annotations

from .board import Position, blocks, blocks_touching, captures, is_legal, play
from .errors import IllegalMove
from .geometry import PASS, grid_name, iter_bits
from .zone import Zone


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _lowest(mask: int, k: int) -> int:
    out = 0
    for g in iter_bits(mask):
        if k == 0:
            break
        out |= 1 << g
        k -= 1
    return out


def _dl1(p: Position, bits: int, avoid: int = 0) -> int:
    """Give every block with a stone in ``bits`` at least one liberty in ``bits``."""
    while True:
        grew = False
        for b in blocks(p):
            if b.stones & bits and not b.liberties & bits & ~avoid:
                candidates = b.liberties & ~avoid or b.liberties
                bits |= candidates & -candidates
                grew = True
        if not grew:
            return bits


def apply_dl1(p: Position, z: Zone) -> Zone:
    return Zone(z.size, _dl1(p, z.bits))


def dilate_or(p: Position, move: int, z_u: Zone) -> Zone:
    """Zone for an OR node whose winning move is ``move`` (``z_u`` = child zone plus move)."""
    if move != PASS and not is_legal(p, move):
        raise IllegalMove(f"{grid_name(move, p.size)} is not legal here")
    bits = z_u.bits
    if move != PASS:
        bits |= 1 << move
    captured = captures(p, move)
    if captured:
        bits |= captured | blocks_touching(p, p.to_move, captured)
    after = play(p, move)
    while True:
        new = _dl1(after, _dl1(p, bits))
        if new == bits:
            return Zone(z_u.size, bits)
        bits = new


def _suicide_rule(p: Position, bits: int) -> int:
    geo = p.geo
    attacker = p.to_move
    defender = attacker.opponent
    for g in iter_bits(p.empty & bits):
        if is_legal(p, g):
            continue
        gbit = 1 << g
        own = blocks_touching(p, attacker, gbit) & ~gbit
        surround = blocks_touching(p, defender, own | gbit)
        bits |= own | surround
        for w in geo.components(surround):
            libs = geo.grow(w) & p.empty
            if not libs & bits & ~gbit:
                bits |= _lowest(libs & ~gbit, 1)
    return bits


def _border_rule(p: Position, bits: int) -> int:
    geo = p.geo
    defender = p.to_move.opponent
    border = bits & geo.grow(geo.full & ~bits)
    for w in blocks(p, defender):
        if not w.stones & border:
            continue
        zlibs = w.liberties & bits
        if _popcount(zlibs) >= 2:
            continue
        if _popcount(w.liberties) >= 2:
            bits |= _lowest(w.liberties & ~bits, 2 - _popcount(zlibs))
        else:
            bits |= w.liberties | w.stones | blocks_touching(p, p.to_move, w.stones)
    return bits


def dilate_and(p: Position, z_u: Zone) -> Zone:
    """Zone for an AND node (AND-player to move) from the union of child zones."""
    bits = z_u.bits
    while True:
        new = _dl1(p, _border_rule(p, _suicide_rule(p, bits)))
        if new == bits:
            return Zone(z_u.size, bits)
        bits = new


def changes_pattern(p: Position, move: int, z: Zone) -> bool:
    """Whether playing ``move`` on ``p`` alters the contents of ``z``."""
    if move == PASS:
        return False
    if z.contains(move):
        return True
    return bool(captures(p, move) & z.bits)

