"""Replay a solution tree on a same-pattern position, and audit zone conditions.

``verify_replay`` plays the tree's strategy against every (or a sample of)
AND-player reply on a perturbed position.  ``check_cr_conditions`` tests
the three local transfer conditions at one node.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import replace as dc_replace

from .benson import Status
from .errors import PatternMismatch
from .geometry import PASS, iter_bits, zobrist
from .solver import NodeKind, RzstNode
from .zone import Zone

EXHAUSTIVE_LIMIT = 3**9


def _require_same_pattern(rules, p, q, z: Zone) -> None:
    if p.size != q.size or p.to_move != q.to_move or rules.pattern(p, z) != rules.pattern(q, z):
        raise PatternMismatch("positions differ inside the zone or in the player to move")


def _with_cells(p, black: int, white: int, key: int = -1):
    return type(p)(p.size, black, white, p.to_move, key)


def same_pattern_positions(p, z: Zone, rules, *, limit: int = 100, rng: random.Random | None = None,
                           exhaustive_limit: int = EXHAUSTIVE_LIMIT):
    """Valid positions agreeing with ``p`` inside ``z`` (and on the side to move).

    Every assignment of empty/black/white to the grids outside ``z`` is
    produced when there are at most ``exhaustive_limit`` of them; otherwise
    ``limit`` random assignments are drawn.  ``p`` itself is excluded.
    """
    outside = list(iter_bits(p.geo.full & ~z.bits))
    keep_b, keep_w = p.black & z.bits, p.white & z.bits
    kb, kw, _ = zobrist(p.size)
    # Hash of the fixed part; outside stones are xor-ed in per assignment.
    base = p.key
    for g in iter_bits((p.black | p.white) & ~z.bits):
        base ^= kb[g] if p.black >> g & 1 else kw[g]
    options = [((0, 0, 0), (1 << g, 0, kb[g]), (0, 1 << g, kw[g])) for g in outside]

    def build(cells):
        b, w, h = keep_b, keep_w, base
        for cb, cw, ck in cells:
            b |= cb
            w |= cw
            h ^= ck
        return b, w, h

    if 3 ** len(outside) <= exhaustive_limit:
        for cells in itertools.product(*options):
            b, w, h = build(cells)
            if b == p.black and w == p.white:
                continue
            q = _with_cells(p, b, w, h)
            if rules.is_valid(q):
                yield q
        return
    rng = rng or random.Random(0)
    seen = {(p.black, p.white)}
    produced = tries = 0
    while produced < limit and tries < 50 * limit:
        tries += 1
        b, w, h = build([opts[rng.randrange(3)] for opts in options])
        if (b, w) in seen:
            continue
        seen.add((b, w))
        q = _with_cells(p, b, w, h)
        if rules.is_valid(q):
            produced += 1
            yield q


def is_exhaustive(p, z: Zone, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> bool:
    return 3 ** bin(p.geo.full & ~z.bits).count("1") <= exhaustive_limit


# --------------------------------------------------------------------------
# replay


class _Replayer:
    def __init__(self, rules, exhaustive: bool, samples: int, rng: random.Random):
        self.rules = rules
        self.exhaustive = exhaustive
        self.samples = samples
        self.rng = rng
        self.memo: dict = {}
        self.failure: str | None = None

    def fail(self, why: str) -> bool:
        if self.failure is None:
            self.failure = why
        return False

    def run(self, node: RzstNode, pt, q, budget: int) -> bool:
        key = (id(node), pt.key, q.key)
        if key in self.memo:
            return self.memo[key]
        ok = self._run(node, pt, q, budget)
        self.memo[key] = ok
        return ok

    def _run(self, node, pt, q, budget) -> bool:
        rules = self.rules
        if rules.pattern(pt, node.rz) != rules.pattern(q, node.rz):
            return self.fail("zone pattern diverged")
        status, _ = rules.status(q)
        if status is Status.ACHIEVED:
            return True
        if node.kind is NodeKind.LEAF:
            return self.fail("leaf reached without achieving the goal")
        if budget <= 0:
            return self.fail("replay ran too long")
        if node.kind is NodeKind.OR:
            child = node.children[0]
            m = child.move
            if not rules.is_legal(q, m):
                return self.fail("winning move illegal on replay")
            return self.run(child, rules.play(pt, m), rules.play(q, m), budget - 1)
        moves = rules.legal_moves(q)
        if not self.exhaustive and len(moves) > self.samples:
            moves = self.rng.sample(moves, self.samples)
        return all(self._answer(node, pt, q, x, budget) for x in moves)

    def _answer(self, node, pt, q, x, budget) -> bool:
        rules = self.rules
        qx = rules.play(q, x)
        child = node.child(x)
        if child is not None:
            if not rules.is_legal(pt, x):
                return self.fail("in-zone reply illegal on the tree position")
            return self.run(child, rules.play(pt, x), qx, budget - 1)
        for c in node.children:
            if c.null and not rules.changes_pattern(q, x, c.rz):
                return self.run(c, rules.play(pt, c.move), qx, budget - 1)
        # No null child covers x: answer with a move outside the zone that
        # leaves the pattern alone, returning to the same tree node.
        if rules.changes_pattern(q, x, node.rz):
            return self.fail("out-of-zone reply changed the zone pattern")
        for t in rules.legal_moves(qx):
            if not node.rz.contains(t) and not rules.changes_pattern(qx, t, node.rz):
                return self.run(node, pt, rules.play(qx, t), budget - 2)
        return self.fail("no null child and no quiet answer available")


def verify_replay(tree: RzstNode, root_p, p_star, rules, *, exhaustive: bool | None = None,
                  samples: int = 4, rng: random.Random | None = None, explain: list | None = None) -> bool:
    """Whether the tree's strategy wins from ``p_star``.

    AND-player replies are enumerated exhaustively on boards up to 5x5
    (default) and otherwise ``samples`` random replies per AND node are
    followed.  Appends the first failure reason to ``explain`` if given.
    """
    _require_same_pattern(rules, root_p, p_star, tree.rz)
    if exhaustive is None:
        exhaustive = root_p.size <= 5
    rp = _Replayer(rules, exhaustive, samples, rng or random.Random(0))
    ok = rp.run(tree, root_p, p_star, 4 * root_p.size * root_p.size + 8)
    if not ok and explain is not None:
        explain.append(rp.failure)
    return ok


# --------------------------------------------------------------------------
# local transfer conditions


def check_cr_conditions(node_p, rz: Zone, node: RzstNode, p_star, rules, explain: list | None = None) -> bool:
    """The three local conditions for transferring ``node`` to ``p_star``.

    At AND nodes every in-zone AND move on ``p_star`` must be legal on
    ``node_p`` with equal zone patterns afterwards, and every out-of-zone
    AND move must leave the zone pattern untouched.  At OR nodes the
    winning move must be legal on ``p_star`` with equal patterns after.
    Leaves must reach the goal on ``p_star`` as well.
    """
    _require_same_pattern(rules, node_p, p_star, rz)

    def bad(why):
        if explain is not None:
            explain.append(why)
        return False

    if node.kind is NodeKind.LEAF:
        if rules.status(p_star)[0] is not Status.ACHIEVED:
            return bad("leaf goal not reached")
        return True
    if node.kind is NodeKind.OR:
        m = node.winning_move
        if not rules.is_legal(p_star, m):
            return bad("winning move illegal")
        if rules.pattern(rules.play(node_p, m), rz) != rules.pattern(rules.play(p_star, m), rz):
            return bad("winning move gives a different zone pattern")
        return True
    before = rules.pattern(p_star, rz)
    for x in rules.legal_moves(p_star):
        after = rules.play(p_star, x)
        if x != PASS and rz.contains(x):
            if not rules.is_legal(node_p, x):
                return bad("in-zone move legal only on the perturbed position")
            if rules.pattern(rules.play(node_p, x), rz) != rules.pattern(after, rz):
                return bad("in-zone move gives a different zone pattern")
        elif rules.pattern(after, rz) != before:
            return bad("out-of-zone move changed the zone pattern")
    return True


def tree_positions(tree: RzstNode, root_p, rules):
    """Yield ``(node, position)`` pairs for every node of the tree."""
    stack = [(tree, root_p)]
    while stack:
        node, p = stack.pop()
        yield node, p
        for c in reversed(node.children):
            stack.append((c, rules.play(p, c.move)))


def zz1_violations(tree: RzstNode) -> list[RzstNode]:
    """Children whose zone is not contained in the parent's zone."""
    return [c for n in tree.walk() for c in n.children if not c.rz <= n.rz]


def with_zone(node: RzstNode, rz: Zone) -> RzstNode:
    return dc_replace(node, rz=rz)
