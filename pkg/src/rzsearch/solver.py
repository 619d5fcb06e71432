"""Depth-first relevance-zone search with must-play regions.

The engine is game-agnostic: it talks to a *rules* object (``GoRules`` or
``HexRules``) that supplies legal moves, play, goal status, zone dilation
and the pattern-change test used to classify null moves.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any

from .benson import Status
from .errors import MoveNotInRegion
from .geometry import PASS, grid_name, iter_bits, parse_grid
from .zone import Zone


class Verdict(Enum):
    WIN = "WIN"
    FAIL = "FAIL"
    UNKNOWN = "UNKNOWN"


class NodeKind(Enum):
    LEAF = "leaf"
    OR = "or"
    AND = "and"


@dataclass(frozen=True)
class RzstNode:
    """One node of a relevance-zone solution tree.

    ``move`` is the move that led here from the parent (None at the root).
    ``null`` marks AND-node children whose move leaves the child zone
    untouched.  ``must_play`` records the must-play region after each
    child of an AND node was proven, in trial order.
    """

    key: int
    move: int | None
    kind: NodeKind
    rz: Zone
    children: tuple = ()
    null: bool = False
    height: int = 0
    must_play: tuple = field(default=(), compare=False)

    @property
    def winning_move(self) -> int | None:
        return self.children[0].move if self.kind is NodeKind.OR else None

    @property
    def null_moves(self) -> frozenset:
        return frozenset(c.move for c in self.children if c.null)

    def child(self, move: int) -> "RzstNode | None":
        for c in self.children:
            if c.move == move:
                return c
        return None

    def walk(self):
        """Pre-order traversal."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def size(self) -> int:
        return sum(1 for _ in self.walk())


@dataclass
class SearchStats:
    nodes: int = 0
    table_hits: int = 0
    max_depth: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    status: Verdict
    rz: Zone | None = None
    tree: RzstNode | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    repetition_caveat: bool = False

    @property
    def win(self) -> bool:
        return self.status is Verdict.WIN


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 1_000_000
    max_depth: int = 64
    deadline: float | None = None  # seconds of wall time

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_depth <= 0:
            raise ValueError("budget limits must be positive")
        if self.deadline is not None and self.deadline <= 0:
            raise ValueError("deadline must be positive")


class TranspositionTable:
    """Proven results keyed by goal identity and position hash.

    A lock guards every access so that several searches on different
    problems may share one table.
    """

    def __init__(self):
        self._data: dict[tuple[str, int], tuple[Verdict, Zone | None, RzstNode | None]] = {}
        self._lock = threading.Lock()

    def lookup(self, goal_id: str, key: int):
        with self._lock:
            return self._data.get((goal_id, key))

    def store(self, goal_id: str, key: int, status: Verdict, rz: Zone | None = None, tree=None):
        if status is Verdict.UNKNOWN:
            raise ValueError("only proven results may be stored")
        with self._lock:
            self._data[(goal_id, key)] = (status, rz, tree)

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


@dataclass(frozen=True)
class MustPlayRegion:
    remaining: frozenset

    def __contains__(self, m) -> bool:
        return m in self.remaining

    def __len__(self) -> int:
        return len(self.remaining)

    def __bool__(self) -> bool:
        return bool(self.remaining)


def update_and_node(mpr: MustPlayRegion, m: int, child_rz: Zone, p=None, rules=None) -> MustPlayRegion:
    """Shrink the must-play region after the child reached by ``m`` was proven.

    A move inside ``child_rz`` is simply crossed off.  Otherwise ``m`` is a
    null move and only moves inside ``child_rz`` survive.  When the position
    and rules are supplied, a move outside the zone that captures stones
    inside it also survives, because it alters the zone pattern.
    """
    if m not in mpr.remaining:
        raise MoveNotInRegion(f"move {m} is not in the must-play region")
    if p is not None and rules is not None:
        changes = lambda x: rules.changes_pattern(p, x, child_rz)  # noqa: E731
    else:
        changes = child_rz.contains
    if changes(m):
        return MustPlayRegion(mpr.remaining - {m})
    return MustPlayRegion(frozenset(x for x in mpr.remaining if x != m and changes(x)))


# --------------------------------------------------------------------------
# move ordering


def _color_code(text: str) -> int:
    try:
        return {"B": 1, "W": 2}[text.upper()[:1]]
    except KeyError:
        raise ValueError(f"expected B or W, got {text!r}") from None


def parse_priors(text: str, size: int) -> tuple:
    """Parse move priorities, best first.

    Each line is ``[B|W] <grid>`` optionally followed by ``if <B|W> <grid>``;
    a conditional line only applies while that stone is on the board.
    ``#`` starts a comment.
    """
    out = []
    for raw in text.splitlines():
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        cond = None
        if "if" in words:
            i = words.index("if")
            if len(words) != i + 3:
                raise ValueError(f"bad condition in priors line {raw!r}")
            cond = (_color_code(words[i + 1]), parse_grid(words[i + 2], size))
            words = words[:i]
        color = None
        if len(words) == 2:
            color = _color_code(words[0])
            words = words[1:]
        if len(words) != 1:
            raise ValueError(f"bad priors line {raw!r}")
        out.append((color, parse_grid(words[0], size), cond))
    return tuple(out)


def read_priors(path: str | Path, size: int) -> tuple:
    return parse_priors(Path(path).read_text(), size)


@dataclass(frozen=True)
class MoveOrdering:
    """Deterministic move-ordering policy.

    ``policy`` is ``lex``, ``liberty`` or ``priors``.  With ``wins_first``
    the OR-player tries moves that reach the goal at once before others.
    PASS is always tried last.
    """

    policy: str = "lex"
    priors: tuple = ()
    wins_first: bool = True

    @classmethod
    def parse(cls, text: str, size: int, wins_first: bool = True) -> "MoveOrdering":
        if text.startswith("file:"):
            return cls("priors", read_priors(text[5:], size), wins_first)
        if text not in ("lex", "liberty"):
            raise ValueError(f"unknown ordering {text!r}")
        return cls(text, (), wins_first)

    def describe(self) -> str:
        extra = f"[{len(self.priors)}]" if self.policy == "priors" else ""
        return f"{self.policy}{extra}{'+wins_first' if self.wins_first else ''}"


def _pressure(p, g: int) -> tuple:
    """Smaller is better: favour grids touching short-of-liberty enemy stones."""
    geo = p.geo
    nb = geo.neighbors[g]
    me, opp = p.stones(p.to_move), p.stones(p.to_move.opponent)
    score = 0
    if getattr(geo, "hexagonal", False):
        return (-bin(nb & (me | opp)).count("1"), g)
    seen = 0
    for s in iter_bits(nb & opp):
        if seen >> s & 1:
            continue
        blk = geo.flood(opp, 1 << s)
        seen |= blk
        libs = bin(geo.grow(blk) & p.empty).count("1")
        score += 8 // max(libs, 1)
    score += bin(nb & opp).count("1") + bin(nb & me).count("1")
    return (-score, g)


def order_moves(p, moves, policy: MoveOrdering, rules=None) -> list:
    moves = list(moves)
    grids = sorted(m for m in moves if m != PASS)
    if policy.policy == "liberty":
        grids.sort(key=lambda g: _pressure(p, g))
    elif policy.policy == "priors":
        rank = {}
        for i, (color, g, cond) in enumerate(policy.priors):
            if color is not None and color != p.to_move or g in rank:
                continue
            if cond is None or p.at(cond[1]) == cond[0]:
                rank[g] = i
        grids.sort(key=lambda g: (rank.get(g, len(policy.priors)), g))
    if policy.wins_first and rules is not None and rules.is_or(p):
        wins = []
        for g in grids:
            if rules.status(rules.play(p, g))[0] is Status.ACHIEVED:
                wins.append(g)
        if wins:
            won = set(wins)
            grids = wins + [g for g in grids if g not in won]
    if PASS in moves:
        grids.append(PASS)
    return grids


# --------------------------------------------------------------------------
# search


class _OutOfBudget(Exception):
    pass


@dataclass
class _Outcome:
    status: Verdict
    tree: RzstNode | None = None
    rep: bool = False


class _Search:
    def __init__(self, rules, budget: SearchBudget, ordering: MoveOrdering, rzs: bool, table):
        self.rules = rules
        self.budget = budget
        self.ordering = ordering
        self.rzs = rzs
        self.table = table
        self.goal_id = f"{rules.ident()}|rzs={rzs}"
        self.stats = SearchStats()
        self.path: set[int] = set()
        self.stop_at = None if budget.deadline is None else time.monotonic() + budget.deadline

    def run(self, p) -> _Outcome:
        return self.visit(p, 0, None)

    def visit(self, p, depth: int, move) -> _Outcome:
        if p.key in self.path:
            return _Outcome(Verdict.FAIL, rep=True)
        if self.table is not None:
            hit = self.table.lookup(self.goal_id, p.key)
            if hit is not None:
                status, _, tree = hit
                if status is Verdict.FAIL:
                    self.stats.table_hits += 1
                    return _Outcome(Verdict.FAIL)
                if tree.height <= self.budget.max_depth - depth:
                    self.stats.table_hits += 1
                    return _Outcome(Verdict.WIN, replace(tree, move=move, null=False))
        self.stats.nodes += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        if self.stats.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if self.stop_at is not None and self.stats.nodes % 64 == 0 and time.monotonic() > self.stop_at:
            raise _OutOfBudget
        status, zone = self.rules.status(p)
        if status is Status.ACHIEVED:
            rz = zone if self.rzs else Zone.full(p.size)
            return _Outcome(Verdict.WIN, RzstNode(p.key, move, NodeKind.LEAF, rz))
        if status is Status.FAILED:
            return _Outcome(Verdict.FAIL)
        if depth >= self.budget.max_depth:
            return _Outcome(Verdict.UNKNOWN)
        self.path.add(p.key)
        try:
            out = self._or(p, depth, move) if self.rules.is_or(p) else self._and(p, depth, move)
        finally:
            self.path.discard(p.key)
        if self.table is not None and out.status is not Verdict.UNKNOWN and not out.rep:
            self.table.store(self.goal_id, p.key, out.status, out.tree and out.tree.rz, out.tree)
        return out

    def _or(self, p, depth, move) -> _Outcome:
        rules = self.rules
        unknown = rep = False
        for m in order_moves(p, rules.legal_moves(p), self.ordering, rules):
            res = self.visit(rules.play(p, m), depth + 1, m)
            if res.status is Verdict.WIN:
                child = res.tree
                if self.rzs:
                    rz = rules.dilate_or(p, m, child.rz if m == PASS else child.rz.add(1 << m))
                else:
                    rz = Zone.full(p.size)
                node = RzstNode(p.key, move, NodeKind.OR, rz, (child,), height=child.height + 1)
                return _Outcome(Verdict.WIN, node)
            unknown |= res.status is Verdict.UNKNOWN
            rep |= res.rep
        return _Outcome(Verdict.UNKNOWN if unknown else Verdict.FAIL, rep=rep)

    def _and(self, p, depth, move) -> _Outcome:
        rules = self.rules
        legal = rules.legal_moves(p)
        if not legal:
            rz = Zone.full(p.size)
            return _Outcome(Verdict.WIN, RzstNode(p.key, move, NodeKind.AND, rz))
        mpr = MustPlayRegion(frozenset(legal))
        children, trace = [], []
        union = Zone.empty(p.size)
        for m in order_moves(p, legal, self.ordering, rules):
            if m not in mpr:
                continue
            res = self.visit(rules.play(p, m), depth + 1, m)
            if res.status is Verdict.FAIL:
                return _Outcome(Verdict.FAIL, rep=res.rep)
            if res.status is Verdict.UNKNOWN:
                continue
            child = res.tree
            null = not rules.changes_pattern(p, m, child.rz)
            children.append(replace(child, null=null))
            union = union | child.rz
            if self.rzs:
                mpr = update_and_node(mpr, m, child.rz, p, rules)
            else:
                mpr = MustPlayRegion(mpr.remaining - {m})
            trace.append(mpr.remaining)
            if not mpr:
                break
        if mpr:
            return _Outcome(Verdict.UNKNOWN)
        rz = rules.dilate_and(p, union) if self.rzs else Zone.full(p.size)
        height = 1 + max(c.height for c in children)
        node = RzstNode(p.key, move, NodeKind.AND, rz, tuple(children), height=height, must_play=tuple(trace))
        return _Outcome(Verdict.WIN, node)


def achieve_goal(
    p,
    rules,
    budget: SearchBudget | None = None,
    ordering: MoveOrdering | None = None,
    *,
    rzs: bool = True,
    table: TranspositionTable | None | Any = "fresh",
) -> SolveResult:
    """Try to prove that the OR-player reaches the goal from ``p``.

    ``table`` defaults to a fresh transposition table; pass ``None`` to
    search without one or share a table across calls.
    """
    budget = budget or SearchBudget()
    ordering = ordering or MoveOrdering()
    if isinstance(table, str):
        table = TranspositionTable()
    search = _Search(rules, budget, ordering, rzs, table)
    start = time.perf_counter()
    try:
        out = search.run(p)
    except _OutOfBudget:
        out = _Outcome(Verdict.UNKNOWN)
    search.stats.seconds = time.perf_counter() - start
    if out.status is Verdict.WIN:
        return SolveResult(Verdict.WIN, out.tree.rz, out.tree, search.stats)
    return SolveResult(out.status, None, None, search.stats, repetition_caveat=out.rep)


def describe_move(m: int | None, size: int) -> str:
    return "root" if m is None else grid_name(m, size)
