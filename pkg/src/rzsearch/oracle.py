"""Full-width AND-OR search without zones, used as ground truth.

It shares only the rules objects (legal moves, play, goal status) with the
main engine.  OR nodes need one winning child, AND nodes need every child
to win.  Positions repeating an ancestor count as failures for the
OR-player, exactly as in the main engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

from .benson import Status
from .solver import MoveOrdering, Verdict, order_moves


@dataclass(frozen=True)
class OracleResult:
    status: Verdict
    nodes: int


class _NodeCap(Exception):
    pass


def oracle_solve(p, rules, max_depth: int, ordering: MoveOrdering | None = None,
                 max_nodes: int | None = None) -> OracleResult:
    ordering = ordering or MoveOrdering()
    count = itertools.count(1)
    nodes = 0
    path: set[int] = set()

    def solve(q, depth: int) -> Verdict:
        nonlocal nodes
        if q.key in path:
            return Verdict.FAIL
        nodes = next(count)
        if max_nodes is not None and nodes > max_nodes:
            raise _NodeCap
        status, _ = rules.status(q)
        if status is Status.ACHIEVED:
            return Verdict.WIN
        if status is Status.FAILED:
            return Verdict.FAIL
        if depth >= max_depth:
            return Verdict.UNKNOWN
        or_node = rules.is_or(q)
        moves = order_moves(q, rules.legal_moves(q), ordering, rules)
        if not moves:
            return Verdict.FAIL if or_node else Verdict.WIN
        path.add(q.key)
        try:
            unknown = False
            for m in moves:
                v = solve(rules.play(q, m), depth + 1)
                if or_node and v is Verdict.WIN:
                    return Verdict.WIN
                if not or_node and v is Verdict.FAIL:
                    return Verdict.FAIL
                unknown |= v is Verdict.UNKNOWN
            if unknown:
                return Verdict.UNKNOWN
            return Verdict.FAIL if or_node else Verdict.WIN
        finally:
            path.discard(q.key)

    try:
        v = solve(p, 0)
    except _NodeCap:
        v = Verdict.UNKNOWN
    return OracleResult(v, nodes)


def write_fixture(path: str | Path, rows) -> None:
    """Write ``(hash, verdict, depth)`` rows, one ``hash,verdict,depth`` line each."""
    lines = [f"{h:016x},{v.value if isinstance(v, Verdict) else v},{d}" for h, v, d in rows]
    Path(path).write_text("\n".join(lines) + "\n")


def read_fixture(path: str | Path) -> dict[int, tuple[Verdict, int]]:
    out = {}
    for line in Path(path).read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        h, v, d = line.split(",")
        out[int(h, 16)] = (Verdict(v), int(d))
    return out
