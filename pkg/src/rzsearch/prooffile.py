"""Text format for solution trees.

A header of ``# key: value`` lines is followed by one line per node in
pre-order, indented two spaces per depth::

    root | and | null:no | rz:.......//...####
      D1 | or | null:yes | rz:...

Wall time is deliberately left out so the same search always writes the
same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .geometry import PASS, grid_name, parse_grid
from .solver import NodeKind, RzstNode, SearchBudget, SolveResult
from .zone import Zone

FORMAT = "rzst/1"


@dataclass(frozen=True)
class ProofFile:
    header: tuple  # (key, value) pairs in file order
    tree: RzstNode | None

    def get(self, key: str, default=None):
        return dict(self.header).get(key, default)


def _move_text(m: int | None, n: int) -> str:
    if m is None:
        return "root"
    return "pass" if m == PASS else grid_name(m, n)


def _parse_move(text: str, n: int) -> int | None:
    if text == "root":
        return None
    return PASS if text == "pass" else parse_grid(text, n)


def proof_header(result: SolveResult, *, game: str, goal: str, size: int, rules_flags: str,
                 ordering: str, budget: SearchBudget, rzs: bool) -> tuple:
    s = result.stats
    return (
        ("format", FORMAT),
        ("game", game),
        ("size", str(size)),
        ("goal", goal),
        ("rules", rules_flags),
        ("rzs", "on" if rzs else "off"),
        ("ordering", ordering),
        ("budget", f"max_nodes={budget.max_nodes} max_depth={budget.max_depth}"),
        ("verdict", result.status.name),
        ("stats", f"nodes={s.nodes} table_hits={s.table_hits} max_depth={s.max_depth}"),
        ("repetition_caveat", "yes" if result.repetition_caveat else "no"),
    )


def format_proof(proof: ProofFile, size: int) -> str:
    lines = [f"# {k}: {v}" for k, v in proof.header]
    if proof.tree is not None:
        stack = [(proof.tree, 0)]
        while stack:
            node, depth = stack.pop()
            lines.append(
                "  " * depth
                + f"{_move_text(node.move, size)} | {node.kind.value} | null:{'yes' if node.null else 'no'}"
                + f" | rz:{node.rz.serialize()}"
            )
            stack.extend((c, depth + 1) for c in reversed(node.children))
    return "\n".join(lines) + "\n"


def parse_proof(text: str) -> ProofFile:
    """Inverse of :func:`format_proof`; node hashes come back as 0."""
    header = []
    entries = []
    for ln, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        if raw.startswith("#"):
            key, _, val = raw[1:].partition(":")
            header.append((key.strip(), val.strip()))
            continue
        indent = len(raw) - len(raw.lstrip(" "))
        if indent % 2:
            raise ValueError(f"line {ln}: odd indentation")
        parts = [s.strip() for s in raw.strip().split("|")]
        if len(parts) != 4 or not parts[2].startswith("null:") or not parts[3].startswith("rz:"):
            raise ValueError(f"line {ln}: expected 'move | kind | null:.. | rz:..'")
        entries.append((indent // 2, parts, ln))
    if not entries:
        return ProofFile(tuple(header), None)
    size = int(dict(header).get("size", 0)) or None

    def build(i: int, depth: int) -> tuple[RzstNode, int]:
        d, (move, kind, null, rz), ln = entries[i]
        if d != depth:
            raise ValueError(f"line {ln}: unexpected depth {d}")
        z = Zone.parse(rz[3:])
        n = size or z.size
        children = []
        i += 1
        while i < len(entries) and entries[i][0] > depth:
            child, i = build(i, depth + 1)
            children.append(child)
        height = 1 + max((c.height for c in children), default=-1)
        node = RzstNode(0, _parse_move(move, n), NodeKind(kind), z, tuple(children),
                        null[5:] == "yes", height)
        return node, i

    tree, end = build(0, 0)
    if end != len(entries):
        raise ValueError(f"line {entries[end][2]}: more than one root")
    return ProofFile(tuple(header), tree)


def write_proof(path: str | Path, proof: ProofFile, size: int) -> None:
    Path(path).write_text(format_proof(proof, size))


def read_proof(path: str | Path) -> ProofFile:
    return parse_proof(Path(path).read_text())
