"""Batch runs over a directory of problem files, comparing search configurations."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import RzError
from .problem import ProblemSpec, load_problem
from .solver import MoveOrdering, SearchBudget, Verdict, achieve_goal, read_priors

PROBLEM_SUFFIXES = (".sgf", ".hex")


@dataclass(frozen=True)
class Config:
    """``rzs`` or ``plain`` search, with an ordering (``auto`` uses a sidecar priors file)."""

    rzs: bool = True
    ordering: str = "auto"

    @classmethod
    def parse(cls, text: str) -> "Config":
        mode, _, order = text.partition(":")
        if mode not in ("rzs", "plain"):
            raise ValueError(f"config must start with 'rzs' or 'plain', got {text!r}")
        return cls(mode == "rzs", order or "auto")

    @property
    def label(self) -> str:
        mode = "rzs" if self.rzs else "plain"
        return mode if self.ordering == "auto" else f"{mode}:{self.ordering}"


DEFAULT_CONFIGS = (Config(False), Config(True))


@dataclass(frozen=True)
class Row:
    problem: str
    config: str
    verdict: Verdict
    nodes: int
    table_hits: int
    seconds: float


@dataclass
class BenchReport:
    configs: tuple
    rows: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def problems(self) -> list[str]:
        return sorted({r.problem for r in self.rows})

    def solved(self, config: str) -> int:
        return sum(1 for r in self.rows if r.config == config and r.verdict is not Verdict.UNKNOWN)

    def total(self) -> int:
        return len(self.problems())

    def cell(self, problem: str, config: str) -> Row | None:
        for r in self.rows:
            if r.problem == problem and r.config == config:
                return r
        return None

    def format(self, timing: bool = False) -> str:
        total = self.total()
        out = ["solved problems", "config".ljust(16) + "solved"]
        for c in self.configs:
            out.append(c.ljust(16) + f"{self.solved(c)}/{total}")
        out.append("")
        out.append("node counts")
        width = max([len(p) for p in self.problems()] + [7])
        out.append("problem".ljust(width + 2) + "".join(c.rjust(22) for c in self.configs))
        for p in self.problems():
            line = p.ljust(width + 2)
            for c in self.configs:
                r = self.cell(p, c)
                text = f"{r.verdict.name} {r.nodes}/{r.table_hits}"
                if timing:
                    text += f" {r.seconds:.2f}s"
                line += text.rjust(22)
            out.append(line)
        for name, why in self.skipped:
            out.append(f"skipped {name}: {why}")
        return "\n".join(out) + "\n"


def problem_files(directory: str | Path) -> list[Path]:
    d = Path(directory)
    if not d.is_dir():
        raise FileNotFoundError(f"{d}: not a directory")
    return sorted(p for p in d.iterdir() if p.suffix.lower() in PROBLEM_SUFFIXES)


def ordering_for(path: Path, spec: ProblemSpec, name: str) -> MoveOrdering:
    if name == "auto":
        side = path.with_suffix(".priors")
        if side.exists():
            return MoveOrdering("priors", read_priors(side, spec.size))
        return MoveOrdering()
    return MoveOrdering.parse(name, spec.size)


def _solve_one(args) -> list[Row]:
    path, spec, configs, budget = args
    rows = []
    for cfg in configs:
        ordering = ordering_for(path, spec, cfg.ordering)
        start = time.perf_counter()
        r = achieve_goal(spec.position(), spec.rules(), budget, ordering, rzs=cfg.rzs)
        rows.append(Row(path.stem, cfg.label, r.status, r.stats.nodes, r.stats.table_hits,
                        time.perf_counter() - start))
    return rows


def run_bench(directory, configs=DEFAULT_CONFIGS, budget: SearchBudget | None = None,
              jobs: int = 1) -> BenchReport:
    files = problem_files(directory)
    if not files:
        raise FileNotFoundError(f"{directory}: no problem files (*.sgf, *.hex)")
    budget = budget or SearchBudget(max_nodes=200_000)
    configs = tuple(configs)
    report = BenchReport(tuple(c.label for c in configs))
    work = []
    for path in files:
        try:
            spec = load_problem(path)
        except (RzError, ValueError, OSError) as err:
            report.skipped.append((path.name, str(err)))
            continue
        work.append((path, spec, configs, budget))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_solve_one, work))
    else:
        results = [_solve_one(w) for w in work]
    for rows in results:
        report.rows.extend(rows)
    return report
