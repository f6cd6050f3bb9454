"""Oracle versus recompute-from-scratch baseline."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .oracle import DynamicReachability
from .reference import closure_work, transitive_closure_bruteforce
from .stream import Command, Delete, Init, Insert, Query, make_oracle


@dataclass
class BenchReport:
    n: int
    op_counts: dict[str, int]
    oracle_seconds: dict[str, float]
    baseline_seconds: dict[str, float]
    # mean work per operation of each class
    oracle_work: dict[str, float]
    baseline_work: dict[str, float]
    insert_delete_work_ratio: float
    outputs_match: bool
    outputs: list[int] = field(default_factory=list)
    per_delete_tree_work: list[int] = field(default_factory=list)
    per_update_baseline_work: list[int] = field(default_factory=list)

    def render(self) -> str:
        lines = [f"## n {self.n}"]
        for kind in ("insert", "delete", "query"):
            lines.append(
                f"## {kind} count={self.op_counts.get(kind, 0)}"
                f" oracle_s={self.oracle_seconds.get(kind, 0.0):.6f}"
                f" baseline_s={self.baseline_seconds.get(kind, 0.0):.6f}"
                f" oracle_work={self.oracle_work.get(kind, 0.0):.1f}"
                f" baseline_work={self.baseline_work.get(kind, 0.0):.1f}"
            )
        lines.append(f"## insert_delete_work_ratio {self.insert_delete_work_ratio:.3f}")
        lines.append(f"## outputs_match {int(self.outputs_match)}")
        return "\n".join(lines) + "\n"


class RecomputeBaseline:
    """Keeps the closure matrix by recomputing it after every update."""

    def __init__(self, n: int):
        self.n = n
        self.edges: dict[tuple[int, int], None] = {}
        self.closure = np.eye(n, dtype=bool)
        self.last_work = 0

    def _recompute(self) -> None:
        self.closure = transitive_closure_bruteforce(self.edges, self.n)
        out_degree = np.zeros(self.n, dtype=np.int64)
        for a, _ in self.edges:
            out_degree[a - 1] += 1
        self.last_work = closure_work(self.closure, out_degree)

    def insert(self, center: int, edges) -> None:
        for e in edges:
            self.edges[e] = None
        self._recompute()

    def delete(self, edges) -> None:
        for e in edges:
            self.edges.pop(e, None)
        self._recompute()

    def query(self, v: int, u: int) -> bool:
        return bool(self.closure[v - 1, u - 1])


def _replay(target, commands, probe):
    seconds = {"insert": 0.0, "delete": 0.0, "query": 0.0}
    work = {"insert": [], "delete": [], "query": []}
    outputs = []
    clock = time.perf_counter
    for cmd in commands:
        if isinstance(cmd, Init):
            continue
        before = probe(target)
        t0 = clock()
        if isinstance(cmd, Insert):
            kind = "insert"
            target.insert(cmd.center, cmd.edges)
        elif isinstance(cmd, Delete):
            kind = "delete"
            target.delete(cmd.edges)
        else:
            kind = "query"
            outputs.append(int(target.query(cmd.v, cmd.u)))
        seconds[kind] += clock() - t0
        work[kind].append(probe(target, before, kind))
    return outputs, seconds, work


def _oracle_probe(oracle: DynamicReachability, before=None, kind=None):
    snap = (oracle.tcm.cell_update_counter, oracle.tree_work, oracle.tree_build_work)
    if before is None:
        return snap
    return tuple(x - y for x, y in zip(snap, before))


def _baseline_probe(base: RecomputeBaseline, before=None, kind=None):
    if before is None:
        return 0
    return base.last_work if kind != "query" else 1


def benchmark(commands: list[Command]) -> BenchReport:
    oracle = make_oracle(commands)
    base = RecomputeBaseline(oracle.n)
    outs, o_sec, o_work = _replay(oracle, commands, _oracle_probe)
    b_outs, b_sec, b_work = _replay(base, commands, _baseline_probe)

    def mean(xs):
        return float(np.mean(xs)) if xs else 0.0

    # oracle work of an update = witness cells touched + tree edges/vertices touched
    oracle_work = {k: mean([sum(w) for w in ws]) if k != "query" else (1.0 if ws else 0.0) for k, ws in o_work.items()}
    ratio = oracle_work["insert"] / oracle_work["delete"] if oracle_work["delete"] else float("inf")
    return BenchReport(
        n=oracle.n,
        op_counts={k: len(v) for k, v in o_work.items()},
        oracle_seconds=o_sec,
        baseline_seconds=b_sec,
        oracle_work=oracle_work,
        baseline_work={k: mean(v) for k, v in b_work.items()},
        insert_delete_work_ratio=ratio,
        outputs_match=outs == b_outs,
        outputs=outs,
        per_delete_tree_work=[w[1] for w in o_work["delete"]],
        per_update_baseline_work=b_work["insert"] + b_work["delete"],
    )
