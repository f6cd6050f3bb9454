"""Line-oriented update/query streams and the driver that replays them.

Format (one command per line, fields separated by spaces)::

    init <n>
    insert <center> <a1> <b1> [<a2> <b2> ...]
    delete <a1> <b1> [<a2> <b2> ...]
    query <v> <u>
    # comment

``init`` must come first and only once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import CheckFailure, ParseError, ValidationError
from .oracle import DynamicReachability
from .reference import reachable_bruteforce, transitive_closure_bruteforce, witness_count_oracle


@dataclass(frozen=True)
class Init:
    n: int


@dataclass(frozen=True)
class Insert:
    center: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Delete:
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Query:
    v: int
    u: int


Command = Union[Init, Insert, Delete, Query]


def _fields(line: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    for token in line.split(" "):
        if token:
            out.append((token, col + 1))
        col += len(token) + 1
    return out


def _ints(tokens: list[tuple[str, int]], lineno: int) -> list[int]:
    values = []
    for token, col in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"expected an integer, got {token!r}", lineno, col) from None
    return values


def parse_stream(text: str) -> list[Command]:
    commands: list[Command] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().replace("\t", " ")
        if not line or line.startswith("#"):
            continue
        tokens = _fields(raw.replace("\t", " "))
        verb, vcol = tokens[0]
        args = tokens[1:]
        if verb == "init":
            if len(args) != 1:
                raise ParseError("init takes exactly one argument", lineno, vcol)
            if n is not None:
                raise ValidationError("init appears more than once", lineno, vcol)
            (n,) = _ints(args, lineno)
            if n < 1:
                raise ValidationError("vertex count must be >= 1", lineno, args[0][1])
            commands.append(Init(n))
            continue
        if verb not in ("insert", "delete", "query"):
            raise ParseError(f"unknown command {verb!r}", lineno, vcol)
        values = _ints(args, lineno)
        if verb == "query" and len(values) != 2:
            raise ParseError("query takes exactly two vertices", lineno, vcol)
        if verb == "insert" and (len(values) < 3 or len(values) % 2 == 0):
            raise ParseError("insert takes a center followed by endpoint pairs", lineno, vcol)
        if verb == "delete" and (not values or len(values) % 2):
            raise ParseError("delete takes endpoint pairs", lineno, vcol)
        if n is None:
            raise ValidationError(f"{verb} before init", lineno, vcol)
        for value, (_, col) in zip(values, args):
            if not 1 <= value <= n:
                raise ValidationError(f"vertex {value} outside 1..{n}", lineno, col)
        if verb == "query":
            commands.append(Query(values[0], values[1]))
        elif verb == "insert":
            rest = values[1:]
            commands.append(Insert(values[0], tuple(zip(rest[::2], rest[1::2]))))
        else:
            commands.append(Delete(tuple(zip(values[::2], values[1::2]))))
    return commands


@dataclass
class RunReport:
    outputs: list[int] = field(default_factory=list)
    counters: dict = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)
    op_counts: dict[str, int] = field(default_factory=dict)

    def render(self, timings: bool = False) -> str:
        lines = [str(x) for x in self.outputs]
        for key in ("ins", "del", "tcm_cell_updates", "tree_work", "tree_build_work"):
            lines.append(f"## {key} {self.counters.get(key, 0)}")
        lines.append(f"## queries {self.op_counts.get('query', 0)}")
        for key, value in sorted(self.timings.items()) if timings else ():
            lines.append(f"## time_{key} {value:.6f}")
        return "\n".join(lines) + "\n"


def _check_update(oracle: DynamicReachability, index: int) -> None:
    expected = witness_count_oracle(oracle)
    diff = np.argwhere(expected != oracle.tcm.counts)
    if len(diff):
        v, u = (int(x) + 1 for x in diff[0])
        raise CheckFailure(
            f"witness count for ({v}, {u}) is {oracle.tcm[v, u]}, oracle says {expected[v - 1, u - 1]}",
            index,
            (v, u),
        )
    closure = transitive_closure_bruteforce(oracle.store.alive_edges(), oracle.n)
    live = (oracle.tcm.counts > 0) | np.eye(oracle.n, dtype=bool)
    diff = np.argwhere(closure != live)
    if len(diff):
        v, u = (int(x) + 1 for x in diff[0])
        raise CheckFailure(f"reachability of ({v}, {u}) disagrees with brute force", index, (v, u))


def make_oracle(commands: list[Command], **kwargs) -> DynamicReachability:
    if not commands or not isinstance(commands[0], Init):
        raise ValidationError("stream must start with init")
    return DynamicReachability(commands[0].n, **kwargs)


def run_stream(commands: list[Command], mode: str = "fast", oracle: DynamicReachability | None = None) -> RunReport:
    """Replay ``commands``; ``mode="checked"`` diffs against the references."""
    if mode not in ("fast", "checked"):
        raise ValueError(f"unknown mode {mode!r}")
    checked = mode == "checked"
    if oracle is None:
        oracle = make_oracle(commands)
    report = RunReport()
    spent = {"insert": 0.0, "delete": 0.0, "query": 0.0}
    seen = {"insert": 0, "delete": 0, "query": 0}
    clock = time.perf_counter
    for index, cmd in enumerate(commands):
        if isinstance(cmd, Init):
            if index:
                raise ValidationError("init appears more than once")
            continue
        if isinstance(cmd, Query):
            t0 = clock()
            answer = oracle.query(cmd.v, cmd.u)
            spent["query"] += clock() - t0
            seen["query"] += 1
            if checked and answer != reachable_bruteforce(oracle.store.alive_edges(), cmd.v, cmd.u):
                raise CheckFailure(f"query answered {int(answer)}", index, (cmd.v, cmd.u))
            report.outputs.append(int(answer))
            continue
        kind = "insert" if isinstance(cmd, Insert) else "delete"
        t0 = clock()
        if kind == "insert":
            oracle.insert(cmd.center, cmd.edges)
        else:
            oracle.delete(cmd.edges)
        spent[kind] += clock() - t0
        seen[kind] += 1
        if checked:
            _check_update(oracle, index)
    report.counters = oracle.snapshot_counters().as_dict()
    report.timings = spent
    report.op_counts = seen
    return report
