"""Brute-force reference oracles for differential testing.

Nothing here shares traversal code with :mod:`dynreach.reachtree`.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

Edge = tuple[int, int]


def reachable_bruteforce(view: Iterable[Edge], v: int, u: int) -> bool:
    if v == u:
        return True
    adj: dict[int, list[int]] = {}
    for a, b in view:
        adj.setdefault(a, []).append(b)
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y == u:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def transitive_closure_bruteforce(view: Iterable[Edge], n: int) -> np.ndarray:
    """Reflexive closure as an ``(n, n)`` bool array, index ``[v-1, u-1]``."""
    edges = np.array(list(view), dtype=np.intp).reshape(-1, 2)
    graph = csr_matrix(
        (np.ones(len(edges)), (edges[:, 0] - 1, edges[:, 1] - 1)), shape=(n, n)
    )
    dist = shortest_path(graph, method="D", unweighted=True)
    return np.isfinite(dist)


def closure_work(closure: np.ndarray, out_degree: np.ndarray) -> int:
    """Vertices plus edges a search from every source would touch."""
    return int(closure.sum() + (closure @ out_degree).sum())


def _versioned_adjacency(store) -> tuple[dict, dict]:
    out: dict[int, list[tuple[int, int]]] = {}
    inc: dict[int, list[tuple[int, int]]] = {}
    for rec in store.records:
        if rec.alive:
            out.setdefault(rec.src, []).append((rec.dst, rec.insert_version))
            inc.setdefault(rec.dst, []).append((rec.src, rec.insert_version))
    return out, inc


def _search(adj: dict, start: int, version: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y, iv in adj.get(x, ()):
            if iv <= version and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def center_sets(state) -> dict[int, tuple[set[int], set[int]]]:
    """Fresh In/Out sets of every active center, on its own version."""
    out, inc = _versioned_adjacency(state.store)
    return {
        r: (_search(inc, r, rec.version), _search(out, r, rec.version))
        for r, rec in state.centers.items()
    }


def witness_count_oracle(state) -> np.ndarray:
    n = state.n
    sets = list(center_sets(state).values())
    ins = np.zeros((len(sets), n), dtype=np.int64)
    outs = np.zeros((len(sets), n), dtype=np.int64)
    for k, (in_set, out_set) in enumerate(sets):
        ins[k, [v - 1 for v in in_set]] = 1
        outs[k, [v - 1 for v in out_set]] = 1
    return ins.T @ outs
