"""Versioned edge store.

Every insert batch opens a new graph version ``t``; edges carry the version
that created them.  Deletes never open a version: they tombstone the edge,
which removes it from every version at once.  Version ``i`` is therefore the
set of alive edges whose ``insert_version <= i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CenterViolation, InvalidArgument

Edge = tuple[int, int]


@dataclass(eq=False)
class EdgeRecord:
    src: int
    dst: int
    insert_version: int
    alive: bool = True

    @property
    def pair(self) -> Edge:
        return (self.src, self.dst)


class VersionedEdgeStore:
    """Edge sequence over the fixed vertex set ``1..n``.

    At most one alive record exists per ``(src, dst)`` pair; re-inserting a
    dead pair creates a fresh record.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise InvalidArgument(f"vertex count must be >= 1, got {n!r}")
        self.n = n
        self.current_version = 0
        self.records: list[EdgeRecord] = []
        # alive edges only, keyed by the opposite endpoint
        self._out: list[dict[int, EdgeRecord]] = [{} for _ in range(n + 1)]
        self._in: list[dict[int, EdgeRecord]] = [{} for _ in range(n + 1)]
        self._alive = 0

    def _check_vertex(self, v) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise InvalidArgument(f"vertex {v!r} outside 1..{self.n}")

    def _dedupe(self, edge_set: Iterable[Edge]) -> list[Edge]:
        seen: dict[Edge, None] = {}
        for edge in edge_set:
            a, b = edge
            self._check_vertex(a)
            self._check_vertex(b)
            seen[(a, b)] = None
        return list(seen)

    def record_insertion(self, center: int, edge_set: Iterable[Edge]) -> int:
        """Open version ``t+1`` holding ``edge_set`` on top of version ``t``."""
        self._check_vertex(center)
        edges = self._dedupe(edge_set)
        if not edges:
            raise InvalidArgument("insert needs at least one edge")
        for a, b in edges:
            if center != a and center != b:
                raise CenterViolation(f"edge ({a}, {b}) does not touch center {center}")
            if b in self._out[a]:
                raise InvalidArgument(f"edge ({a}, {b}) is already present")
        self.current_version += 1
        t = self.current_version
        for a, b in edges:
            rec = EdgeRecord(a, b, t)
            self.records.append(rec)
            self._out[a][b] = rec
            self._in[b][a] = rec
        self._alive += len(edges)
        return t

    def record_deletion(self, edge_set: Iterable[Edge]) -> list[EdgeRecord]:
        """Tombstone every alive edge of ``edge_set``; absent edges are skipped."""
        killed = []
        for a, b in self._dedupe(edge_set):
            rec = self._out[a].pop(b, None)
            if rec is None:
                continue
            del self._in[b][a]
            rec.alive = False
            killed.append(rec)
        self._alive -= len(killed)
        return killed

    def version_view(self, i: int, reverse: bool = False) -> VersionView:
        if not isinstance(i, int) or not 0 <= i <= self.current_version:
            raise InvalidArgument(f"version {i!r} outside 0..{self.current_version}")
        return VersionView(self, i, reverse)

    def current_view(self, reverse: bool = False) -> VersionView:
        return VersionView(self, self.current_version, reverse)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._out[a]

    @property
    def num_alive(self) -> int:
        return self._alive

    def alive_edges(self) -> list[Edge]:
        return [(a, b) for a in range(1, self.n + 1) for b in self._out[a]]


class VersionView:
    """Live window on one graph version.

    The view is not a snapshot: later deletions in the store show up in it,
    which is what lets a reachability tree built on version ``i`` see its
    edges disappear.  With ``reverse=True`` every edge is flipped.
    """

    __slots__ = ("store", "version", "reverse", "n", "_fwd", "_bwd")

    def __init__(self, store: VersionedEdgeStore, version: int, reverse: bool = False):
        self.store = store
        self.version = version
        self.reverse = reverse
        self.n = store.n
        self._fwd = store._in if reverse else store._out
        self._bwd = store._out if reverse else store._in

    def successors(self, v: int) -> Iterator[int]:
        i = self.version
        for w, rec in self._fwd[v].items():
            if rec.insert_version <= i:
                yield w

    def predecessors(self, v: int) -> Iterator[int]:
        i = self.version
        for w, rec in self._bwd[v].items():
            if rec.insert_version <= i:
                yield w

    def __iter__(self) -> Iterator[Edge]:
        i = self.version
        for a in range(1, self.n + 1):
            for b, rec in self._fwd[a].items():
                if rec.insert_version <= i:
                    yield (a, b)

    def __len__(self) -> int:
        return sum(1 for _ in self)

    def __contains__(self, edge: Edge) -> bool:
        a, b = edge
        rec = self._fwd[a].get(b)
        return rec is not None and rec.insert_version <= self.version


class EdgeListView:
    """Mutable stand-alone edge view for building trees without a store.

    Callers remove edges with :meth:`discard` before handing the same edges
    to :meth:`ReachTree.delete_edges`.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = (), reverse: bool = False):
        self.n = n
        self.version = None
        self._succ: list[dict[int, None]] = [{} for _ in range(n + 1)]
        self._pred: list[dict[int, None]] = [{} for _ in range(n + 1)]
        for a, b in edges:
            if reverse:
                a, b = b, a
            self._succ[a][b] = None
            self._pred[b][a] = None

    def successors(self, v: int) -> Iterator[int]:
        return iter(self._succ[v])

    def predecessors(self, v: int) -> Iterator[int]:
        return iter(self._pred[v])

    def discard(self, edges: Iterable[Edge]) -> list[Edge]:
        removed = []
        for a, b in edges:
            if b in self._succ[a]:
                del self._succ[a][b]
                del self._pred[b][a]
                removed.append((a, b))
        return removed

    def __iter__(self) -> Iterator[Edge]:
        for a in range(1, self.n + 1):
            for b in self._succ[a]:
                yield (a, b)

    def __len__(self) -> int:
        return sum(len(s) for s in self._succ)

    def __contains__(self, edge: Edge) -> bool:
        a, b = edge
        return b in self._succ[a]
