"""Decremental reachability tree over the SCC condensation.

A tree rooted at ``r`` tracks the set of vertices reachable from ``r``
(direction OUT) or reaching ``r`` (direction IN, built as an OUT tree on the
reversed view) while edges are deleted from the view it was built on.

Maintenance works on two levels:

* Condensation.  Every live component keeps the number of live edges that
  enter it from other live components.  The condensation is a DAG, so a
  non-root component is reachable exactly when that count is positive; when
  it drops to zero the component is removed and its out-edges cascade.
* Inside a component.  Each component keeps an out-arborescence and an
  in-arborescence around a representative vertex, both certified by levels
  (a parent always has a strictly smaller level than its child).  Losing a
  non-arborescence edge costs O(1).  An orphaned vertex first looks for a
  surviving neighbour with a smaller level; failing that, its subtree is cut
  off and re-attached from its boundary.  Vertices that cannot be
  re-attached no longer reach (or are no longer reached by) the
  representative, so the component splits and only those vertices are
  re-run through Tarjan.

``work_counter`` counts every edge scanned and vertex touched by
:meth:`ReachTree.delete_edges`.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import InvalidArgument, InvariantViolation

Edge = tuple[int, int]


class Direction(str, enum.Enum):
    OUT = "out"
    IN = "in"


@dataclass(frozen=True)
class SccNode:
    node_id: int
    members: frozenset[int]


@dataclass(frozen=True)
class DeltaReport:
    """Vertices that left a tree during one deletion batch."""

    removed: frozenset[int]

    def __bool__(self) -> bool:
        return bool(self.removed)

    def __len__(self) -> int:
        return len(self.removed)


def strong_components(
    vertices: Iterable[int],
    successors: Callable[[int], Iterable[int]],
    allowed,
) -> tuple[list[list[int]], int]:
    """Iterative Tarjan restricted to ``allowed``.

    Returns the components in reverse topological order and the number of
    edges scanned.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    work = 0
    counter = 0
    for s in vertices:
        if s in index:
            continue
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack.add(s)
        frames: list[tuple[int, Iterator[int]]] = [(s, iter(successors(s)))]
        while frames:
            v, it = frames[-1]
            descended = False
            for w in it:
                work += 1
                if w not in allowed:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    frames.append((w, iter(successors(w))))
                    descended = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps, work


class ReachTree:
    def __init__(self, view, root: int, direction: Direction = Direction.OUT):
        n = view.n
        if not isinstance(root, int) or not 1 <= root <= n:
            raise InvalidArgument(f"root {root!r} outside 1..{n}")
        self.view = view
        self.root = root
        self.direction = Direction(direction)
        self.version = getattr(view, "version", None)
        self.n = n
        self.work_counter = 0
        self.build_work = 0

        self._comp = [-1] * (n + 1)
        self._comps: dict[int, set[int]] = {}
        self._rep: dict[int, int] = {}
        self._count: dict[int, int] = {}
        self._members: set[int] = set()
        self._opar = [0] * (n + 1)
        self._olev = [0] * (n + 1)
        self._ipar = [0] * (n + 1)
        self._ilev = [0] * (n + 1)
        self._ochild: dict[int, set[int]] = {}
        self._ichild: dict[int, set[int]] = {}
        self._next_id = 0
        self._work = 0
        self._build()
        self.build_work = self._work
        self._work = 0

    # -- construction -----------------------------------------------------

    def _build(self) -> None:
        succ = self.view.successors
        root = self.root
        seen = {root}
        order = [root]
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for w in succ(v):
                self._work += 1
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        self._members = seen
        comps, work = strong_components(order, succ, seen)
        self._work += work
        for comp in comps:
            self._new_component(comp)
        self._root_comp = self._comp[root]
        count = self._count
        cmap = self._comp
        for x in order:
            cx = cmap[x]
            for w in succ(x):
                self._work += 1
                cw = cmap[w]
                if cw != cx:
                    count[cw] += 1

    def _new_component(self, verts: list[int]) -> int:
        cid = self._next_id
        self._next_id += 1
        members = set(verts)
        rep = self.root if self.root in members else min(members)
        self._comps[cid] = members
        self._rep[cid] = rep
        self._count[cid] = 0
        for v in verts:
            self._comp[v] = cid
        if len(verts) == 1:
            self._opar[rep] = self._ipar[rep] = 0
            self._olev[rep] = self._ilev[rep] = 0
            return cid
        self._grow(cid, rep, self._opar, self._olev, self._ochild, self.view.successors)
        self._grow(cid, rep, self._ipar, self._ilev, self._ichild, self.view.predecessors)
        return cid

    def _grow(self, cid, rep, par, lev, child, forward) -> None:
        comp = self._comp
        par[rep] = 0
        lev[rep] = 0
        seen = {rep}
        frontier = [rep]
        i = 0
        while i < len(frontier):
            v = frontier[i]
            i += 1
            for w in forward(v):
                self._work += 1
                if w not in seen and comp[w] == cid:
                    seen.add(w)
                    par[w] = v
                    lev[w] = lev[v] + 1
                    child.setdefault(v, set()).add(w)
                    frontier.append(w)

    # -- queries ----------------------------------------------------------

    def reaches(self, v: int) -> bool:
        return self._comp[v] >= 0

    __contains__ = reaches

    def members(self) -> list[int]:
        return sorted(self._members)

    @property
    def member_set(self) -> set[int]:
        """Live membership set; do not mutate."""
        return self._members

    def __len__(self) -> int:
        return len(self._members)

    def scc_nodes(self) -> list[SccNode]:
        nodes = [SccNode(cid, frozenset(m)) for cid, m in self._comps.items()]
        nodes.sort(key=lambda s: min(s.members))
        return nodes

    # -- deletions --------------------------------------------------------

    def delete_edges(self, killed: Iterable[Edge]) -> DeltaReport:
        """Account for ``killed`` edges, already gone from the view."""
        comp = self._comp
        opar, ipar = self._opar, self._ipar
        removed: set[int] = set()
        dirty: dict[int, tuple[list[int], list[int]]] = {}
        zero: list[int] = []
        for a, b in killed:
            self._work += 1
            ca = comp[a]
            if ca < 0:
                continue
            cb = comp[b]
            if cb < 0:
                continue
            if ca != cb:
                self._count[cb] -= 1
                if self._count[cb] == 0 and cb != self._root_comp:
                    zero.append(cb)
                continue
            if opar[b] == a and a != b:
                opar[b] = 0
                self._ochild[a].discard(b)
                dirty.setdefault(ca, ([], []))[0].append(b)
            if ipar[a] == b and a != b:
                ipar[a] = 0
                self._ichild[b].discard(a)
                dirty.setdefault(ca, ([], []))[1].append(a)
        self._cascade(zero, removed)
        for cid in sorted(dirty):
            if cid in self._comps:
                self._repair_component(cid, *dirty[cid], removed)
        self.work_counter += self._work
        self._work = 0
        return DeltaReport(frozenset(removed))

    def _cascade(self, queue: list[int], removed: set[int]) -> None:
        comp = self._comp
        count = self._count
        succ = self.view.successors
        while queue:
            c = queue.pop()
            verts = self._comps.pop(c, None)
            if verts is None:
                continue
            del count[c]
            del self._rep[c]
            for v in verts:
                comp[v] = -1
            for v in verts:
                self._work += 1
                self._members.discard(v)
                removed.add(v)
                self._opar[v] = self._ipar[v] = 0
                self._ochild.pop(v, None)
                self._ichild.pop(v, None)
                for w in succ(v):
                    self._work += 1
                    cw = comp[w]
                    if cw >= 0:
                        count[cw] -= 1
                        if count[cw] == 0 and cw != self._root_comp:
                            queue.append(cw)

    def _repair_component(self, cid, out_orphans, in_orphans, removed) -> None:
        view = self.view
        failed = set()
        if out_orphans:
            failed |= self._repair_arb(
                cid, out_orphans, self._opar, self._olev, self._ochild,
                view.predecessors, view.successors,
            )
        if in_orphans:
            failed |= self._repair_arb(
                cid, in_orphans, self._ipar, self._ilev, self._ichild,
                view.successors, view.predecessors,
            )
        if failed:
            self._split(cid, failed, removed)

    def _repair_arb(self, cid, orphans, par, lev, child, candidates, forward) -> set[int]:
        # Returns the vertices of the component that could not be re-attached.
        comp = self._comp
        failed: set[int] = set()
        pending = set(orphans)
        heap = [(lev[v], v) for v in pending]
        heapq.heapify(heap)
        while heap:
            lv, v = heapq.heappop(heap)
            if v not in pending:
                continue
            pending.discard(v)
            for x in candidates(v):
                self._work += 1
                if comp[x] == cid and lev[x] < lv and x not in failed:
                    par[v] = x
                    child.setdefault(x, set()).add(v)
                    break
            else:
                failed |= self._reattach(cid, v, par, lev, child, candidates, forward, failed, pending)
        return failed

    def _reattach(self, cid, v, par, lev, child, candidates, forward, failed, pending) -> set[int]:
        comp = self._comp
        sub = [v]
        subset = {v}
        i = 0
        while i < len(sub):
            y = sub[i]
            i += 1
            self._work += 1
            kids = child.pop(y, None)
            if kids:
                subset.update(kids)
                sub.extend(kids)
        best: dict[int, tuple[int, int]] = {}
        heap: list[tuple[int, int, int]] = []
        for y in sub:
            pending.discard(y)
            par[y] = 0
            for x in candidates(y):
                self._work += 1
                if comp[x] == cid and x not in subset and x not in failed:
                    d = lev[x] + 1
                    if y not in best or d < best[y][0]:
                        best[y] = (d, x)
            if y in best:
                heap.append((best[y][0], y, best[y][1]))
        heapq.heapify(heap)
        settled: set[int] = set()
        while heap:
            d, y, x = heapq.heappop(heap)
            if y in settled or best[y] != (d, x):
                continue
            settled.add(y)
            par[y] = x
            lev[y] = d
            child.setdefault(x, set()).add(y)
            for z in forward(y):
                self._work += 1
                if z in subset and z not in settled:
                    cand = (d + 1, y)
                    if z not in best or cand < best[z]:
                        best[z] = cand
                        heapq.heappush(heap, (d + 1, z, y))
        return subset - settled

    def _split(self, cid, detached: set[int], removed: set[int]) -> None:
        comp = self._comp
        count = self._count
        succ = self.view.successors
        pred = self.view.predecessors
        for y in detached:
            for par, child in ((self._opar, self._ochild), (self._ipar, self._ichild)):
                p = par[y]
                if p:
                    kids = child.get(p)
                    if kids is not None:
                        kids.discard(y)
                    par[y] = 0
                kids = child.pop(y, None)
                if kids and not kids <= detached:
                    raise InvariantViolation(f"arborescence of component {cid} crosses a split")
        lost = 0
        for y in detached:
            for x in pred(y):
                self._work += 1
                cx = comp[x]
                if cx >= 0 and cx != cid:
                    lost += 1
        self._comps[cid] -= detached
        pieces, work = strong_components(sorted(detached), succ, detached)
        self._work += work
        new_ids = [self._new_component(piece) for piece in pieces]
        gained = 0
        for y in detached:
            cy = comp[y]
            entering = 0
            for x in pred(y):
                self._work += 1
                cx = comp[x]
                if cx >= 0 and cx != cy:
                    entering += 1
            count[cy] += entering
            for w in succ(y):
                self._work += 1
                if comp[w] == cid:
                    gained += 1
        count[cid] += gained - lost
        zero = [p for p in new_ids if count[p] == 0]
        if count[cid] == 0 and cid != self._root_comp:
            zero.append(cid)
        self._cascade(zero, removed)

    # -- self-check -------------------------------------------------------

    def check_invariants(self) -> None:
        """Recompute the bookkeeping from scratch and compare (test helper)."""
        succ = self.view.successors
        comp = self._comp
        members = {v for v in range(1, self.n + 1) if comp[v] >= 0}
        if members != self._members:
            raise InvariantViolation("member set out of sync with component map")
        if self.root not in members:
            raise InvariantViolation("root left its own tree")
        counted = {c: 0 for c in self._comps}
        for x in members:
            for w in succ(x):
                if comp[w] < 0:
                    raise InvariantViolation(f"edge ({x}, {w}) leaves the tree")
                if comp[w] != comp[x]:
                    counted[comp[w]] += 1
        if counted != self._count:
            raise InvariantViolation(f"entry counts {self._count} != {counted}")
        for cid, verts in self._comps.items():
            rep = self._rep[cid]
            for par, lev in ((self._opar, self._olev), (self._ipar, self._ilev)):
                for v in verts:
                    if v == rep:
                        continue
                    p = par[v]
                    if not p or comp[p] != cid or lev[p] >= lev[v]:
                        raise InvariantViolation(f"bad arborescence parent for {v} in {cid}")
            for v in verts:
                p = self._opar[v]
                if p and v not in set(succ(p)):
                    raise InvariantViolation(f"out-parent edge ({p}, {v}) is dead")
                p = self._ipar[v]
                if p and p not in set(succ(v)):
                    raise InvariantViolation(f"in-parent edge ({v}, {p}) is dead")


def build_tree(view, root: int, direction: Direction = Direction.OUT) -> ReachTree:
    """Build a reachability tree; pass a reversed view for an IN tree."""
    return ReachTree(view, root, direction)
