"""Fully dynamic reachability oracle.

Each insertion center owns an In tree and an Out tree built on the graph
version its insert created.  The witness matrix counts, for every pair, how
many centers see the pair through their trees, so a query is one lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .reachtree import DeltaReport, Direction, ReachTree
from .store import Edge, EdgeRecord, VersionedEdgeStore
from .witness import WitnessMatrix

CORRECTED = "corrected"
AS_PRINTED = "as-printed"


@dataclass
class CenterRecord:
    vertex: int
    version: int
    in_tree: ReachTree
    out_tree: ReachTree
    lifetime_decrements: int = 0
    build_cells: int = 0


@dataclass
class CenterDelta:
    """What one deletion batch did to one center."""

    vertex: int
    in_delete: DeltaReport
    out_delete: DeltaReport


@dataclass(frozen=True)
class Counters:
    ins: int = 0
    dels: int = 0
    tcm_cell_updates: int = 0
    tree_work: int = 0
    tree_build_work: int = 0
    lifetime_decrements: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "ins": self.ins,
            "del": self.dels,
            "tcm_cell_updates": self.tcm_cell_updates,
            "tree_work": self.tree_work,
            "tree_build_work": self.tree_build_work,
            "lifetime_decrements": dict(self.lifetime_decrements),
        }


class DynamicReachability:
    """Insert (edge sets centred at a vertex), delete (any edge set), query.

    ``deletion_rule`` selects how the witness matrix forgets pairs after a
    deletion; ``"as-printed"`` reproduces the double-decrementing rule and
    exists only for tests that show it breaks the counts.
    """

    def __init__(self, n: int, deletion_rule: str = CORRECTED):
        if deletion_rule not in (CORRECTED, AS_PRINTED):
            raise ValueError(f"unknown deletion rule {deletion_rule!r}")
        self.store = VersionedEdgeStore(n)
        self.n = n
        self.tcm = WitnessMatrix(n)
        self.centers: dict[int, CenterRecord] = {}
        self.deletion_rule = deletion_rule
        self.timeline = 0
        self.ins = 0
        self.dels = 0
        self.tree_work = 0
        self.tree_build_work = 0
        self.last_deltas: list[CenterDelta] = []

    def insert(self, v: int, edge_set: Iterable[Edge]) -> CenterRecord:
        t = self.store.record_insertion(v, edge_set)
        old = self.centers.pop(v, None)
        if old is not None:
            self.tcm.apply_center_decrement(old.in_tree.member_set, old.out_tree.member_set)
        in_tree = ReachTree(self.store.version_view(t, reverse=True), v, Direction.IN)
        out_tree = ReachTree(self.store.version_view(t), v, Direction.OUT)
        self.tree_build_work += in_tree.build_work + out_tree.build_work
        self.tcm.apply_center_increment(in_tree.member_set, out_tree.member_set)
        rec = CenterRecord(v, t, in_tree, out_tree)
        rec.build_cells = len(in_tree) * len(out_tree)
        self.centers[v] = rec
        self.timeline += 1
        self.ins += 1
        return rec

    def delete(self, edge_set: Iterable[Edge]) -> list[EdgeRecord]:
        killed = self.store.record_deletion(edge_set)
        deltas: list[tuple[CenterRecord, DeltaReport, DeltaReport]] = []
        if killed:
            for rec in self.centers.values():
                mine = [k.pair for k in killed if k.insert_version <= rec.version]
                if not mine:
                    continue
                before = rec.in_tree.work_counter + rec.out_tree.work_counter
                in_del = rec.in_tree.delete_edges((b, a) for a, b in mine)
                out_del = rec.out_tree.delete_edges(mine)
                self.tree_work += rec.in_tree.work_counter + rec.out_tree.work_counter - before
                if in_del or out_del:
                    deltas.append((rec, in_del, out_del))
        # every tree is updated before any count changes
        for rec, in_del, out_del in deltas:
            rec.lifetime_decrements += self._forget(rec, in_del.removed, out_del.removed)
        self.last_deltas = [CenterDelta(r.vertex, i, o) for r, i, o in deltas]
        self.timeline += 1
        self.dels += 1
        return killed

    def _forget(self, rec: CenterRecord, in_delete, out_delete) -> int:
        in_after = rec.in_tree.member_set
        out_after = rec.out_tree.member_set
        out_before = out_after | out_delete if in_delete else ()
        if self.deletion_rule == AS_PRINTED:
            in_before = in_after | in_delete if out_delete else ()
            return self.tcm.apply_deletion_delta_as_printed(in_delete, out_before, in_before, out_delete)
        return self.tcm.apply_deletion_delta(in_delete, out_before, in_after, out_delete)

    def query(self, v: int, u: int) -> bool:
        if v == u and 1 <= v <= self.n:
            return True
        return self.tcm.query_cell(v, u)

    def snapshot_counters(self) -> Counters:
        return Counters(
            ins=self.ins,
            dels=self.dels,
            tcm_cell_updates=self.tcm.cell_update_counter,
            tree_work=self.tree_work,
            tree_build_work=self.tree_build_work,
            lifetime_decrements={v: r.lifetime_decrements for v, r in sorted(self.centers.items())},
        )
