import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynreach import CenterViolation, DynamicReachability, InvalidArgument
from dynreach.reference import transitive_closure_bruteforce, witness_count_oracle


def positive(state):
    return {(int(i) + 1, int(j) + 1): int(state.tcm.counts[i, j]) for i, j in np.argwhere(state.tcm.counts)}


def test_first_insert():
    state = DynamicReachability(3)
    state.insert(2, [(1, 2), (2, 3)])
    assert list(state.centers) == [2]
    assert positive(state) == {(1, 2): 1, (1, 3): 1, (2, 2): 1, (2, 3): 1}
    assert state.query(1, 3)
    assert not state.query(3, 1)
    assert state.snapshot_counters().tcm_cell_updates == 4


def test_reinsert_at_same_center():
    state = DynamicReachability(3)
    state.insert(2, [(1, 2), (2, 3)])
    rec = state.insert(2, [(2, 1)])
    assert rec.in_tree.members() == [1, 2]
    assert rec.out_tree.members() == [1, 2, 3]
    assert state.tcm[1, 3] == 1
    assert (state.tcm.counts == witness_count_oracle(state)).all()
    assert state.snapshot_counters().tcm_cell_updates == 4 + 4 + 6


def test_self_loop_center():
    state = DynamicReachability(5)
    state.insert(5, [(5, 5)])
    assert positive(state) == {(5, 5): 1}


def test_delete_truncates_path():
    state = DynamicReachability(3)
    state.insert(2, [(1, 2), (2, 3)])
    state.delete([(2, 3)])
    (delta,) = state.last_deltas
    assert delta.out_delete.removed == {3}
    assert not delta.in_delete.removed
    assert state.tcm[1, 3] == 0 and state.tcm[2, 3] == 0
    assert not state.query(1, 3)


def test_delete_absent_edge_changes_nothing():
    state = DynamicReachability(3)
    state.insert(2, [(1, 2), (2, 3)])
    before = state.tcm.counts.copy()
    assert state.delete([(3, 1)]) == []
    assert (state.tcm.counts == before).all()
    assert state.timeline == 2


def test_one_of_two_witnesses_survives():
    state = DynamicReachability(4)
    state.insert(2, [(1, 2), (2, 3)])
    state.insert(4, [(1, 4), (4, 3)])
    assert state.tcm[1, 3] == 2
    state.delete([(2, 3)])
    assert state.tcm[1, 3] == 1
    assert state.query(1, 3)


def test_both_sides_of_one_center_lost_in_one_batch():
    state = DynamicReachability(3)
    state.insert(2, [(1, 2), (2, 3)])
    state.delete([(1, 2), (2, 3)])
    assert positive(state) == {(2, 2): 1}
    assert state.centers[2].lifetime_decrements == 3


def test_as_printed_rule_breaks_on_that_batch():
    state = DynamicReachability(3, deletion_rule="as-printed")
    state.insert(2, [(1, 2), (2, 3)])
    state.delete([(1, 2), (2, 3)])
    assert state.tcm[1, 3] == -1
    assert not (state.tcm.counts == witness_count_oracle(state)).all()


def test_reflexive_queries_and_bounds():
    state = DynamicReachability(3)
    assert all(state.query(v, v) for v in range(1, 4))
    assert not state.query(1, 2)
    with pytest.raises(InvalidArgument):
        state.query(1, 4)
    with pytest.raises(InvalidArgument):
        state.query(0, 0)


def test_errors_from_store_leave_state_alone():
    state = DynamicReachability(3)
    with pytest.raises(CenterViolation):
        state.insert(1, [(2, 3)])
    assert state.timeline == 0 and not state.centers


def test_counters():
    state = DynamicReachability(3)
    snap = state.snapshot_counters()
    assert (snap.ins, snap.dels, snap.tcm_cell_updates, snap.tree_work, snap.lifetime_decrements) == (0, 0, 0, 0, {})
    state.insert(2, [(1, 2), (2, 3)])
    state.delete([(2, 3)])
    snap = state.snapshot_counters()
    assert (snap.ins, snap.dels) == (1, 1)
    assert snap.lifetime_decrements == {2: 2}
    assert snap.tree_work > 0
    assert state.timeline == snap.ins + snap.dels


def test_query_touches_nothing():
    state = DynamicReachability(4)
    state.insert(2, [(1, 2), (2, 3)])
    state.insert(4, [(3, 4)])
    snap = state.snapshot_counters()
    counts = state.tcm.counts.copy()
    reads = state.tcm.cell_reads
    for v in range(1, 5):
        for u in range(1, 5):
            state.query(v, u)
    assert state.snapshot_counters() == snap
    assert (state.tcm.counts == counts).all()
    assert state.tcm.cell_reads - reads == 12


@st.composite
def update_sequences(draw):
    n = draw(st.integers(2, 7))
    vertex = st.integers(1, n)
    ops = []
    for _ in range(draw(st.integers(1, 25))):
        if draw(st.booleans()):
            center = draw(vertex)
            others = draw(st.lists(st.tuples(vertex, st.booleans()), min_size=1, max_size=3))
            ops.append(("insert", center, [(center, o) if fwd else (o, center) for o, fwd in others]))
        else:
            ops.append(("delete", None, draw(st.lists(st.tuples(vertex, vertex), min_size=1, max_size=3))))
    return n, ops


@settings(max_examples=300, deadline=None)
@given(update_sequences())
def test_matches_references_after_every_update(case):
    n, ops = case
    state = DynamicReachability(n)
    answered_false: set = set()
    for kind, center, edges in ops:
        if kind == "insert":
            edges = [e for e in dict.fromkeys(edges) if not state.store.has_edge(*e)]
            if not edges:
                continue
            state.insert(center, edges)
            answered_false = set()
        else:
            state.delete(edges)
        assert (state.tcm.counts >= 0).all()
        assert (state.tcm.counts == witness_count_oracle(state)).all()
        closure = transitive_closure_bruteforce(state.store.alive_edges(), n)
        for v in range(1, n + 1):
            for u in range(1, n + 1):
                got = state.query(v, u)
                assert got == closure[v - 1, u - 1]
                if not got:
                    answered_false.add((v, u))
                else:
                    # pure deletions never revive a pair
                    assert (v, u) not in answered_false
        total = sum(len(r.in_tree) * len(r.out_tree) for r in state.centers.values())
        assert state.tcm.total() == total
        assert len(state.centers) <= n
