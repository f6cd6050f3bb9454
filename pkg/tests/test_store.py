import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynreach import CenterViolation, InvalidArgument, VersionedEdgeStore


def test_new_store_is_empty():
    store = VersionedEdgeStore(3)
    assert store.current_version == 0
    assert list(store.version_view(0)) == []
    assert VersionedEdgeStore(1).n == 1


@pytest.mark.parametrize("n", [0, -2])
def test_new_store_rejects_bad_size(n):
    with pytest.raises(InvalidArgument):
        VersionedEdgeStore(n)


def test_first_insertion_opens_version_one():
    store = VersionedEdgeStore(3)
    assert store.record_insertion(2, [(1, 2), (2, 3)]) == 1
    assert set(store.version_view(1)) == {(1, 2), (2, 3)}


def test_edge_must_touch_center():
    store = VersionedEdgeStore(3)
    with pytest.raises(CenterViolation):
        store.record_insertion(1, [(2, 3)])
    assert store.current_version == 0


@pytest.mark.parametrize("edges", [[(0, 1)], [(1, 4)], []])
def test_insertion_rejects_bad_edges(edges):
    store = VersionedEdgeStore(3)
    with pytest.raises(InvalidArgument):
        store.record_insertion(1, edges)


def test_duplicate_alive_edge_is_rejected_but_batch_duplicates_collapse():
    store = VersionedEdgeStore(3)
    store.record_insertion(1, [(1, 2), (1, 2)])
    assert len(store.records) == 1
    with pytest.raises(InvalidArgument):
        store.record_insertion(1, [(1, 2)])


def test_successive_insertions_nest():
    store = VersionedEdgeStore(3)
    store.record_insertion(1, [(1, 2)])
    store.record_insertion(2, [(2, 3)])
    assert set(store.version_view(1)) == {(1, 2)}
    assert set(store.version_view(2)) == {(1, 2), (2, 3)}
    assert len(store.version_view(2)) == 2


def test_deletion_hits_every_version_and_keeps_t():
    store = VersionedEdgeStore(3)
    store.record_insertion(1, [(1, 2)])
    store.record_insertion(2, [(2, 3)])
    killed = store.record_deletion([(1, 2)])
    assert [(r.src, r.dst, r.insert_version, r.alive) for r in killed] == [(1, 2, 1, False)]
    assert store.current_version == 2
    assert list(store.version_view(1)) == []
    assert set(store.version_view(2)) == {(2, 3)}


def test_deleting_absent_edge_is_noop():
    store = VersionedEdgeStore(3)
    store.record_insertion(1, [(1, 3)])
    assert store.record_deletion([(1, 2)]) == []
    assert set(store.version_view(1)) == {(1, 3)}


def test_deletion_validates_endpoints():
    store = VersionedEdgeStore(3)
    with pytest.raises(InvalidArgument):
        store.record_deletion([(1, 9)])


def test_reinsert_creates_fresh_record():
    store = VersionedEdgeStore(3)
    store.record_insertion(1, [(1, 2)])
    store.record_deletion([(1, 2)])
    store.record_insertion(3, [(3, 1)])
    assert store.record_insertion(1, [(1, 2)]) == 3
    first, _, second = store.records
    assert (first.alive, first.insert_version) == (False, 1)
    assert (second.alive, second.insert_version) == (True, 3)
    assert list(store.version_view(1)) == []
    assert (1, 2) in store.version_view(3)


def test_version_view_bounds_and_reverse():
    store = VersionedEdgeStore(2)
    store.record_insertion(1, [(1, 2)])
    assert list(store.version_view(1, reverse=True)) == [(2, 1)]
    assert list(store.version_view(1, reverse=True).successors(2)) == [1]
    with pytest.raises(InvalidArgument):
        store.version_view(2)


def test_self_loop_is_stored():
    store = VersionedEdgeStore(2)
    store.record_insertion(2, [(2, 2)])
    assert (2, 2) in store.version_view(1)


operations = st.lists(
    st.tuples(st.booleans(), st.integers(1, 5), st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), max_size=4)),
    max_size=30,
)


def _replay(ops):
    store = VersionedEdgeStore(5)
    inserts = 0
    for is_insert, center, edges in ops:
        if is_insert:
            batch = [(a, b) for a, b in edges if center in (a, b) and not store.has_edge(a, b)]
            if batch:
                store.record_insertion(center, batch)
                inserts += 1
        else:
            store.record_deletion(edges)
    return store, inserts


@settings(max_examples=150, deadline=None)
@given(operations)
def test_views_nest_and_count_versions(ops):
    store, inserts = _replay(ops)
    assert store.current_version == inserts
    views = [set(store.version_view(i)) for i in range(store.current_version + 1)]
    assert views[0] == set()
    for earlier, later in zip(views, views[1:]):
        assert earlier <= later
    dead = {r.pair for r in store.records if not r.alive} - set(store.alive_edges())
    assert not dead & views[-1]
    again, _ = _replay(ops)
    assert [set(again.version_view(i)) for i in range(again.current_version + 1)] == views
