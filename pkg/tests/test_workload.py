import pytest

from dynreach import InvalidArgument
from dynreach.stream import Delete, Insert, Query, parse_stream, run_stream
from dynreach.workload import SplitMix64, erdos_renyi_deletion_workload, generate_workload


def test_splitmix_reference_values():
    # published SplitMix64 outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_below_and_geometric_stay_in_range():
    rng = SplitMix64(9)
    assert all(0 <= rng.below(7) < 7 for _ in range(500))
    assert all(1 <= rng.geometric(4) <= 4 for _ in range(500))
    assert 0.0 <= rng.random() < 1.0


@pytest.mark.parametrize("model", ["erdos-renyi-touching", "path-heavy"])
def test_same_seed_same_bytes(model):
    assert generate_workload(15, 200, seed=1, model=model) == generate_workload(15, 200, seed=1, model=model)
    assert generate_workload(15, 200, seed=1, model=model) != generate_workload(15, 200, seed=2, model=model)


def test_insert_only_mix():
    commands = parse_stream(generate_workload(10, 100, (1, 0, 0), seed=3))
    assert all(isinstance(c, Insert) for c in commands[1:])
    assert len(commands) > 1


def test_round_trip():
    commands = parse_stream(generate_workload(20, 500, (0.4, 0.3, 0.3), seed=11))
    kinds = {type(c) for c in commands[1:]}
    assert kinds == {Insert, Delete, Query}
    run_stream(commands, "checked")


@pytest.mark.parametrize("mix", [(0.5, 0.5, 0.5), (1.0, 0.0), (-0.1, 0.6, 0.5)])
def test_bad_mix(mix):
    with pytest.raises(InvalidArgument):
        generate_workload(5, 10, mix)


def test_bad_model_and_sizes():
    with pytest.raises(InvalidArgument):
        generate_workload(5, 10, model="grid")
    with pytest.raises(InvalidArgument):
        generate_workload(0, 10)


def test_path_heavy_edges_are_short():
    for cmd in parse_stream(generate_workload(30, 300, (0.7, 0.1, 0.2), seed=4, model="path-heavy")):
        if isinstance(cmd, Insert):
            assert all(abs(a - b) <= 2 for a, b in cmd.edges)


def test_er_deletion_workload_shape():
    commands = parse_stream(erdos_renyi_deletion_workload(50, 4, 30, seed=2))
    inserted = [e for c in commands if isinstance(c, Insert) for e in c.edges]
    assert len(inserted) == 200 == len(set(inserted))
    deletes = [c for c in commands if isinstance(c, Delete)]
    assert len(deletes) == 30
    assert all(len(c.edges) == 1 for c in deletes)
    centers = [c.center for c in commands if isinstance(c, Insert)]
    assert len(centers) == len(set(centers))
