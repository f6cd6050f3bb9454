"""Deterministic workload generation.

All randomness comes from :class:`SplitMix64`, a 64-bit generator small
enough to re-implement anywhere, so a ``(parameters, seed)`` pair names the
same stream in any language.  The derivations used on top of it:

* ``next_u64``: ``state += 0x9E3779B97F4A7C15``; then
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``, ``z ^ (z >> 31)``, all mod 2**64.
* ``random``: ``(next_u64 >> 11) * 2**-53``, a float in [0, 1).
* ``below(k)``: rejection sampling; draw ``x = next_u64`` until
  ``x < 2**64 - (2**64 % k)``, return ``x % k``.
* ``geometric(cap)``: ``k = 1``; while ``k < cap`` and ``random() < 0.5``: ``k += 1``.

Mixed streams (:func:`generate_workload`) draw one ``random()`` per step and
pick insert / delete / query by the cumulative mix.  An insert picks a center
``c = 1 + below(n)`` and ``k = geometric(n - 1)`` candidate edges; each
candidate draws its other endpoint and an orientation (model-specific, see
:func:`_candidate`).  Candidates already alive or repeated are dropped; a
batch left empty emits nothing.  A delete draws ``k = geometric(alive)`` and
removes ``k`` alive edges by repeated ``below(len(alive))`` picks from the
alive list (kept in insertion order, removals swap the last element into the
hole).  With no alive edges nothing is emitted.  A query draws ``v`` then
``u`` with ``1 + below(n)``.  The stream opens with ``init n``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidArgument

MASK = (1 << 64) - 1
MODELS = ("erdos-renyi-touching", "path-heavy")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        if k <= 0:
            raise InvalidArgument("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def geometric(self, cap: int) -> int:
        k = 1
        while k < cap and self.random() < 0.5:
            k += 1
        return k


class _AliveEdges:
    def __init__(self):
        self.items: list[tuple[int, int]] = []
        self.pos: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, edge) -> bool:
        return edge in self.pos

    def add(self, edge) -> None:
        self.pos[edge] = len(self.items)
        self.items.append(edge)

    def pop_at(self, i: int) -> tuple[int, int]:
        edge = self.items[i]
        last = self.items.pop()
        del self.pos[edge]
        if last != edge:
            self.items[i] = last
            self.pos[last] = i
        return edge


def _candidate(rng: SplitMix64, n: int, center: int, model: str) -> tuple[int, int]:
    if model == "erdos-renyi-touching":
        other = 1 + rng.below(n)
        return (center, other) if rng.below(2) == 0 else (other, center)
    # path-heavy: short hops, mostly pointing up the vertex order
    hop = 1 + rng.below(2)
    forward = rng.random() < 0.8
    if rng.below(2) == 0:
        other = center + hop if center + hop <= n else center - hop
    else:
        other = center - hop if center - hop >= 1 else center + hop
    other = min(max(other, 1), n)
    lo, hi = min(center, other), max(center, other)
    return (lo, hi) if forward else (hi, lo)


def _check_mix(mix: Sequence[float]) -> tuple[float, float, float]:
    if len(mix) != 3 or any(p < 0 for p in mix) or abs(sum(mix) - 1.0) > 1e-9:
        raise InvalidArgument(f"mix must be three non-negative numbers summing to 1, got {mix!r}")
    return tuple(float(p) for p in mix)


def generate_workload(
    n: int,
    ops: int,
    mix: Sequence[float] = (0.4, 0.3, 0.3),
    seed: int = 1,
    model: str = "erdos-renyi-touching",
) -> str:
    if n < 1 or ops < 1:
        raise InvalidArgument("n and ops must be >= 1")
    if model not in MODELS:
        raise InvalidArgument(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    p_ins, p_del, _ = _check_mix(mix)
    rng = SplitMix64(seed)
    alive = _AliveEdges()
    lines = [f"init {n}"]
    for _ in range(ops):
        r = rng.random()
        if r < p_ins:
            center = 1 + rng.below(n)
            batch: dict[tuple[int, int], None] = {}
            for _ in range(rng.geometric(max(n - 1, 1))):
                edge = _candidate(rng, n, center, model)
                if edge not in alive:
                    batch[edge] = None
            if not batch:
                continue
            for edge in batch:
                alive.add(edge)
            lines.append(f"insert {center} " + " ".join(f"{a} {b}" for a, b in batch))
        elif r < p_ins + p_del:
            if not alive:
                continue
            picked = [alive.pop_at(rng.below(len(alive))) for _ in range(rng.geometric(len(alive)))]
            lines.append("delete " + " ".join(f"{a} {b}" for a, b in picked))
        else:
            v = 1 + rng.below(n)
            u = 1 + rng.below(n)
            lines.append(f"query {v} {u}")
    return "\n".join(lines) + "\n"


def erdos_renyi_deletion_workload(n: int, avg_degree: float, deletes: int, seed: int) -> str:
    """Random graph with about ``avg_degree * n`` edges, then single-edge deletes.

    The ``m`` distinct non-loop pairs are drawn uniformly; each pair is
    credited to one of its endpoints (a fair coin), and every vertex holding
    edges is inserted once, in a random order, as the center of its batch.
    The delete phase removes ``deletes`` uniformly chosen alive edges one at
    a time.
    """
    rng = SplitMix64(seed)
    m = min(int(avg_degree * n), n * (n - 1))
    pairs = _AliveEdges()
    while len(pairs) < m:
        a = 1 + rng.below(n)
        b = 1 + rng.below(n)
        if a != b and (a, b) not in pairs:
            pairs.add((a, b))
    batches: dict[int, list[tuple[int, int]]] = {}
    for a, b in pairs.items:
        batches.setdefault(a if rng.below(2) == 0 else b, []).append((a, b))
    centers = sorted(batches)
    for i in range(len(centers) - 1, 0, -1):
        j = rng.below(i + 1)
        centers[i], centers[j] = centers[j], centers[i]
    lines = [f"init {n}"]
    for c in centers:
        lines.append(f"insert {c} " + " ".join(f"{a} {b}" for a, b in batches[c]))
    for _ in range(min(deletes, len(pairs))):
        a, b = pairs.pop_at(rng.below(len(pairs)))
        lines.append(f"delete {a} {b}")
    return "\n".join(lines) + "\n"
