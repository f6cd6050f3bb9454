"""Witness-count matrix.

``counts[u][z]`` is the number of active insertion centers ``r`` with
``u`` in In[r] and ``z`` in Out[r].  A pair is reachable iff its count is
positive.  Vertices are 1-based at the API, 0-based in the array.
"""

from __future__ import annotations

from typing import Collection

import numpy as np

from .errors import InvalidArgument, InvariantViolation


def _index(vertices: Collection[int]) -> np.ndarray:
    return np.fromiter(vertices, dtype=np.intp, count=len(vertices)) - 1


class WitnessMatrix:
    def __init__(self, n: int):
        if n < 1:
            raise InvalidArgument(f"vertex count must be >= 1, got {n!r}")
        self.n = n
        self.counts = np.zeros((n, n), dtype=np.int64)
        self.cell_update_counter = 0
        self.cell_reads = 0

    def query_cell(self, v: int, u: int) -> bool:
        if not (1 <= v <= self.n and 1 <= u <= self.n):
            raise InvalidArgument(f"pair ({v}, {u}) outside 1..{self.n}")
        self.cell_reads += 1
        return self.counts.item(v - 1, u - 1) > 0

    def __getitem__(self, pair: tuple[int, int]) -> int:
        v, u = pair
        return int(self.counts[v - 1, u - 1])

    def _rect(self, rows: Collection[int], cols: Collection[int]):
        if not rows or not cols:
            return None
        return np.ix_(_index(rows), _index(cols))

    def apply_center_increment(self, in_set: Collection[int], out_set: Collection[int]) -> None:
        rect = self._rect(in_set, out_set)
        if rect is None:
            return
        self.counts[rect] += 1
        self.cell_update_counter += len(in_set) * len(out_set)

    def _check_positive(self, rect, what: str) -> None:
        if rect is not None and (self.counts[rect] <= 0).any():
            raise InvariantViolation(f"{what} would drive a witness count negative")

    def apply_center_decrement(self, in_set: Collection[int], out_set: Collection[int]) -> None:
        rect = self._rect(in_set, out_set)
        if rect is None:
            return
        self._check_positive(rect, "center decrement")
        self.counts[rect] -= 1
        self.cell_update_counter += len(in_set) * len(out_set)

    def apply_deletion_delta(
        self,
        in_delete: Collection[int],
        out_before: Collection[int],
        in_after: Collection[int],
        out_delete: Collection[int],
    ) -> int:
        """Drop the witness pairs one center lost in a deletion batch.

        A pair (u, l) stops being witnessed when u left In (any l of the old
        Out) or when l left Out while u stayed in In.  Using the post-batch In
        for the second rectangle keeps the two rectangles disjoint, so a pair
        losing both endpoints is decremented once.  Returns the number of
        cells decremented.
        """
        if not in_delete and not out_delete:
            return 0
        if not set(in_delete).isdisjoint(in_after):
            raise InvariantViolation("in_delete and in_after overlap")
        first = self._rect(in_delete, out_before)
        second = self._rect(in_after, out_delete)
        self._check_positive(first, "deletion delta")
        self._check_positive(second, "deletion delta")
        changed = 0
        if first is not None:
            self.counts[first] -= 1
            changed += len(in_delete) * len(out_before)
        if second is not None:
            self.counts[second] -= 1
            changed += len(in_after) * len(out_delete)
        self.cell_update_counter += changed
        return changed

    def apply_deletion_delta_as_printed(
        self,
        in_delete: Collection[int],
        out_before: Collection[int],
        in_before: Collection[int],
        out_delete: Collection[int],
    ) -> int:
        """Both rectangles over pre-batch memberships.

        Pairs in ``in_delete x out_delete`` are decremented twice.  Kept only
        to show that the witness-count check catches this rule; no negative
        guard, so the damage stays visible.
        """
        changed = 0
        first = self._rect(in_delete, out_before)
        second = self._rect(in_before, out_delete)
        if first is not None:
            self.counts[first] -= 1
            changed += len(in_delete) * len(out_before)
        if second is not None:
            self.counts[second] -= 1
            changed += len(in_before) * len(out_delete)
        self.cell_update_counter += changed
        return changed

    def total(self) -> int:
        return int(self.counts.sum())

    def dump(self) -> str:
        """Row-major integer dump, one matrix row per line."""
        return "\n".join(" ".join(str(int(c)) for c in row) for row in self.counts)
