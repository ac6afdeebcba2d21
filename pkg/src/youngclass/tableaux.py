"""Robinson-Schensted row insertion and the shape map."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .partitions import Partition
from .permutations import Permutation


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(r) for r in rows))  # row lengths must form a partition
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be exactly 1..n")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not strictly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                raise ValueError("columns are not strictly increasing")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class TableauPair:
    p_tableau: StandardTableau
    q_tableau: StandardTableau

    def __post_init__(self) -> None:
        if self.p_tableau.shape != self.q_tableau.shape:
            raise ValueError("insertion and recording tableaux differ in shape")

    @property
    def shape(self) -> Partition:
        return self.p_tableau.shape


def rsk(pi: Permutation) -> TableauPair:
    """Row-insert the values of `pi` left to right, recording cell creation in Q."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(pi.values, 1):
        for r, row in enumerate(p_rows):
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[j], x = x, row[j]
        else:
            p_rows.append([x])
            q_rows.append([step])
    return TableauPair(StandardTableau(tuple(map(tuple, p_rows))),
                       StandardTableau(tuple(map(tuple, q_rows))))


def shape_of_values(values: Sequence[int]) -> tuple[int, ...]:
    """Row lengths after inserting distinct `values`; no validation, no cache."""
    rows: list[list[int]] = []
    for x in values:
        for row in rows:
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return tuple(len(r) for r in rows)


@lru_cache(maxsize=1 << 18)
def shape(pi: Permutation) -> Partition:
    """sh(pi): row lengths of the insertion tableau, without recording Q."""
    return Partition(shape_of_values(pi.values))
