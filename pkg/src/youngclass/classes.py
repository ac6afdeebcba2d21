"""Young classes: down-sets of shapes and the permutation classes they define."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .partitions import (
    Partition,
    covers_below,
    hook,
    parse_partition,
    partitions_up_to,
)
from .permutations import (
    ENUMERATION_BOUND,
    Permutation,
    all_permutations,
    one_point_deletions,
)
from .tableaux import shape

Membership = Callable[[Permutation], bool]


@dataclass(frozen=True)
class ShapeSet:
    """A finite set of partitions, all of size at most `max_size`."""

    max_size: int
    members: frozenset[Partition] = field(default_factory=frozenset)
    closed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        too_big = [p for p in self.members if p.size > self.max_size]
        if too_big:
            raise ValueError(f"{min(too_big)} is larger than max_size={self.max_size}")

    def __contains__(self, p: object) -> bool:
        return p in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Partition]:
        return sorted(self.members, key=lambda p: (p.size, tuple(-x for x in p.parts)))

    def contains_shape_of(self, pi: Permutation) -> bool:
        return shape(pi) in self.members

    @classmethod
    def from_predicate(cls, keep: Callable[[Partition], bool], max_size: int) -> "ShapeSet":
        s = cls(max_size, frozenset(p for p in partitions_up_to(max_size) if keep(p)))
        return cls(max_size, s.members, is_downward_closed(s))


def downward_close(generators: Iterable[Partition], max_size: int) -> ShapeSet:
    """Least down-set containing `generators`, saturated one cover at a time."""
    gens = list(generators)
    for g in gens:
        if g.size > max_size:
            raise ValueError(f"generator {g} exceeds max_size={max_size}")
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for q in frontier:
            if q.size == 0:
                continue
            for p in covers_below(q):
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return ShapeSet(max_size, frozenset(seen), closed=True)


def violated_covers(s: ShapeSet) -> list[tuple[Partition, Partition]]:
    """Pairs (p, q) with q a member, p covered by q, and p missing."""
    out = []
    for q in s.sorted_members():
        if q.size:
            out.extend((p, q) for p in covers_below(q) if p not in s.members)
    return out


def is_downward_closed(s: ShapeSet) -> bool:
    # Covers generate the whole order, so checking them suffices.
    for q in s.members:
        if q.size and any(p not in s.members for p in covers_below(q)):
            return False
    return True


def _check_n(n: int, bound: int) -> None:
    if n > bound:
        raise ValueError(f"n = {n} exceeds the enumeration bound {bound}")


def class_members(s: ShapeSet, n: int, bound: int = ENUMERATION_BOUND) -> set[Permutation]:
    """Every permutation of length `n` whose shape lies in `s`."""
    if n > s.max_size:
        raise ValueError(f"n = {n} exceeds max_size={s.max_size}")
    _check_n(n, bound)
    return {pi for pi in all_permutations(n, bound) if shape(pi) in s.members}


@dataclass(frozen=True)
class YoungViolation:
    """Why a membership predicate is not a Young class.

    kind "deletion": `first` is a member and `second`, one of its one-point
    deletions, is not.  kind "shape": `first` and `second` share a shape but
    only `first` is a member.
    """

    kind: str
    first: Permutation
    second: Permutation

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "first": str(self.first),
            "second": str(self.second),
            "shape": str(shape(self.first)),
        }


def find_young_violation(member: Membership, n_max: int, bound: int = ENUMERATION_BOUND) -> YoungViolation | None:
    """First violation in length-then-lexicographic order, or None."""
    _check_n(n_max, bound)
    for n in range(n_max + 1):
        verdicts = {pi: member(pi) for pi in all_permutations(n, bound)}
        for pi, inside in verdicts.items():
            if not inside or n == 0:
                continue
            for sigma in one_point_deletions(pi):
                if not member(sigma):
                    return YoungViolation("deletion", pi, sigma)
        by_shape: dict[Partition, tuple[Permutation, bool]] = {}
        for pi, inside in verdicts.items():
            sh = shape(pi)
            if sh not in by_shape:
                by_shape[sh] = (pi, inside)
            elif by_shape[sh][1] != inside:
                first, first_inside = by_shape[sh]
                return YoungViolation("shape", first, pi) if first_inside else YoungViolation("shape", pi, first)
    return None


def verify_young_class(member: Membership, n_max: int, bound: int = ENUMERATION_BOUND) -> bool:
    """Deletion-closed and shape-saturated at every length up to `n_max`."""
    return find_young_violation(member, n_max, bound) is None


def monotone_bound(s: ShapeSet) -> tuple[int, int] | None:
    """Least (a, d) with the hook (a, 1^(d-1)) absent from the closed set `s`.

    Every member pi then has lis(pi) < a or lds(pi) < d.  None means every
    hook up to max_size is present, so no bound is visible at this size.
    """
    if not s.closed and not is_downward_closed(s):
        raise ValueError("monotone_bound needs a downward closed shape set")
    for a in range(1, s.max_size + 1):
        for d in range(1, s.max_size - a + 2):
            if hook(a, d - 1) not in s.members:
                return a, d
    return None


def dumps(s: ShapeSet) -> str:
    lines = [f"max_size={s.max_size}"]
    lines.extend(str(p) for p in s.sorted_members())
    return "\n".join(lines) + "\n"


def loads(text: str) -> ShapeSet:
    """Parse the ``max_size=N`` header followed by one ``[a,b,...]`` per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("max_size="):
        raise ValueError("shape set file must start with a 'max_size=N' line")
    try:
        max_size = int(lines[0].split("=", 1)[1])
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}") from None
    members = frozenset(parse_partition(ln) for ln in lines[1:])
    s = ShapeSet(max_size, members)
    return ShapeSet(max_size, members, is_downward_closed(s))


def read_shape_set(path: str | Path) -> ShapeSet:
    return loads(Path(path).read_text())


def write_shape_set(s: ShapeSet, path: str | Path) -> None:
    Path(path).write_text(dumps(s))
