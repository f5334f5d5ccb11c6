"""Right ideals of a finite ring: principal ideals, generated ideals, the
full lattice by join closure, and principality tests.

Left ideals are not a separate code path: run the same functions on
core.opposite_ring(R).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteRing
from .errors import CapacityExceeded

DEFAULT_IDEAL_CAP = 1 << 16


@dataclass(frozen=True)
class RightIdealSet:
    """A sorted, duplicate-free member tuple; equality is set equality."""

    ring: FiniteRing
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.ring.order

    def __contains__(self, a: int) -> bool:
        i = np.searchsorted(self.members, a)
        return i < len(self.members) and self.members[i] == a

    def member_labels(self) -> tuple[str, ...]:
        return tuple(self.ring.labels[a] for a in self.members)

    def __repr__(self):
        return f"RightIdealSet(size={self.size}, members={self.member_labels()})"


def _as_ideal(R, arr) -> RightIdealSet:
    return RightIdealSet(R, tuple(int(a) for a in np.sort(np.asarray(arr, dtype=np.int64))))


def validate_right_ideal(R: FiniteRing, ideal: RightIdealSet) -> bool:
    """Closure invariants: contains zero, closed under + and right *."""
    m = np.array(ideal.members, dtype=np.int64)
    if len(np.unique(m)) != len(m) or R.zero not in ideal:
        return False
    inside = np.zeros(R.order, dtype=bool)
    inside[m] = True
    return bool(inside[R.add_table[np.ix_(m, m)]].all()
                and inside[R.mul_table[m, :]].all())


def principal_right_ideal(R: FiniteRing, a: int) -> RightIdealSet:
    """aR, the right multiples of a (additively closed by distributivity)."""
    return _as_ideal(R, np.unique(R.mul_table[a]))


def _additive_closure(R: FiniteRing, members: np.ndarray) -> np.ndarray:
    """Worklist saturation: add pairwise sums until a fixed point."""
    cur = np.unique(members)
    while True:
        nxt = np.unique(R.add_table[np.ix_(cur, cur)])
        if nxt.size == cur.size:
            return cur
        cur = nxt


def right_ideal_generated(R: FiniteRing, gens) -> RightIdealSet:
    """Smallest right ideal containing gens: additive closure of the union
    of the generators' principal ideals."""
    gens = list(gens)
    if not gens:
        raise ValueError("gens must be non-empty")
    union = np.unique(R.mul_table[gens, :])
    return _as_ideal(R, _additive_closure(R, union))


def ideal_sum(R: FiniteRing, i1: RightIdealSet, i2: RightIdealSet) -> RightIdealSet:
    """Join of two right ideals; elementwise sums suffice since both are
    additive subgroups."""
    m1 = np.array(i1.members, dtype=np.int64)
    m2 = np.array(i2.members, dtype=np.int64)
    return _as_ideal(R, np.unique(R.add_table[np.ix_(m1, m2)]))


def all_right_ideals(R: FiniteRing, cap: int = DEFAULT_IDEAL_CAP) -> list[RightIdealSet]:
    """Every right ideal, as the join closure of the principal ideals.

    Any right ideal of a finite ring is a finite join of principal ideals,
    so breadth-first joins starting from all aR reach everything. Sorted by
    (size, members) for determinism.
    """
    seen: dict[tuple[int, ...], RightIdealSet] = {}
    queue: list[RightIdealSet] = []

    def admit(ideal):
        if ideal.members not in seen:
            if len(seen) >= cap:
                raise CapacityExceeded(f"more than {cap} right ideals")
            seen[ideal.members] = ideal
            queue.append(ideal)

    for a in R.elements():
        admit(principal_right_ideal(R, a))
    while queue:
        ideal = queue.pop()
        for other in list(seen.values()):
            admit(ideal_sum(R, ideal, other))
    return sorted(seen.values(), key=lambda i: (i.size, i.members))


def is_principal(R: FiniteRing, ideal: RightIdealSet):
    """(True, generator) with the generator smallest by label order, else
    (False, None)."""
    members = sorted(ideal.members, key=lambda a: R.label_rank[a])
    target = np.array(ideal.members, dtype=np.int64)
    for g in members:
        gen = np.unique(R.mul_table[g])
        if gen.size == target.size and np.array_equal(gen, target):
            return True, int(g)
    return False, None


def non_principal_right_ideals(R: FiniteRing, cap: int = DEFAULT_IDEAL_CAP) -> list[RightIdealSet]:
    return [ideal for ideal in all_right_ideals(R, cap=cap)
            if not is_principal(R, ideal)[0]]
