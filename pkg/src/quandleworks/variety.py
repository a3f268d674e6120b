"""Smallest-congruence quotients of finite quandles.

quotient_by_identity computes the quotient by the least congruence whose
quotient satisfies a chosen identity: the medial law, or "every translation
has order dividing n".  Each merge the closure performs is forced in every
congruence with that property, so the fixpoint is the least such congruence;
brute_force_smallest_congruence certifies this on small tables by
enumerating all set partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .quandle import FiniteQuandle

MEDIAL_TAG = "medial"
N_QUANDLE_TAG = "n_quandle"


class TooLarge(ValueError):
    """The table is too big for the partition-enumeration oracle."""


@dataclass(frozen=True)
class IdentitySpec:
    """Identity to force on the quotient.

    tag 'medial' forces (w*x)*(y*z) = (w*y)*(x*z); tag 'n_quandle' forces
    every translation iterated `parameter` times to be the identity (the
    parameter may be negative, iterating inverse translations).
    """

    tag: str
    parameter: int = 0

    def __post_init__(self) -> None:
        if self.tag not in (MEDIAL_TAG, N_QUANDLE_TAG):
            raise ValueError(f"unknown identity tag {self.tag!r}")


MEDIAL = IdentitySpec(MEDIAL_TAG)


def n_quandle(power: int) -> IdentitySpec:
    return IdentitySpec(N_QUANDLE_TAG, power)


class Congruence:
    """Union-find partition of a quandle's elements (path halving, union by rank)."""

    def __init__(self, quandle: FiniteQuandle) -> None:
        self.quandle = quandle
        self._parent = list(range(quandle.n))
        self._rank = [0] * quandle.n

    def find(self, a: int) -> int:
        parent = self._parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]  # path halving
            a = parent[a]
        return a

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        return True

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for x in range(self.quandle.n):
            groups.setdefault(self.find(x), []).append(x)
        return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))

    def projection(self) -> list[int]:
        """Element -> class index, classes numbered by smallest member."""
        index: dict[int, int] = {}
        for ci, block in enumerate(self.blocks()):
            for x in block:
                index[x] = ci
        return [index[x] for x in range(self.quandle.n)]

    def is_compatible(self) -> bool:
        """Both operation arguments and the inverse translations respect the classes."""
        q = self.quandle
        t = q.table
        inv = q.inverse_translations()
        for a in range(q.n):
            for b in range(a + 1, q.n):
                if not self.same(a, b):
                    continue
                for c in range(q.n):
                    if not (self.same(t[a][c], t[b][c])
                            and self.same(t[c][a], t[c][b])
                            and self.same(inv[a][c], inv[b][c])):
                        return False
        return True


def _close_compatibility(cong: Congruence, q: FiniteQuandle, inv) -> bool:
    """Propagate a=b into the operation and inverse-translation images."""
    t = q.table
    n = q.n
    changed_any = False
    dirty = True
    while dirty:
        dirty = False
        for a in range(n):
            for b in range(a + 1, n):
                if cong.find(a) != cong.find(b):
                    continue
                for c in range(n):
                    for u, v in ((t[a][c], t[b][c]),
                                 (t[c][a], t[c][b]),
                                 (inv[a][c], inv[b][c])):
                        if cong.union(u, v):
                            dirty = True
                            changed_any = True
    return changed_any


def _merge_identity_violations(cong: Congruence, q: FiniteQuandle, inv,
                               spec: IdentitySpec) -> bool:
    """Union the two sides of every violated identity instance (one sweep)."""
    t = q.table
    reps = [block[0] for block in cong.blocks()]
    changed = False
    if spec.tag == MEDIAL_TAG:
        for w, x, y, z in product(reps, repeat=4):
            u = t[t[w][x]][t[y][z]]
            v = t[t[w][y]][t[x][z]]
            if cong.union(u, v):
                changed = True
    else:
        table = t if spec.parameter >= 0 else inv
        steps = abs(spec.parameter)
        for y in reps:
            for x in reps:
                cur = x
                for _ in range(steps):
                    cur = table[cur][y]
                if cong.union(cur, x):
                    changed = True
    return changed


def quotient_by_identity(q: FiniteQuandle,
                         spec: IdentitySpec) -> tuple[FiniteQuandle, list[int]]:
    """Quotient by the least congruence whose quotient satisfies `spec`.

    Returns the quotient quandle and the projection list (element -> class,
    classes numbered by smallest member).  The loop alternates compatibility
    closure with identity-violation merges until neither changes anything;
    at that point evaluating the identity on elements equals evaluating it
    in the quotient, so the quotient satisfies the identity, and since every
    merge was forced the congruence is the least one.
    """
    cong = Congruence(q)
    inv = q.inverse_translations()
    while True:
        changed = _close_compatibility(cong, q, inv)
        changed = _merge_identity_violations(cong, q, inv, spec) or changed
        if not changed:
            break
    assert cong.is_compatible()
    proj = cong.projection()
    reps = [block[0] for block in cong.blocks()]
    rows = [[proj[q.table[ra][rb]] for rb in reps] for ra in reps]
    return FiniteQuandle(rows), proj


def _set_partitions(n: int):
    """All partitions of range(n), blocks ordered by smallest member."""
    blocks: list[list[int]] = []

    def rec(k: int):
        if k == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(k)
            yield from rec(k + 1)
            b.pop()
        blocks.append([k])
        yield from rec(k + 1)
        blocks.pop()

    yield from rec(0)


def _class_map(partition) -> dict[int, int]:
    out = {}
    for ci, block in enumerate(partition):
        for x in block:
            out[x] = ci
    return out


def _is_congruence(q: FiniteQuandle, inv, partition) -> bool:
    cls = _class_map(partition)
    t = q.table
    for block in partition:
        for a in block:
            for b in block:
                if a >= b:
                    continue
                for c in range(q.n):
                    if (cls[t[a][c]] != cls[t[b][c]]
                            or cls[t[c][a]] != cls[t[c][b]]
                            or cls[inv[a][c]] != cls[inv[b][c]]):
                        return False
    return True


def _quotient_satisfies(q: FiniteQuandle, partition, spec: IdentitySpec) -> bool:
    cls = _class_map(partition)
    reps = [block[0] for block in partition]
    rows = [[cls[q.table[ra][rb]] for rb in reps] for ra in reps]
    quot = FiniteQuandle(rows)
    if spec.tag == MEDIAL_TAG:
        return quot.is_medial()[0]
    return quot.is_n_quandle(spec.parameter)


def _meet_partitions(partitions, n: int):
    maps = [_class_map(p) for p in partitions]
    groups: dict[tuple[int, ...], list[int]] = {}
    for x in range(n):
        groups.setdefault(tuple(m[x] for m in maps), []).append(x)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def brute_force_smallest_congruence(q: FiniteQuandle, spec: IdentitySpec):
    """Oracle: enumerate every set partition, keep the congruences whose
    quotient satisfies the identity, and return the finest one.

    Congruences with the property are closed under intersection, so the
    finest exists; the meet of all valid partitions must itself appear in
    the valid list, which is asserted.
    """
    if q.n > 6:
        raise TooLarge(f"partition enumeration capped at order 6, got {q.n}")
    inv = q.inverse_translations()
    valid = [p for p in _set_partitions(q.n)
             if _is_congruence(q, inv, p) and _quotient_satisfies(q, p, spec)]
    finest = _meet_partitions(valid, q.n)
    assert finest in valid
    return finest
