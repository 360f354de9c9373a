"""Finite posets and bounded lattices.

Elements are plain strings. Internally an order on ``n`` elements is stored as
``n`` bitmasks: bit ``j`` of ``up[i]`` is set iff ``elements[i] <= elements[j]``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    CycleError,
    DuplicateElement,
    NotALattice,
    NotBounded,
    SizeLimitExceeded,
    UnknownElement,
)

MAX_CARRIER = 64

_NAME = re.compile(r"^[!-~]+$")


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class PartialOrder:
    elements: tuple[str, ...]
    up: tuple[int, ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def down(self) -> tuple[int, ...]:
        n = len(self.elements)
        return tuple(sum(1 << i for i in range(n) if self.up[i] >> j & 1) for j in range(n))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self._index

    def index(self, a: str) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise UnknownElement(f"unknown element {a!r}", a) from None

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for a in names:
            m |= 1 << self.index(a)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def sort(self, names: Iterable[str]) -> tuple[str, ...]:
        """Declaration order; names outside the carrier go last, lexicographically."""
        names = list(names)
        inside = sorted((a for a in names if a in self._index), key=self._index.__getitem__)
        return tuple(inside) + tuple(sorted(a for a in names if a not in self._index))

    def leq(self, a: str, b: str) -> bool:
        return bool(self.up[self.index(a)] >> self.index(b) & 1)

    def relation(self) -> tuple[tuple[str, str], ...]:
        """All pairs ``(a, b)`` with ``a <= b``, reflexive pairs included."""
        return tuple((self.elements[i], self.elements[j])
                     for i in range(len(self)) for j in bits(self.up[i]))

    def covers(self) -> tuple[tuple[str, str], ...]:
        """Hasse diagram edges ``(a, b)`` with ``b`` covering ``a``."""
        out = []
        for i in range(len(self)):
            strict = self.up[i] & ~(1 << i)
            for j in bits(strict):
                between = strict & self.down[j] & ~(1 << j)
                if not between:
                    out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    def maximal(self, mask: int) -> int:
        return sum(1 << i for i in bits(mask) if not (self.up[i] & mask & ~(1 << i)))

    def minimal(self, mask: int) -> int:
        return sum(1 << i for i in bits(mask) if not (self.down[i] & mask & ~(1 << i)))

    def reversed(self) -> "PartialOrder":
        return PartialOrder(self.elements, self.down)


def _check_names(elements):
    seen = set()
    for e in elements:
        if not isinstance(e, str) or not _NAME.match(e):
            raise ValueError(f"invalid element name {e!r}")
        if e in seen:
            raise DuplicateElement(f"duplicate element {e!r}", e)
        seen.add(e)


def build_poset(elements: Iterable[str], pairs: Iterable[tuple[str, str]] = (),
                limit: int = MAX_CARRIER) -> PartialOrder:
    """Reflexive-transitive closure of ``pairs`` over ``elements``."""
    elements = tuple(elements)
    _check_names(elements)
    n = len(elements)
    if n > limit:
        raise SizeLimitExceeded(f"carrier has {n} elements, limit is {limit}", n)
    index = {e: i for i, e in enumerate(elements)}
    succ = [set() for _ in range(n)]
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        for e in (a, b):
            if e not in index:
                raise UnknownElement(f"unknown element {e!r} in pair {(a, b)!r}", e)
        succ[index[a]].add(index[b])
        up[index[a]] |= 1 << index[b]
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    for i in range(n):
        for j in bits(up[i]):
            if j != i and up[j] >> i & 1:
                cycle = _path(succ, i, j) + _path(succ, j, i)[1:]
                a, b = elements[i], elements[j]
                raise CycleError(f"{a} <= {b} and {b} <= {a}", (a, b),
                                 [elements[k] for k in cycle])
    return PartialOrder(elements, tuple(up))


def _path(succ, src, dst):
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for v in sorted(succ[u]):
            if v not in prev:
                prev[v] = u
                queue.append(v)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class BoundedLattice:
    order: PartialOrder
    bottom: str
    top: str
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]

    @property
    def elements(self) -> tuple[str, ...]:
        return self.order.elements

    def __len__(self):
        return len(self.order)

    def leq(self, a: str, b: str) -> bool:
        return self.order.leq(a, b)

    def meet(self, a: str, b: str) -> str:
        o = self.order
        return o.elements[self.meet_table[o.index(a)][o.index(b)]]

    def join(self, a: str, b: str) -> str:
        o = self.order
        return o.elements[self.join_table[o.index(a)][o.index(b)]]

    def meet_mask(self, mask: int) -> int:
        """Index of the meet of the elements in ``mask`` (top for the empty mask)."""
        r = self.order.index(self.top)
        for i in bits(mask):
            r = self.meet_table[r][i]
        return r

    def join_mask(self, mask: int) -> int:
        r = self.order.index(self.bottom)
        for i in bits(mask):
            r = self.join_table[r][i]
        return r


def _bound(o: PartialOrder, cone: tuple[int, ...], i: int, j: int, wanted) -> int:
    common = cone[i] & cone[j]
    # the wanted bound lies in ``common`` and is comparable to all of it
    for k in bits(common):
        if common & ~wanted(k) == 0:
            return k
    raise NotALattice(f"{o.elements[i]} and {o.elements[j]} have no unique bound",
                      (o.elements[i], o.elements[j]))


def lattice_from_poset(order: PartialOrder, bottom: str, top: str) -> BoundedLattice:
    n = len(order)
    b, t = order.index(bottom), order.index(top)
    full = (1 << n) - 1
    if order.up[b] != full:
        raise NotBounded(f"{bottom} is not the minimum", bottom)
    if order.down[t] != full:
        raise NotBounded(f"{top} is not the maximum", top)
    meet = tuple(tuple(_bound(order, order.down, i, j, lambda k: order.down[k])
                       for j in range(n)) for i in range(n))
    join = tuple(tuple(_bound(order, order.up, i, j, lambda k: order.up[k])
                       for j in range(n)) for i in range(n))
    return BoundedLattice(order, bottom, top, meet, join)


def meet_set(L: BoundedLattice, A: Iterable[str]) -> str:
    return L.elements[L.meet_mask(L.order.mask(A))]


def join_set(L: BoundedLattice, A: Iterable[str]) -> str:
    return L.elements[L.join_mask(L.order.mask(A))]


def dual(L: BoundedLattice) -> BoundedLattice:
    return BoundedLattice(L.order.reversed(), L.top, L.bottom, L.join_table, L.meet_table)


def lattice(elements: Iterable[str], pairs: Iterable[tuple[str, str]],
            bottom: str, top: str) -> BoundedLattice:
    """Shorthand for ``lattice_from_poset(build_poset(...), bottom, top)``."""
    return lattice_from_poset(build_poset(elements, pairs), bottom, top)
