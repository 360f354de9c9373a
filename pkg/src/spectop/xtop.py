"""Zariski-like topologies induced by a bounded lattice on a subset ``X``.

For ``a`` in the lattice, ``V(a)`` is the set of points of ``X`` above ``a``;
these sets are always closed under arbitrary intersection, and ``L`` is
``X``-top when they are also closed under finite unions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import (
    EmptySubset,
    InternalInconsistency,
    InvalidContext,
    NotSubsetOfX,
    NotXTop,
)
from .lattice import BoundedLattice, bits
from .topology import FiniteSpace, Verdict

# above this many candidates the subset enumeration is replaced by the
# single-meet argument (which is exact on finite carriers)
ENUMERATION_LIMIT = 16


@dataclass(frozen=True)
class XTopContext:
    lattice: BoundedLattice
    x_set: tuple[str, ...]

    def __post_init__(self):
        order = self.lattice.order
        if not self.x_set:
            raise InvalidContext("X must be nonempty")
        mask = order.mask(self.x_set)
        if order.mask([self.lattice.top]) & mask:
            raise InvalidContext("X must not contain the top element", self.lattice.top)
        object.__setattr__(self, "x_set", order.names(mask))

    @classmethod
    def of(cls, lattice: BoundedLattice, x_set: Iterable[str]) -> "XTopContext":
        return cls(lattice, tuple(x_set))

    @cached_property
    def x_mask(self) -> int:
        return self.lattice.order.mask(self.x_set)

    def variety_mask(self, i: int) -> int:
        return self.lattice.order.up[i] & self.x_mask

    def radical_index(self, i: int) -> int:
        return self.lattice.meet_mask(self.variety_mask(i))

    @cached_property
    def cx_mask(self) -> int:
        # top is fixed by the empty-meet convention but is never listed in C^X
        n = len(self.lattice)
        top = self.lattice.order.index(self.lattice.top)
        return sum(1 << i for i in range(n) if i != top and self.radical_index(i) == i)

    @cached_property
    def closed_family(self) -> dict[int, tuple[str, ...]]:
        """Lattice-carrier bitmask of each closed set -> elements whose variety it is."""
        out: dict[int, list[str]] = {}
        for i, a in enumerate(self.lattice.elements):
            out.setdefault(self.variety_mask(i), []).append(a)
        return {m: tuple(v) for m, v in out.items()}


def _names(ctx, mask):
    return frozenset(ctx.lattice.order.names(mask))


def variety(ctx: XTopContext, a: str) -> frozenset[str]:
    return _names(ctx, ctx.variety_mask(ctx.lattice.order.index(a)))


def complement_variety(ctx: XTopContext, a: str) -> frozenset[str]:
    """``D(a)``, the open complement of ``V(a)`` in ``X``."""
    return frozenset(ctx.x_set) - variety(ctx, a)


def under_set(ctx: XTopContext, a: str) -> frozenset[str]:
    return _names(ctx, ctx.lattice.order.down[ctx.lattice.order.index(a)] & ctx.x_mask)


def radical(ctx: XTopContext, a: str) -> str:
    return ctx.lattice.elements[ctx.radical_index(ctx.lattice.order.index(a))]


def cx_set(ctx: XTopContext) -> frozenset[str]:
    return _names(ctx, ctx.cx_mask)


def _si_mask(L: BoundedLattice, q: int, candidates: int, complete: bool):
    """A failing subset of ``candidates`` for strong irreducibility of ``q``, or None."""
    down_q = L.order.down[q]
    # members below q can never belong to a failing subset
    outside = candidates & ~down_q
    if not outside:
        return None
    if complete or bin(outside).count("1") > ENUMERATION_LIMIT:
        return outside if down_q >> L.meet_mask(outside) & 1 else None
    idx = list(bits(outside))
    for size in range(1, len(idx) + 1):
        for combo in combinations(idx, size):
            A = sum(1 << i for i in combo)
            if down_q >> L.meet_mask(A) & 1:
                return A
    return None


def is_strongly_irreducible(ctx: XTopContext, q: str, B: Iterable[str],
                            complete: bool = False) -> Verdict:
    """Whether every (finite) subset of ``B`` meeting below ``q`` has a member below ``q``.

    Subsets are nonempty. Both flags are evaluated and must agree on a finite
    carrier; the requested one is returned with a smallest failing subset as
    witness.
    """
    L = ctx.lattice
    qi = L.order.index(q)
    cand = L.order.mask(B)
    finite = _si_mask(L, qi, cand, complete=False)
    full = _si_mask(L, qi, cand, complete=True)
    if (finite is None) != (full is None):
        raise InternalInconsistency("finite and complete strong irreducibility disagree", q)
    fail = finite if not complete else full
    if fail is None:
        return Verdict(True)
    return Verdict(False, {"subset": L.order.names(fail),
                           "meet": L.elements[L.meet_mask(fail)], "q": q})


def is_xtop(ctx: XTopContext) -> Verdict:
    """Decide X-topness by strong irreducibility and by direct union closure."""
    L = ctx.lattice
    cx = L.order.names(ctx.cx_mask)
    si_fail = None
    for x in ctx.x_set:
        v = is_strongly_irreducible(ctx, x, cx)
        if not v.holds:
            si_fail = v.witness
            break
    family = set(ctx.closed_family)
    union_fail = None
    n = len(L)
    for i in range(n):
        for j in range(i + 1, n):
            if ctx.variety_mask(i) | ctx.variety_mask(j) not in family:
                union_fail = (L.elements[i], L.elements[j])
                break
        if union_fail:
            break
    if (si_fail is None) != (union_fail is None):
        raise InternalInconsistency("X-top routes disagree", (si_fail, union_fail))
    if si_fail is None:
        return Verdict(True)
    return Verdict(False, {"not_strongly_irreducible": si_fail["q"],
                           "failing_subset": si_fail["subset"],
                           "union_not_closed": union_fail})


def generate_space(ctx: XTopContext) -> FiniteSpace:
    check = is_xtop(ctx)
    if not check.holds:
        raise NotXTop("V_X(L) is not closed under finite unions", check.witness)
    order = ctx.lattice.order
    xs = list(bits(ctx.x_mask))

    def to_points(mask):
        return sum(1 << k for k, i in enumerate(xs) if mask >> i & 1)

    closed = {to_points(m): w for m, w in ctx.closed_family.items()}
    S = FiniteSpace(order.names(ctx.x_mask), frozenset(closed))
    S.labels.update(closed)
    # the specialization order of a generated space is the lattice order on X
    for k, i in enumerate(xs):
        for l, j in enumerate(xs):
            if S.specializes(k, l) != bool(order.up[i] >> j & 1):
                raise InternalInconsistency("specialization order differs from <= on X",
                                            (order.elements[i], order.elements[j]))
    return S


def subspace(ctx: XTopContext, Y: Iterable[str]) -> XTopContext:
    Y = tuple(Y)
    if not Y:
        raise EmptySubset("Y must be nonempty")
    extra = set(Y) - set(ctx.x_set)
    if extra:
        raise NotSubsetOfX(f"{sorted(extra)} not in X", tuple(sorted(extra)))
    sub = XTopContext(ctx.lattice, Y)
    if is_xtop(ctx).holds:
        parent = generate_space(ctx)
        own = generate_space(sub)
        induced = parent.subspace(parent.mask(own.points))
        if induced.closed != own.closed:
            raise InternalInconsistency("generated topology on Y is not the subspace topology", Y)
    return sub


def strongly_disjoint(ctx: XTopContext, A: Iterable[str], B: Iterable[str]) -> Verdict:
    A, B = tuple(A), tuple(B)
    if not A or not B:
        raise EmptySubset("A and B must be nonempty")
    for part in (A, B):
        extra = set(part) - set(ctx.x_set)
        if extra:
            raise NotSubsetOfX(f"{sorted(extra)} not in X", tuple(sorted(extra)))
    L = ctx.lattice
    va = ctx.variety_mask(L.meet_mask(L.order.mask(A)))
    vb = ctx.variety_mask(L.meet_mask(L.order.mask(B)))
    common = L.order.names(va & vb)
    return Verdict(not common, {"intersection": common})
