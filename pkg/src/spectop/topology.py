"""Deciders for finite topological spaces.

A :class:`FiniteSpace` is given by its points and its family of closed sets,
stored as bitmasks over the point list. Every space here is finite, which
buys several exact reductions:

* The smallest open set containing a set ``A`` is the union of the kernels
  ``Ker(a)``. Two sets have disjoint open neighbourhoods iff their kernels
  are disjoint, so no search over pairs of opens is ever needed.
* A continuous map ``f`` to the reals has clopen fibres: ``f^-1(r)`` is an
  intersection of finitely many opens ``f^-1(r - e, r + e)`` (hence open) and
  its complement is a union of other fibres. Conversely a clopen partition
  with distinct values is a continuous map. Hence separation of ``(C, p)`` by
  a real function means a clopen ``U`` with ``C <= U`` and ``p`` outside, and
  ``C = f^-1(0), D = f^-1(1)`` is possible iff ``C`` and ``D`` are clopen.
* A countable intersection of opens is a finite one, hence open: a closed set
  is a G-delta set iff it is open.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable

from .errors import InternalInconsistency, InvalidSpace, SizeLimitExceeded, UnknownElement
from .lattice import bits, popcount

SUBSPACE_LIMIT = 12
ANTI_LIMIT = 16
HOMEOMORPHISM_LIMIT = 10


def default_limit() -> int:
    """Subspace-enumeration limit; ``SPECTOP_LIMIT`` overrides the built-in default."""
    value = os.environ.get("SPECTOP_LIMIT")
    return int(value) if value else SUBSPACE_LIMIT


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple[str, ...]
    closed: frozenset[int]
    # closed-set mask -> lattice elements a with V(a) equal to it (X-top spaces only)
    labels: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        full = self.full
        if len(set(self.points)) != len(self.points):
            raise InvalidSpace("duplicate points", self.points)
        if 0 not in self.closed or full not in self.closed:
            raise InvalidSpace("closed family must contain the empty set and the whole space")
        for c in self.closed:
            if c & ~full:
                raise InvalidSpace("closed set outside the ground set", c)
        for c, d in combinations(self.closed, 2):
            if c & d not in self.closed or c | d not in self.closed:
                raise InvalidSpace("closed family not closed under pairwise union/intersection",
                                   (self.names(c), self.names(d)))

    @classmethod
    def _trusted(cls, points, closed) -> "FiniteSpace":
        # skips validation; only for families derived from an already valid space
        obj = object.__new__(cls)
        object.__setattr__(obj, "points", points)
        object.__setattr__(obj, "closed", closed)
        object.__setattr__(obj, "labels", {})
        return obj

    @classmethod
    def from_sets(cls, points: Iterable[str], closed_sets: Iterable[Iterable[str]]) -> "FiniteSpace":
        points = tuple(points)
        index = {p: i for i, p in enumerate(points)}
        masks = set()
        for c in closed_sets:
            m = 0
            for p in c:
                if p not in index:
                    raise UnknownElement(f"unknown point {p!r}", p)
                m |= 1 << index[p]
            masks.add(m)
        return cls(points, frozenset(masks))

    @classmethod
    def discrete(cls, points: Iterable[str]) -> "FiniteSpace":
        points = tuple(points)
        return cls(points, frozenset(range(1 << len(points))))

    @classmethod
    def indiscrete(cls, points: Iterable[str]) -> "FiniteSpace":
        points = tuple(points)
        return cls(points, frozenset({0, (1 << len(points)) - 1}))

    def __len__(self):
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def _index(self):
        return {p: i for i, p in enumerate(self.points)}

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for p in names:
            if p not in self._index:
                raise UnknownElement(f"unknown point {p!r}", p)
            m |= 1 << self._index[p]
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.points[i] for i in bits(mask))

    def closed_sets(self) -> list[tuple[str, ...]]:
        return [self.names(c) for c in sorted(self.closed, key=_set_key)]

    def open_sets(self) -> list[tuple[str, ...]]:
        return [self.names(u) for u in sorted(self.opens, key=_set_key)]

    @cached_property
    def opens(self) -> frozenset[int]:
        return frozenset(self.full & ~c for c in self.closed)

    @cached_property
    def clopens(self) -> frozenset[int]:
        return self.closed & self.opens

    @cached_property
    def point_closure(self) -> tuple[int, ...]:
        return tuple(self.closure(1 << i) for i in range(len(self)))

    @cached_property
    def point_kernel(self) -> tuple[int, ...]:
        """``Ker(x)``: the smallest open set containing ``x``."""
        n = len(self)
        return tuple(sum(1 << j for j in range(n) if self.point_closure[j] >> i & 1)
                     for i in range(n))

    def closure(self, mask: int) -> int:
        r = self.full
        for c in self.closed:
            if c & mask == mask:
                r &= c
        return r

    def interior(self, mask: int) -> int:
        r = 0
        for u in self.opens:
            if u & mask == u:
                r |= u
        return r

    def kernel(self, mask: int) -> int:
        r = 0
        for i in bits(mask):
            r |= self.point_kernel[i]
        return r

    def is_closed(self, mask: int) -> bool:
        return mask in self.closed

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def subspace(self, mask: int) -> "FiniteSpace":
        """Induced topology on the points of ``mask`` (kept in the original order)."""
        keep = list(bits(mask))
        closed = set()
        for c in self.closed:
            closed.add(sum(1 << k for k, i in enumerate(keep) if c >> i & 1))
        return FiniteSpace._trusted(tuple(self.points[i] for i in keep), frozenset(closed))

    def specializes(self, i: int, j: int) -> bool:
        """``x_i ~> x_j``: ``x_j`` lies in the closure of ``x_i``."""
        return bool(self.point_closure[i] >> j & 1)


def _set_key(mask):
    return (popcount(mask), [-(mask >> i & 1) for i in range(mask.bit_length())])


def disjoint_union(*spaces: FiniteSpace, tags: Iterable[str] | None = None) -> FiniteSpace:
    tags = list(tags) if tags is not None else [str(k + 1) for k in range(len(spaces))]
    points = []
    closed = {0}
    shift = 0
    for tag, s in zip(tags, spaces):
        points.extend(f"{p}@{tag}" for p in s.points)
        closed = {f | (c << shift) for f in closed for c in s.closed}
        shift += len(s)
    return FiniteSpace(tuple(points), frozenset(closed))


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class PointClass:
    point: str
    closed: bool
    isolated: bool
    kerneled: bool
    regular_open: bool
    kernel: tuple[str, ...]


def classify_points(S: FiniteSpace) -> list[PointClass]:
    out = []
    for i, p in enumerate(S.points):
        single = 1 << i
        ker = S.point_kernel[i]
        out.append(PointClass(
            point=p,
            closed=S.is_closed(single),
            isolated=S.is_open(single),
            kerneled=ker == single,
            regular_open=S.interior(S.point_closure[i]) == single,
            kernel=S.names(ker),
        ))
    return out


# ---------------------------------------------------------------------------
# regularity


@dataclass(frozen=True)
class SeparationFamily:
    """Separation tasks, the separable ones, and the resulting verdict."""
    verdict: str
    tasks: tuple
    separated: tuple
    witness: Any = None

    @property
    def holds(self) -> bool:
        return len(self.tasks) == len(self.separated)

    @property
    def extreme(self) -> bool:
        return bool(self.tasks) and not self.separated


def regular_tasks(S: FiniteSpace):
    for c in sorted(S.closed, key=_set_key):
        if c == 0 or c == S.full:
            continue
        for p in bits(S.full & ~c):
            yield c, p


def regular_family(S: FiniteSpace) -> SeparationFamily:
    tasks, separated, witness = [], [], None
    for c, p in regular_tasks(S):
        u, v = S.kernel(c), S.point_kernel[p]
        task = (S.names(c), S.points[p])
        tasks.append(task)
        if u & v:
            witness = witness or {"closed": task[0], "point": task[1],
                                  "common": S.names(u & v)}
        else:
            separated.append(task + (S.names(u), S.names(v)))
    fam = SeparationFamily("", tuple(tasks), tuple(separated), witness)
    verdict = "regular" if fam.holds else "extremely_non_regular" if fam.extreme else "neither"
    return SeparationFamily(verdict, fam.tasks, fam.separated, witness)


def completely_regular(S: FiniteSpace) -> Verdict:
    witnesses = []
    for c, p in regular_tasks(S):
        u = next((u for u in sorted(S.clopens, key=_set_key) if u & c == c and not u >> p & 1), None)
        if u is None:
            return Verdict(False, {"closed": S.names(c), "point": S.points[p]})
        witnesses.append((S.names(c), S.points[p], S.names(u)))
    return Verdict(True, tuple(witnesses))


# ---------------------------------------------------------------------------
# normality


def normal_family(S: FiniteSpace) -> SeparationFamily:
    closed = [c for c in sorted(S.closed, key=_set_key) if c]
    tasks, separated, witness = [], [], None
    for c, d in combinations(closed, 2):
        if c & d:
            continue
        task = (S.names(c), S.names(d))
        tasks.append(task)
        u, v = S.kernel(c), S.kernel(d)
        if u & v:
            witness = witness or {"closed_c": task[0], "closed_d": task[1],
                                  "common": S.names(u & v)}
        else:
            separated.append(task + (S.names(u), S.names(v)))
    fam = SeparationFamily("", tuple(tasks), tuple(separated), witness)
    verdict = "normal" if fam.holds else "extremely_non_normal" if fam.extreme else "neither"
    return SeparationFamily(verdict, fam.tasks, fam.separated, witness)


def is_normal(S: FiniteSpace) -> bool:
    closed = [c for c in S.closed if c]
    for c, d in combinations(closed, 2):
        if not c & d and S.kernel(c) & S.kernel(d):
            return False
    return True


def _subspace_masks(S: FiniteSpace, min_size: int = 1):
    for m in range(1, 1 << len(S)):
        if popcount(m) >= min_size:
            yield m


@dataclass(frozen=True)
class RoutedVerdict:
    holds: bool
    witness: Any = None
    routes: tuple[str, ...] = ()

    def __bool__(self):
        return self.holds


def completely_normal(S: FiniteSpace, limit: int | None = None) -> RoutedVerdict:
    """Hereditary normality, by subspace enumeration and by separated pairs.

    The subspace route runs only up to ``limit`` points; the separated-pair
    route always runs and decides.
    """
    limit = default_limit() if limit is None else limit
    n = len(S)
    closure = [S.closure(m) for m in range(1 << n)]
    kernel = [S.kernel(m) for m in range(1 << n)]
    pair_witness = None
    # iterate over disjoint pairs (A, B) as assignments of each point to A, B or neither
    for a in range(1, 1 << n):
        if pair_witness:
            break
        rest = S.full & ~a
        b = rest
        while b:
            if not (a & closure[b]) and not (closure[a] & b) and kernel[a] & kernel[b]:
                pair_witness = {"separated_a": S.names(a), "separated_b": S.names(b),
                                "common": S.names(kernel[a] & kernel[b])}
                break
            b = (b - 1) & rest
    pair_route = pair_witness is None
    if n > limit:
        return RoutedVerdict(pair_route, pair_witness, ("separated_pairs",))
    sub_witness = None
    for m in _subspace_masks(S):
        if not is_normal(S.subspace(m)):
            sub_witness = {"subspace": S.names(m)}
            break
    if (sub_witness is None) != pair_route:
        raise InternalInconsistency("completely normal routes disagree",
                                    (sub_witness, pair_witness))
    return RoutedVerdict(pair_route, pair_witness or sub_witness or {"separated_pairs": "all separable"},
                         ("subspaces", "separated_pairs"))


def g_delta_space(S: FiniteSpace) -> Verdict:
    for c in sorted(S.closed, key=_set_key):
        if not S.is_open(c):
            return Verdict(False, {"closed_not_open": S.names(c)})
    return Verdict(True)


def perfectly_normal(S: FiniteSpace) -> RoutedVerdict:
    witness = None
    closed = sorted(S.closed, key=_set_key)
    for c in closed:
        for d in closed:
            if c & d == 0 and not (S.is_open(c) and S.is_open(d)):
                bad = c if not S.is_open(c) else d
                witness = witness or {"closed_not_open": S.names(bad),
                                      "pair": (S.names(c), S.names(d))}
    clopen_route = witness is None
    vedenissoff = is_normal(S) and g_delta_space(S).holds
    if clopen_route != vedenissoff:
        raise InternalInconsistency("perfectly normal routes disagree", witness)
    return RoutedVerdict(clopen_route, witness, ("clopen_fibres", "vedenissoff"))


# ---------------------------------------------------------------------------
# Hausdorff family


@dataclass(frozen=True)
class HausdorffReport:
    t2: Verdict
    quasi_hausdorff: Verdict
    extremely_non_hausdorff: Verdict
    anti_hausdorff: Verdict


def _t2_pairs(S: FiniteSpace):
    sep, insep = [], []
    for i, j in combinations(range(len(S)), 2):
        u, v = S.point_kernel[i], S.point_kernel[j]
        (insep if u & v else sep).append((i, j))
    return sep, insep


def is_t2(S: FiniteSpace) -> bool:
    return not _t2_pairs(S)[1]


def specialization_total(S: FiniteSpace) -> bool:
    return all(S.specializes(i, j) or S.specializes(j, i)
               for i, j in combinations(range(len(S)), 2))


def t2_and_quasi(S: FiniteSpace, limit: int = ANTI_LIMIT) -> HausdorffReport:
    sep, insep = _t2_pairs(S)
    name = S.points
    if insep:
        i, j = insep[0]
        t2 = Verdict(False, {"pair": (name[i], name[j]),
                             "common": S.names(S.point_kernel[i] & S.point_kernel[j])})
    else:
        t2 = Verdict(True, tuple((name[i], name[j], S.names(S.point_kernel[i]),
                                  S.names(S.point_kernel[j])) for i, j in sep))
    qh_fail = None
    for i, j in insep:
        if not any(S.point_closure[z] >> i & 1 and S.point_closure[z] >> j & 1
                   for z in range(len(S))):
            qh_fail = (name[i], name[j])
            break
    quasi = Verdict(qh_fail is None, qh_fail and {"pair": qh_fail})
    if len(S) < 2:
        enh = Verdict(False, {"size": len(S)})
    elif sep:
        i, j = sep[0]
        enh = Verdict(False, {"separated_pair": (name[i], name[j])})
    else:
        enh = Verdict(True)
    total = specialization_total(S)
    if len(S) <= limit:
        two_point = None
        for m in _subspace_masks(S, 2):
            if is_t2(S.subspace(m)):
                two_point = S.names(m)
                break
    else:
        two_point = next((S.names((1 << i) | (1 << j)) for i, j in sep), None)
    if total != (two_point is None):
        raise InternalInconsistency("anti-Hausdorff routes disagree", two_point)
    anti = Verdict(total, two_point and {"t2_subspace": two_point})
    return HausdorffReport(t2, quasi, enh, anti)


def t2_half(S: FiniteSpace) -> bool:
    """Distinct points have open neighbourhoods with disjoint closures."""
    for i, j in combinations(range(len(S)), 2):
        ok = any(u >> i & 1 and v >> j & 1 and not (S.closure(u) & S.closure(v))
                 for u in S.opens for v in S.opens)
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# connectivity, sobriety, dimension


@dataclass(frozen=True)
class Connectivity:
    connected: Verdict
    hyperconnected: Verdict
    ultraconnected: Verdict


def connectivity(S: FiniteSpace) -> Connectivity:
    proper_clopen = next((u for u in sorted(S.clopens, key=_set_key) if u and u != S.full), None)
    connected = Verdict(len(S) > 0 and proper_clopen is None,
                        proper_clopen and {"clopen": S.names(proper_clopen)})

    def disjoint_pair(family):
        fam = [f for f in sorted(family, key=_set_key) if f]
        return next(((a, b) for a, b in combinations(fam, 2) if not a & b), None)

    o = disjoint_pair(S.opens)
    c = disjoint_pair(S.closed)
    hyper = Verdict(o is None, o and {"disjoint_opens": (S.names(o[0]), S.names(o[1]))})
    ultra = Verdict(c is None, c and {"disjoint_closed": (S.names(c[0]), S.names(c[1]))})
    return Connectivity(connected, hyper, ultra)


def is_t0(S: FiniteSpace) -> Verdict:
    for i, j in combinations(range(len(S)), 2):
        if S.point_closure[i] == S.point_closure[j]:
            return Verdict(False, {"indistinguishable": (S.points[i], S.points[j])})
    return Verdict(True)


@dataclass(frozen=True)
class SoberReport:
    sober: Verdict
    spectral: Verdict
    stone: Verdict


def _irreducible(S: FiniteSpace, c: int) -> bool:
    if not c:
        return False
    proper = [d for d in S.closed if d & c == d and d != c]
    return not any(a | b == c for a in proper for b in proper)


def sober_spectral_stone(S: FiniteSpace) -> SoberReport:
    bad = None
    for c in sorted(S.closed, key=_set_key):
        if _irreducible(S, c):
            generic = [i for i in bits(c) if S.point_closure[i] == c]
            if len(generic) != 1:
                bad = {"irreducible_closed": S.names(c),
                       "generic_points": tuple(S.points[i] for i in generic)}
                break
    sober = Verdict(bad is None, bad)
    t0 = is_t0(S)
    # finite: compact, and all opens are compact and closed under finite intersection,
    # so the definition reduces to sobriety
    if sober.holds != t0.holds:
        raise InternalInconsistency("finite sober must coincide with T0", (bad, t0.witness))
    spectral = Verdict(sober.holds, bad)
    non_clopen_open = next((u for u in sorted(S.opens, key=_set_key) if not S.is_closed(u)), None)
    clopen_base = non_clopen_open is None
    stone = Verdict(t0.holds and clopen_base,
                    t0.witness or (non_clopen_open is not None and
                                   {"open_not_clopen": S.names(non_clopen_open)}) or None)
    return SoberReport(sober, spectral, stone)


def specialization_edges(S: FiniteSpace) -> list[tuple[str, str]]:
    """Strict specialization pairs ``(x, y)`` with ``y`` in the closure of ``x``."""
    return [(S.points[i], S.points[j]) for i in range(len(S)) for j in range(len(S))
            if i != j and S.specializes(i, j) and not S.specializes(j, i)]


def krull_dim(S: FiniteSpace) -> int:
    n = len(S)
    strict = [[j for j in range(n) if j != i and S.specializes(i, j) and not S.specializes(j, i)]
              for i in range(n)]
    memo = {}

    def longest(i):
        if i not in memo:
            memo[i] = max((1 + longest(j) for j in strict[i]), default=0)
        return memo[i]

    return max((longest(i) for i in range(n)), default=0)


# ---------------------------------------------------------------------------
# hereditary negations


def anti_property(S: FiniteSpace, prop, max_size: int, limit: int = ANTI_LIMIT) -> Verdict:
    """True iff no subspace with more than ``max_size`` points satisfies ``prop``."""
    if len(S) > limit:
        raise SizeLimitExceeded(f"{len(S)} points exceed the subspace limit {limit}", len(S))
    for m in _subspace_masks(S, max_size + 1):
        if prop(S.subspace(m)):
            return Verdict(False, {"subspace": S.names(m)})
    return Verdict(True)


def anti_regular(S: FiniteSpace, limit: int = ANTI_LIMIT) -> Verdict:
    return anti_property(S, lambda T: regular_family(T).holds, 1, limit)


def anti_normal(S: FiniteSpace, limit: int = ANTI_LIMIT) -> Verdict:
    return anti_property(S, is_normal, 2, limit)


# ---------------------------------------------------------------------------
# the T ladder

T_LABELS = ("T0", "T1/4", "T1/2", "T3/4", "T1", "T2", "T2½", "T3", "T3½", "T4", "T5", "T6")


@dataclass(frozen=True)
class SeparationReport:
    t0: Verdict
    t_quarter: Verdict
    t_half: Verdict
    t_three_quarter: Verdict
    t1: Verdict
    t2: Verdict
    t2_half: Verdict
    quasi_hausdorff: Verdict
    regular: Verdict
    completely_regular: Verdict
    normal: Verdict
    completely_normal: RoutedVerdict
    perfectly_normal: RoutedVerdict
    t3: Verdict
    t3_half: Verdict
    t4: Verdict
    t5: Verdict
    t6: Verdict
    extremely_non_hausdorff: Verdict
    anti_hausdorff: Verdict
    extremely_non_regular: Verdict
    anti_regular: Verdict | None
    extremely_non_normal: Verdict
    anti_normal: Verdict | None
    connected: Verdict
    hyperconnected: Verdict
    ultraconnected: Verdict
    sober: Verdict
    spectral: Verdict
    stone: Verdict
    g_delta_space: Verdict
    krull_dim: int
    regular_tasks: int = 0
    regular_separated: int = 0
    normal_tasks: int = 0
    normal_separated: int = 0

    def ladder(self) -> tuple[bool, ...]:
        return tuple(getattr(self, f).holds for f in _LADDER_FIELDS)

    @property
    def t_level(self) -> str:
        level = "none"
        for label, ok in zip(T_LABELS, self.ladder()):
            if not ok:
                break
            level = label
        return level


_LADDER_FIELDS = ("t0", "t_quarter", "t_half", "t_three_quarter", "t1", "t2", "t2_half",
                  "t3", "t3_half", "t4", "t5", "t6")


def _cover(S, attr):
    missing = [p.point for p in classify_points(S) if not (p.closed or getattr(p, attr))]
    return Verdict(not missing, missing and {"points": tuple(missing)} or None)


def _and(a: Verdict, b) -> Verdict:
    if not a.holds:
        return Verdict(False, a.witness)
    return Verdict(b.holds, b.witness)


def _maybe(decider, S, limit):
    # None marks a property skipped for size
    try:
        return decider(S, limit)
    except SizeLimitExceeded:
        return None


def separation_report(S: FiniteSpace, limit: int | None = None) -> SeparationReport:
    limit = default_limit() if limit is None else limit
    anti_limit = max(limit, ANTI_LIMIT)
    pts = classify_points(S)
    non_closed = [p.point for p in pts if not p.closed]
    t1 = Verdict(not non_closed, non_closed and {"non_closed_points": tuple(non_closed)} or None)
    reg = regular_family(S)
    norm = normal_family(S)
    regular = Verdict(reg.holds, reg.witness if not reg.holds else reg.separated or "vacuous")
    normal = Verdict(norm.holds, norm.witness if not norm.holds else norm.separated or "vacuous")
    cr = completely_regular(S)
    cn = completely_normal(S, limit)
    pn = perfectly_normal(S)
    haus = t2_and_quasi(S, anti_limit)
    conn = connectivity(S)
    sob = sober_spectral_stone(S)
    return SeparationReport(
        t0=is_t0(S),
        t_quarter=_cover(S, "kerneled"),
        t_half=_cover(S, "isolated"),
        t_three_quarter=_cover(S, "regular_open"),
        t1=t1,
        t2=haus.t2,
        t2_half=Verdict(t2_half(S)),
        quasi_hausdorff=haus.quasi_hausdorff,
        regular=regular,
        completely_regular=cr,
        normal=normal,
        completely_normal=cn,
        perfectly_normal=pn,
        t3=_and(t1, regular),
        t3_half=_and(t1, cr),
        t4=_and(t1, normal),
        t5=_and(t1, cn),
        t6=_and(t1, pn),
        extremely_non_hausdorff=haus.extremely_non_hausdorff,
        anti_hausdorff=haus.anti_hausdorff,
        extremely_non_regular=Verdict(reg.extreme, reg.tasks and {"tasks": len(reg.tasks),
                                                                  "separated": len(reg.separated)}),
        anti_regular=_maybe(anti_regular, S, anti_limit),
        extremely_non_normal=Verdict(norm.extreme, {"tasks": len(norm.tasks),
                                                    "separated": len(norm.separated)}),
        anti_normal=_maybe(anti_normal, S, anti_limit),
        connected=conn.connected,
        hyperconnected=conn.hyperconnected,
        ultraconnected=conn.ultraconnected,
        sober=sob.sober,
        spectral=sob.spectral,
        stone=sob.stone,
        g_delta_space=g_delta_space(S),
        krull_dim=krull_dim(S),
        regular_tasks=len(reg.tasks),
        regular_separated=len(reg.separated),
        normal_tasks=len(norm.tasks),
        normal_separated=len(norm.separated),
    )


def t_level(S: FiniteSpace) -> str:
    return separation_report(S).t_level


# ---------------------------------------------------------------------------
# homeomorphism


def homeomorphic(S1: FiniteSpace, S2: FiniteSpace,
                 limit: int = HOMEOMORPHISM_LIMIT) -> Verdict:
    """Search for a bijection carrying closed sets onto closed sets.

    The witness on success maps points of ``S1`` to points of ``S2``.
    """
    n = len(S1)
    if max(n, len(S2)) > limit:
        raise SizeLimitExceeded(f"homeomorphism search limited to {limit} points", max(n, len(S2)))
    if n != len(S2) or len(S1.closed) != len(S2.closed):
        return Verdict(False, {"points": (n, len(S2)), "closed_sets": (len(S1.closed), len(S2.closed))})

    def signature(S, i):
        return (popcount(S.point_closure[i]), popcount(S.point_kernel[i]))

    sig1 = [signature(S1, i) for i in range(n)]
    sig2 = [signature(S2, j) for j in range(n)]
    if sorted(sig1) != sorted(sig2):
        return Verdict(False, {"degree_sequences": (sorted(sig1), sorted(sig2))})
    order = sorted(range(n), key=lambda i: sig1[i])
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or sig2[j] != sig1[i]:
                continue
            if any(S1.specializes(i, a) != S2.specializes(j, image[a]) or
                   S1.specializes(a, i) != S2.specializes(image[a], j)
                   for a in order[:k]):
                continue
            image[i], used[j] = j, True
            if extend(k + 1):
                return True
            image[i], used[j] = -1, False
        return False

    if not extend(0):
        return Verdict(False, {"bijection": None})
    mapped = frozenset(sum(1 << image[i] for i in bits(c)) for c in S1.closed)
    if mapped != S2.closed:
        raise InternalInconsistency("specialization isomorphism is not a homeomorphism", image)
    return Verdict(True, {S1.points[i]: S2.points[image[i]] for i in range(n)})
