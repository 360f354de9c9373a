"""Order-theoretic structure of ``(X, <=)`` and the theorem cross-checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any

from .errors import SizeLimitExceeded
from .lattice import bits, popcount
from .topology import FiniteSpace, Verdict, separation_report
from .xtop import XTopContext, generate_space, is_strongly_irreducible, strongly_disjoint

RETRACTION_CANDIDATES = 10**6


@dataclass(frozen=True)
class MaxMinProfile:
    max_x: tuple[str, ...]
    min_x: tuple[str, ...]
    max_of: dict[str, tuple[str, ...]]
    min_of: dict[str, tuple[str, ...]]


def max_min_profile(ctx: XTopContext) -> MaxMinProfile:
    o = ctx.lattice.order
    X = ctx.x_mask
    mx, mn = o.maximal(X), o.minimal(X)
    return MaxMinProfile(
        max_x=o.names(mx),
        min_x=o.names(mn),
        max_of={x: o.names(o.up[o.index(x)] & mx) for x in ctx.x_set},
        min_of={x: o.names(o.down[o.index(x)] & mn) for x in ctx.x_set},
    )


@dataclass(frozen=True)
class StructureFlags:
    atomic: Verdict
    coatomic: Verdict
    local: Verdict
    colocal: Verdict


def structure_flags(ctx: XTopContext) -> StructureFlags:
    p = max_min_profile(ctx)
    no_min = [x for x in ctx.x_set if not p.min_of[x]]
    no_max = [x for x in ctx.x_set if not p.max_of[x]]
    assert not no_min and not no_max, "a finite X is atomic and coatomic"
    atomic = Verdict(not no_min, no_min or None)
    coatomic = Verdict(not no_max, no_max or None)
    local = Verdict(coatomic.holds and len(p.max_x) == 1, {"max": p.max_x})
    colocal = Verdict(atomic.holds and len(p.min_x) == 1, {"min": p.min_x})
    return StructureFlags(atomic, coatomic, local, colocal)


@dataclass(frozen=True)
class PmProperties:
    pm_property: Verdict
    m_property: Verdict
    jacobson: Verdict
    dual_jacobson: Verdict


def pm_properties(ctx: XTopContext) -> PmProperties:
    p = max_min_profile(ctx)
    L = ctx.lattice

    def unique(fibres, key):
        bad = next((x for x in ctx.x_set if len(fibres[x]) != 1), None)
        return Verdict(bad is None, bad and {"point": bad, key: fibres[bad]})

    jac = next((x for x in ctx.x_set
                if L.elements[L.meet_mask(L.order.mask(p.max_of[x]))] != x), None)
    djac = next((x for x in ctx.x_set
                 if L.elements[L.join_mask(L.order.mask(p.min_of[x]))] != x), None)
    return PmProperties(
        pm_property=unique(p.max_of, "max"),
        m_property=unique(p.min_of, "min"),
        jacobson=Verdict(jac is None, jac and {"point": jac, "max": p.max_of[jac]}),
        dual_jacobson=Verdict(djac is None, djac and {"point": djac, "min": p.min_of[djac]}),
    )


@dataclass(frozen=True)
class Retraction:
    map: dict[str, str]
    method: str


@dataclass(frozen=True)
class RetractionResult:
    retraction: Retraction | None
    obstruction: Any = None

    @property
    def exists(self) -> bool:
        return self.retraction is not None


def _continuous(S: FiniteSpace, image: list[int], target: FiniteSpace, target_idx: list[int]) -> bool:
    # image[i] = index (in S) of f(x_i); target_idx lists the Max points in S
    pos = {s: k for k, s in enumerate(target_idx)}
    for c in target.closed:
        pre = sum(1 << i for i in range(len(S)) if c >> pos[image[i]] & 1)
        if pre not in S.closed:
            return False
    return True


def find_retraction(ctx: XTopContext) -> RetractionResult:
    """A continuous map ``X -> Max(X)`` fixing ``Max(X)``, or an obstruction.

    The map sending each point to its unique maximal element is tried first;
    if that is unavailable or discontinuous, every Max-fixing map is checked.
    """
    S = generate_space(ctx)
    prof = max_min_profile(ctx)
    max_idx = [S.points.index(m) for m in prof.max_x]
    max_mask = sum(1 << i for i in max_idx)
    target = S.subspace(max_mask)
    if all(len(prof.max_of[x]) == 1 for x in S.points):
        image = [S.points.index(prof.max_of[x][0]) for x in S.points]
        if _continuous(S, image, target, max_idx):
            return RetractionResult(Retraction({x: S.points[image[i]] for i, x in enumerate(S.points)},
                                               "pm-construction"))
    free = [i for i in range(len(S)) if not max_mask >> i & 1]
    if len(max_idx) ** len(free) > RETRACTION_CANDIDATES:
        raise SizeLimitExceeded("too many candidate retractions", len(max_idx) ** len(free))
    for choice in product(max_idx, repeat=len(free)):
        image = list(range(len(S)))
        for i, j in zip(free, choice):
            image[i] = j
        if _continuous(S, image, target, max_idx):
            return RetractionResult(Retraction({x: S.points[image[i]] for i, x in enumerate(S.points)},
                                               "exhaustive"))
    shared = next((x for x in S.points if len(prof.max_of[x]) > 1), None)
    obstruction = {"candidates_checked": len(max_idx) ** len(free)}
    if shared is not None:
        # the closure of `shared` holds two fixed points, yet must map to one point
        obstruction.update(point=shared, maxima=prof.max_of[shared])
    return RetractionResult(None, obstruction)


@dataclass(frozen=True)
class TreeDecomposition:
    kind: str
    components: tuple[tuple[tuple[str, ...], str | None], ...]
    strongly_disjoint: bool
    vee_witness: tuple[str, str, str] | None = None
    failure: Any = None


def comparability_components(ctx: XTopContext) -> list[int]:
    o = ctx.lattice.order
    X = ctx.x_mask
    comps, seen = [], 0
    for i in bits(X):
        if seen >> i & 1:
            continue
        comp, frontier = 0, 1 << i
        while frontier:
            comp |= frontier
            nxt = 0
            for j in bits(frontier):
                nxt |= (o.up[j] | o.down[j]) & X
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def wedge_tree_failure(ctx: XTopContext, mask: int):
    """First violated clause of the wedge-tree definition inside ``mask``, or None."""
    o = ctx.lattice.order
    E = o.elements
    for a, b in combinations(bits(mask), 2):
        comparable = o.up[a] >> b & 1 or o.up[b] >> a & 1
        if not comparable:
            above = o.up[a] & o.up[b] & mask & ~(1 << a) & ~(1 << b)
            if not above:
                return {"clause": "incomparable pair without common upper bound",
                        "pair": (E[a], E[b])}
    for x in bits(mask):
        strictly_above = o.up[x] & mask & ~(1 << x)
        for y, z in combinations(bits(strictly_above), 2):
            if not (o.up[y] >> z & 1 or o.up[z] >> y & 1):
                return {"clause": "element below two incomparable elements",
                        "elements": (E[x], E[y], E[z])}
    return None


def find_vee(ctx: XTopContext):
    """A pattern ``m < y, m < z`` with ``y || z`` in ``X`` (a vee-tree with two maxima)."""
    o = ctx.lattice.order
    X = ctx.x_mask
    for m in bits(X):
        above = o.up[m] & X & ~(1 << m)
        for y, z in combinations(bits(above), 2):
            if not (o.up[y] >> z & 1 or o.up[z] >> y & 1):
                return (o.elements[m], o.elements[y], o.elements[z])
    return None


def tree_analysis(ctx: XTopContext) -> TreeDecomposition:
    o = ctx.lattice.order
    comps = comparability_components(ctx)
    rendered, failure = [], None
    for c in comps:
        f = wedge_tree_failure(ctx, c)
        failure = failure or f
        apex = o.maximal(c)
        rendered.append((o.names(c), o.names(apex)[0] if f is None and popcount(apex) == 1 else None))
    forest = failure is None
    sd = all(strongly_disjoint(ctx, o.names(a), o.names(b)).holds for a, b in combinations(comps, 2))
    vee = find_vee(ctx)
    if forest and vee:
        raise AssertionError("a wedge forest cannot contain a vee pattern")
    kind = "wedge_forest" if forest else "vee_tree_found" if vee else "neither"
    return TreeDecomposition(kind, tuple(rendered), sd, vee, failure)


def has_chain2(ctx: XTopContext) -> bool:
    o = ctx.lattice.order
    return any(o.up[i] & ctx.x_mask & ~(1 << i) for i in bits(ctx.x_mask))


# ---------------------------------------------------------------------------
# shapes


def classify_shape(S: FiniteSpace) -> str:
    """Name the specialization poset: P_k, C_k, T_k, V_k, D_k, or ``other``.

    A disconnected poset that is not discrete is named as a sum of its
    comparability components, e.g. ``C2 + C2``.
    """
    n = len(S)
    less = [[S.specializes(i, j) and i != j for j in range(n)] for i in range(n)]
    comparable = lambda i, j: less[i][j] or less[j][i]
    if not any(any(r) for r in less):
        return f"P{n}"
    parts = _components(n, comparable)
    if len(parts) > 1:
        return " + ".join(sorted(classify_shape(S.subspace(sum(1 << i for i in c))) for c in parts))
    if all(comparable(i, j) for i, j in combinations(range(n), 2)):
        return f"C{n}"
    mins = [i for i in range(n) if not any(less[j][i] for j in range(n))]
    maxs = [i for i in range(n) if not any(less[i][j] for j in range(n))]
    if len(mins) == 1 and len(maxs) == n - 1 and all(less[mins[0]][j] for j in maxs):
        return f"V{n - 1}"
    if len(maxs) == 1 and len(mins) == n - 1 and all(less[j][maxs[0]] for j in mins):
        return f"T{n - 1}"
    if len(mins) == 1 and len(maxs) == 1:
        middle = [i for i in range(n) if i not in mins and i not in maxs]
        if all(not comparable(i, j) for i, j in combinations(middle, 2)):
            return f"D{n}"
    return "other"


def _components(n, linked):
    parts, seen = [], set()
    for i in range(n):
        if i in seen:
            continue
        comp, stack = {i}, [i]
        while stack:
            a = stack.pop()
            for b in range(n):
                if b not in comp and linked(a, b):
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        parts.append(sorted(comp))
    return parts


# ---------------------------------------------------------------------------
# theorem cross-checks


@dataclass(frozen=True)
class ImplicationCheck:
    name: str
    hypotheses: bool
    conclusion: bool
    detail: str = ""

    @property
    def consistent(self) -> bool:
        return not self.hypotheses or self.conclusion


def theorem_deciders(ctx: XTopContext, limit: int | None = None) -> tuple[ImplicationCheck, ...]:
    """Evaluate each applicable result of the theory on ``ctx`` from first principles.

    Every predicate is computed independently; a check is inconsistent when
    its hypotheses hold and its conclusion fails.
    """
    S = generate_space(ctx)
    r = separation_report(S, limit)
    flags = structure_flags(ctx)
    pm = pm_properties(ctx)
    ret = find_retraction(ctx)
    trees = tree_analysis(ctx)
    prof = max_min_profile(ctx)
    c2 = has_chain2(ctx)
    kdim = r.krull_dim
    N, PMP, RET = r.normal.holds, pm.pm_property.holds, ret.exists
    atomic, coatomic = flags.atomic.holds, flags.coatomic.holds
    local, colocal = flags.local.holds, flags.colocal.holds
    UC, HC = r.ultraconnected.holds, r.hyperconnected.holds
    qh = r.quasi_hausdorff.holds
    t_r, t_n = r.regular_tasks > 0, r.normal_tasks > 0
    x_csi = all(is_strongly_irreducible(ctx, x, ctx.x_set, complete=True).holds for x in ctx.x_set)
    ladder = r.ladder()
    cmp_equiv = (r.regular.holds, r.t3.holds, r.t2_half.holds, r.t2.holds, r.t4.holds,
                 r.t3_half.holds, r.t1.holds and qh, kdim == 0 and qh)
    stone_equiv = (r.stone.holds, r.spectral.holds and r.t2.holds, r.spectral.holds and r.regular.holds,
                   r.spectral.holds and r.t3.holds, r.spectral.holds and r.t4.holds,
                   r.spectral.holds and r.t3_half.holds,
                   r.spectral.holds and pm.jacobson.holds and N,
                   r.spectral.holds and pm.jacobson.holds and PMP,
                   r.spectral.holds and kdim == 0,
                   r.spectral.holds and pm.dual_jacobson.holds and pm.m_property.holds)
    checks = [
        ImplicationCheck("xtop: X is T0", True, r.t0.holds),
        ImplicationCheck("xtop: finite X is spectral", True, r.spectral.holds),
        ImplicationCheck("xtop: Max(X) = Max(C^X)", True,
                         set(prof.max_x) == set(ctx.lattice.order.names(
                             ctx.lattice.order.maximal(ctx.cx_mask)))),
        ImplicationCheck("xtop: T1 <=> K.dim 0", True, r.t1.holds == (kdim == 0)),
        ImplicationCheck("xtop: T2 <=> K.dim 0 and quasi-Hausdorff", True,
                         r.t2.holds == (kdim == 0 and qh)),
        ImplicationCheck("xtop: T1/4 <=> K.dim <= 1", True, r.t_quarter.holds == (kdim <= 1)),
        ImplicationCheck("spectral => quasi-Hausdorff", r.spectral.holds, qh),
        ImplicationCheck("T2 <=> T1 and quasi-Hausdorff", True, r.t2.holds == (r.t1.holds and qh)),
        ImplicationCheck("extremely non-Hausdorff <=> |X| >= 2 and hyperconnected", True,
                         r.extremely_non_hausdorff.holds == (len(S) >= 2 and HC)),
        ImplicationCheck("ultraconnected => normal", UC, N),
        ImplicationCheck("hyperconnected and T(R) nonempty => extremely non-regular",
                         HC and t_r, r.extremely_non_regular.holds),
        ImplicationCheck("extremely non-regular and T(N) nonempty => extremely non-normal",
                         r.extremely_non_regular.holds and t_n, r.extremely_non_normal.holds),
        ImplicationCheck("T0 and regular => T1", r.t0.holds and r.regular.holds, r.t1.holds),
        ImplicationCheck("T0 and perfectly normal => T1", r.t0.holds and r.perfectly_normal.holds,
                         r.t1.holds),
        ImplicationCheck("T-ladder is monotone", True,
                         all(a or not b for a, b in zip(ladder, ladder[1:]))),
        ImplicationCheck("coatomic and normal => pm", coatomic and N, PMP),
        ImplicationCheck("coatomic and max-retract => pm", coatomic and RET, PMP),
        ImplicationCheck("atomic, coatomic, finite Min: normal <=> pm", atomic and coatomic, N == PMP),
        ImplicationCheck("coatomic, completely strongly X-irreducible, finite Max: retract <=> pm",
                         coatomic and x_csi, RET == PMP),
        ImplicationCheck("finite X: normal <=> pm <=> max-retract", True, N == PMP == RET,
                         f"normal={N} pm={PMP} retract={RET}"),
        ImplicationCheck("local => ultraconnected", local, UC),
        ImplicationCheck("local => normal", local, N),
        ImplicationCheck("colocal, normal, coatomic => |Max(X)| <= 1",
                         colocal and N and coatomic, len(prof.max_x) <= 1),
        ImplicationCheck("colocal and coatomic: local <=> ultraconnected <=> normal",
                         colocal and coatomic, local == UC == N),
        ImplicationCheck("strongly disjoint wedge forest => completely normal",
                         trees.kind == "wedge_forest" and trees.strongly_disjoint,
                         r.completely_normal.holds),
        ImplicationCheck("completely normal => no vee-tree with two maxima",
                         r.completely_normal.holds, trees.vee_witness is None),
        ImplicationCheck("perfectly normal => no C2", r.perfectly_normal.holds, not c2),
        ImplicationCheck("no C2 <=> K.dim 0", True, (not c2) == (kdim == 0)),
        ImplicationCheck("T6 <=> perfectly normal", True, r.t6.holds == r.perfectly_normal.holds),
        ImplicationCheck("regular <=> T3", True, r.regular.holds == r.t3.holds),
        ImplicationCheck("completely regular <=> T3½", True,
                         r.completely_regular.holds == r.t3_half.holds),
        ImplicationCheck("compact: regular <=> T3 <=> T2½ <=> T2 <=> T4 <=> T3½ <=> T1+qH <=> dim0+qH",
                         True, len(set(cmp_equiv)) == 1),
        ImplicationCheck("compact, coatomic: regular <=> normal and Jacobson", coatomic,
                         r.regular.holds == (N and pm.jacobson.holds)),
        ImplicationCheck("Stone space characterisations agree", True, len(set(stone_equiv)) == 1),
        ImplicationCheck("perfectly normal => completely normal", r.perfectly_normal.holds,
                         r.completely_normal.holds),
        ImplicationCheck("perfectly normal => completely regular", r.perfectly_normal.holds,
                         r.completely_regular.holds),
        ImplicationCheck("completely regular => regular", r.completely_regular.holds, r.regular.holds),
        ImplicationCheck("completely normal => normal", r.completely_normal.holds, N),
    ]
    return tuple(checks)
