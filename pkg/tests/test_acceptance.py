"""Acceptance criteria 1 to 7.

Each test records a one-line verdict that the conftest prints in the
terminal summary. Expected values are transcribed as published; nothing is
adjusted to make a criterion pass.
"""

from __future__ import annotations

import random
import time

from helpers import random_lattices, random_x, small_lattices, nonempty_subsets

from spectop.errors import InternalInconsistency
from spectop.examples import builtin
from spectop.order import find_retraction, pm_properties, structure_flags, theorem_deciders, \
    tree_analysis, classify_shape, max_min_profile
from spectop.semiring import bni, product, regularity_predicates, spectrum
from spectop.tables import bni_table, five_space_table
from spectop.topology import (
    classify_points,
    completely_normal,
    homeomorphic,
    normal_family,
    perfectly_normal,
    regular_family,
    separation_report,
)
from spectop.xtop import XTopContext, complement_variety, cx_set, generate_space, is_xtop, \
    strongly_disjoint, variety


def record(acceptance, k, ok, detail):
    acceptance[k] = (ok, detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


# ---------------------------------------------------------------------------
# 1 and 2: the summary tables


def test_criterion_1_five_space_table(acceptance):
    start = time.perf_counter()
    table = five_space_table()
    elapsed = time.perf_counter() - start
    bad = table.mismatches
    ok = table.cells == 45 and not bad and elapsed < 1.0
    detail = f"{table.cells - len(bad)}/{table.cells} cells match in {elapsed:.2f}s"
    if bad:
        detail += "; " + "; ".join(f"{r} {c}: published {e}, computed {g}" for r, c, e, g, _ in bad)
    record(acceptance, 1, ok, detail)
    assert table.cells == 45
    assert elapsed < 1.0
    assert not bad, detail


def test_criterion_2_bni_table(acceptance):
    start = time.perf_counter()
    table = bni_table()
    elapsed = time.perf_counter() - start
    bad = table.mismatches
    ok = len(table.rows) == 7 and not bad and elapsed < 5.0
    detail = f"{table.cells - len(bad)}/{table.cells} cells match in {elapsed:.2f}s"
    if bad:
        detail += "; " + "; ".join(f"{r} {c}: published {e}, computed {g}" for r, c, e, g, _ in bad)
    record(acceptance, 2, ok, detail)
    assert elapsed < 5.0
    assert not bad, detail


# ---------------------------------------------------------------------------
# 3: worked examples, transcribed verbatim

E = frozenset


def s(*xs):
    return frozenset(xs)


# name -> (C^X, closed table, open table)
TABLES = {
    "N5a": (s("0", "y", "x"),
            {"0": s("0", "y", "x"), "y": s("x", "y"), "z": E(), "1": E(), "x": s("x")},
            {"0": E(), "y": s("0"), "z": s("0", "y", "x"), "1": s("0", "y", "x"),
             "x": s("0", "y")}),
    "N5b": (s("y", "x"),
            {"0": s("y", "x"), "y": s("y", "x"), "z": E(), "1": E(), "x": s("x")},
            {"0": E(), "y": E(), "z": s("y", "x"), "1": s("y", "x"), "x": s("y")}),
    "notpm": (s("0", "t", "x", "y", "u", "v"),
              {"0": s("x", "u", "y", "v"), "x": s("x"), "u": s("u", "x", "y"), "1": E(),
               "y": s("y"), "v": s("v", "y", "x"), "t": s("x", "y")},
              {"0": E(), "x": s("y", "u", "v"), "u": s("v"), "1": s("x", "u", "y", "v"),
               "y": s("x", "u", "v"), "v": s("u"), "t": s("u", "v")}),
    "sd": (s("0", "t", "x", "y", "u", "v", "w", "z"),
           {"0": s("x", "u", "y", "v"), "x": s("x"), "v": s("v", "y"), "1": E(), "y": s("y"),
            "z": s("u", "x", "y"), "t": s("x", "y"), "u": s("u", "x"), "w": s("v", "x", "y")},
           # published with D(0) and D(1) exchanged
           {"0": s("x", "u", "y", "v"), "x": s("y", "u", "v"), "v": s("u", "x"), "1": E(),
            "y": s("x", "u", "v"), "z": s("v"), "t": s("u", "v"), "u": s("v", "y"),
            "w": s("u")}),
    "X": (s("0", "z", "x", "y", "w"),
          {"0": s("0", "x", "y", "w"), "z": s("x", "y", "w"), "y": s("y", "w"), "1": E(),
           "x": s("x", "w"), "w": s("w")},
          {"0": E(), "z": s("0"), "y": s("0", "x"), "1": s("0", "x", "y", "w"),
           "x": s("0", "y"), "w": s("0", "x", "y")}),
    "Y": (s("z", "x", "y", "w"),
          {"0": s("x", "y", "w"), "z": s("x", "y", "w"), "y": s("y", "w"), "1": E(),
           "x": s("x", "w"), "w": s("w")},
          {"0": E(), "z": E(), "y": s("x"), "1": s("x", "y", "w"), "x": s("y"),
           "w": s("x", "y")}),
    "Q": (s("0", "z", "x", "y"),
          {"0": s("0", "x", "y"), "z": s("x", "y"), "y": s("y"), "1": E(), "x": s("x"),
           "w": E()},
          # published with D(0) and D(1) exchanged
          {"0": s("0", "x", "y"), "z": s("0"), "y": s("0", "x"), "1": E(), "x": s("0", "y"),
           "w": s("0", "x", "y")}),
    "H": (s("z", "x", "y"), None,
          {"0": E(), "z": E(), "y": s("x"), "1": s("x", "y"), "x": s("y"), "w": s("x", "y")}),
    "G": (s("x", "w"), None,
          {"0": E(), "z": E(), "y": s("x"), "1": s("x", "w"), "x": E(), "w": s("x")}),
}


def _verdicts(name):
    """Property -> published value, for every verdict stated in the example text."""
    ctx = builtin(name)
    S = generate_space(ctx)
    r = separation_report(S)
    prof = max_min_profile(ctx)
    flags = structure_flags(ctx)
    pm = pm_properties(ctx)
    pts = {p.point: p for p in classify_points(S)}
    got = {
        "hyperconnected": r.hyperconnected.holds,
        "ultraconnected": r.ultraconnected.holds,
        "normal": r.normal.holds,
        "completely_normal": r.completely_normal.holds,
        "perfectly_normal": r.perfectly_normal.holds,
        "regular": r.regular.holds,
        "completely_regular": r.completely_regular.holds,
        "extremely_non_hausdorff": r.extremely_non_hausdorff.holds,
        "extremely_non_regular": r.extremely_non_regular.holds,
        "extremely_non_normal": r.extremely_non_normal.holds,
        "anti_normal": r.anti_normal.holds,
        "g_delta_space": r.g_delta_space.holds,
        "spectral": r.spectral.holds,
        "t1": r.t1.holds,
        "t_quarter": r.t_quarter.holds,
        "t_half": r.t_half.holds,
        "t_three_quarter": r.t_three_quarter.holds,
        "t6": r.t6.holds,
        "krull_dim": r.krull_dim,
        "local": flags.local.holds,
        "colocal": flags.colocal.holds,
        "coatomic": flags.coatomic.holds,
        "pm_property": pm.pm_property.holds,
        "max_retraction": find_retraction(ctx).exists,
        "max": set(prof.max_x),
        "min": set(prof.min_x),
        "shape": classify_shape(S),
        "closed_points": {p for p, c in pts.items() if c.closed},
        "isolated_points": {p for p, c in pts.items() if c.isolated},
        "discrete": len(S.closed) == 2 ** len(S),
        "regular_tasks": {(frozenset(c), p) for c, p in regular_family(S).tasks},
        "normal_tasks": {frozenset({frozenset(c), frozenset(d)}) for c, d in normal_family(S).tasks},
    }
    return ctx, S, got


Y_, N_ = True, False

CLAIMS = {
    "N5a": {"colocal": Y_, "min": {"0"}, "local": Y_, "max": {"x"}, "ultraconnected": Y_,
            "normal": Y_, "hyperconnected": Y_, "extremely_non_hausdorff": Y_,
            "extremely_non_regular": Y_, "shape": "C3", "krull_dim": 2, "t1": N_,
            "t_quarter": N_, "spectral": Y_},
    "N5b": {"colocal": Y_, "min": {"y"}, "local": Y_, "max": {"x"}, "ultraconnected": Y_,
            "normal": Y_, "hyperconnected": Y_, "extremely_non_hausdorff": Y_,
            "extremely_non_regular": Y_, "closed_points": {"x"}, "isolated_points": {"y"},
            "t_half": Y_, "t_three_quarter": N_, "spectral": Y_},
    "notpm": {"max": {"x", "y"}, "pm_property": N_, "normal": N_,
              "closed_points": {"x", "y"}, "isolated_points": {"u", "v"}, "t_half": Y_,
              "t_three_quarter": N_, "max_retraction": N_, "extremely_non_normal": Y_,
              "anti_normal": N_, "normal_tasks": {frozenset({s("x"), s("y")})},
              "completely_normal": N_},
    "sd": {"max": {"x", "y"}, "krull_dim": 1, "completely_normal": Y_,
           "perfectly_normal": N_, "closed_points": {"x", "y"}, "isolated_points": {"u", "v"},
           "t_half": Y_, "t_three_quarter": N_, "g_delta_space": N_, "regular": N_,
           "spectral": Y_},
    "X": {"colocal": Y_, "min": {"0"}, "local": Y_, "max": {"w"}, "pm_property": Y_,
          "normal": Y_, "completely_normal": N_, "regular": N_, "completely_regular": N_,
          "perfectly_normal": N_, "hyperconnected": Y_, "extremely_non_hausdorff": Y_,
          "extremely_non_regular": Y_, "t_quarter": N_, "ultraconnected": Y_,
          "normal_tasks": set(), "g_delta_space": N_, "spectral": Y_},
    "Y": {"shape": "T2", "krull_dim": 1, "completely_normal": Y_, "perfectly_normal": N_,
          "regular": N_, "completely_regular": N_, "t_three_quarter": Y_, "t1": N_,
          "regular_tasks": {(s("x", "w"), "y"), (s("y", "w"), "x"), (s("w"), "x"),
                            (s("w"), "y")},
          "extremely_non_regular": Y_, "extremely_non_hausdorff": N_, "hyperconnected": N_,
          "spectral": Y_},
    "Q": {"shape": "V2", "krull_dim": 1, "colocal": Y_, "min": {"0"}, "local": N_,
          "max": {"x", "y"}, "coatomic": Y_, "pm_property": N_, "normal": N_,
          "completely_normal": N_, "perfectly_normal": N_, "regular": N_,
          "hyperconnected": Y_, "extremely_non_hausdorff": Y_, "extremely_non_regular": Y_,
          "extremely_non_normal": Y_, "anti_normal": Y_, "t_half": Y_, "t_three_quarter": N_,
          "spectral": Y_},
    "H": {"discrete": Y_, "t6": Y_, "spectral": Y_},
    "G": {"shape": "C2", "completely_normal": Y_, "perfectly_normal": N_, "regular": N_,
          "krull_dim": 1, "spectral": Y_},
}


def test_criterion_3_worked_examples(acceptance):
    problems = []
    entries = 0
    for name, (cx, closed, opened) in TABLES.items():
        ctx, S, got = _verdicts(name)
        entries += 1
        if cx_set(ctx) != cx:
            problems.append(f"{name} C^X: published {sorted(cx)}, computed {sorted(cx_set(ctx))}")
        for table, fn, tag in ((closed, variety, "V"), (opened, complement_variety, "D")):
            for a, expected in (table or {}).items():
                entries += 1
                if fn(ctx, a) != expected:
                    problems.append(f"{name} {tag}({a}): published {sorted(expected)}, "
                                    f"computed {sorted(fn(ctx, a))}")
        for prop, expected in CLAIMS[name].items():
            entries += 1
            if got[prop] != expected:
                problems.append(f"{name} {prop}: published {expected}, computed {got[prop]}")
    # the strongly-disjoint remark on the not-pm lattice, and the wedge forest of sd
    entries += 2
    ctx = builtin("notpm")
    if strongly_disjoint(ctx, ["u", "x"], ["v", "y"]).holds:
        problems.append("notpm {u,x}, {v,y} strongly disjoint")
    trees = tree_analysis(builtin("sd"))
    if not (trees.kind == "wedge_forest" and trees.strongly_disjoint):
        problems.append("sd is not a strongly disjoint wedge forest")
    detail = f"{entries - len(problems)}/{entries} entries match"
    if problems:
        detail += "; " + "; ".join(problems)
    record(acceptance, 3, not problems, detail)
    assert not problems, detail


# ---------------------------------------------------------------------------
# 4 and 5: theorem suite and oracle agreement

CRITERION_4_CHECKS = {
    "finite X: normal <=> pm <=> max-retract",
    "xtop: T1 <=> K.dim 0",
    "xtop: T1/4 <=> K.dim <= 1",
    "no C2 <=> K.dim 0",
    "perfectly normal => no C2",
    "extremely non-Hausdorff <=> |X| >= 2 and hyperconnected",
    "hyperconnected and T(R) nonempty => extremely non-regular",
    "extremely non-regular and T(N) nonempty => extremely non-normal",
    "strongly disjoint wedge forest => completely normal",
    "completely normal => no vee-tree with two maxima",
    "compact: regular <=> T3 <=> T2½ <=> T2 <=> T4 <=> T3½ <=> T1+qH <=> dim0+qH",
    "T-ladder is monotone",
}


def _suite_contexts():
    """(a) every X-top subset of every lattice on <= 5 elements, (b) 1000 random lattices."""
    for L in small_lattices(5):
        pool = [e for e in L.elements if e != L.top]
        for X in nonempty_subsets(pool):
            yield "exhaustive", XTopContext.of(L, X)
    rng = random.Random(20261016)
    for L in random_lattices(rng, 1000, 8):
        yield "random", XTopContext.of(L, random_x(rng, L))


SUITE_STATS: dict[str, int] = {}


def test_criterion_4_theorem_suite(acceptance):
    start = time.perf_counter()
    counts = {"exhaustive": 0, "random": 0, "xtop": 0, "checks": 0}
    violations = []
    names_seen = set()
    routed = 0
    for kind, ctx in _suite_contexts():
        counts[kind] += 1
        try:
            top = is_xtop(ctx).holds
        except InternalInconsistency as e:
            violations.append(f"X-top routes disagree on {ctx.x_set}: {e}")
            continue
        if not top:
            continue
        counts["xtop"] += 1
        for c in theorem_deciders(ctx):
            names_seen.add(c.name)
            counts["checks"] += 1
            if not c.consistent:
                violations.append(f"{c.name} on X={ctx.x_set} of {ctx.lattice.elements}")
        routed += 1
    SUITE_STATS["spaces"] = routed
    elapsed = time.perf_counter() - start
    missing = CRITERION_4_CHECKS - names_seen
    ok = not violations and not missing and counts["random"] >= 1000 and elapsed < 60
    detail = (f"{counts['exhaustive']} exhaustive + {counts['random']} random contexts, "
              f"{counts['xtop']} X-top, {counts['checks']} implication checks, "
              f"{len(violations)} violations in {elapsed:.1f}s")
    record(acceptance, 4, ok, detail)
    assert not missing, missing
    assert not violations, violations[:5]
    assert counts["random"] >= 1000
    assert elapsed < 60


def test_criterion_5_oracle_agreement(acceptance):
    disagreements = []
    both_routes = pn_checked = 0
    spaces = [generate_space(builtin(n)) for n in TABLES]
    for _, ctx in _suite_contexts():
        if is_xtop(ctx).holds:
            spaces.append(generate_space(ctx))
    for S in spaces:
        try:
            cn = completely_normal(S, limit=12)
            pn = perfectly_normal(S)
        except InternalInconsistency as e:
            disagreements.append(f"{S.points}: {e}")
            continue
        if len(S) <= 12 and set(cn.routes) == {"subspaces", "separated_pairs"}:
            both_routes += 1
        pn_checked += set(pn.routes) == {"clopen_fibres", "vedenissoff"}
    ok = not disagreements and both_routes == len(spaces) and pn_checked == len(spaces)
    detail = (f"{both_routes}/{len(spaces)} spaces ran both completely-normal routes, "
              f"{pn_checked} ran both perfectly-normal routes, {len(disagreements)} disagreements")
    record(acceptance, 5, ok, detail)
    assert not disagreements
    assert both_routes == len(spaces)
    assert pn_checked == len(spaces)


# ---------------------------------------------------------------------------
# 6 and 7: semiring regressions and homeomorphisms


def test_criterion_6_semiring_regression(acceptance):
    problems = []
    R = bni(3, 1)
    reg = regularity_predicates(R)
    if not reg.reduced.holds:
        problems.append("B(3,1) not reduced")
    if not reg.von_neumann_regular.holds:
        problems.append("B(3,1) not von Neumann regular")
    if spectrum(R).krull_dim != 1:
        problems.append(f"K.dim Spec B(3,1) = {spectrum(R).krull_dim}")
    spec63 = set(spectrum(bni(6, 3)).member_sets())
    if spec63 != {s("0"), s("0", "3"), s("0", "2", "3", "4", "5")}:
        problems.append(f"Spec B(6,3) = {sorted(map(sorted, spec63))}")
    sd_space = generate_space(builtin("sd"))
    prod = spectrum(product(bni(3, 2), bni(3, 2))).space
    if not homeomorphic(prod, sd_space).holds:
        problems.append("Spec(B(3,2) x B(3,2)) not homeomorphic to the sd space")
    record(acceptance, 6, not problems, "; ".join(problems) or "3/3 regressions hold")
    assert not problems


def _check_bijection(S1, S2, mapping):
    assert sorted(mapping) == sorted(S1.points)
    assert sorted(mapping.values()) == sorted(S2.points)
    image = {c: frozenset(mapping[p] for p in c) for c in map(frozenset, S1.closed_sets())}
    return set(image.values()) == set(map(frozenset, S2.closed_sets()))


def test_criterion_7_homeomorphisms(acceptance):
    claims = [("N5a", (6, 3)), ("G", (4, 3)), ("Q", (7, 1))]
    problems, maps = [], []
    for name, (n, i) in claims:
        S1 = generate_space(builtin(name))
        S2 = spectrum(bni(n, i)).space
        v = homeomorphic(S1, S2)
        if not v.holds or not _check_bijection(S1, S2, v.witness):
            problems.append(f"{name} vs Spec B({n},{i})")
        else:
            maps.append(f"{name}~B({n},{i}) via " +
                        ", ".join(f"{a}->{b}" for a, b in sorted(v.witness.items())))
    record(acceptance, 7, not problems, "; ".join(problems or maps))
    assert not problems
