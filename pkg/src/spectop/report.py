"""Analysis orchestration and the two deterministic renderings.

An analysis is a nested structure of plain values (str, int, bool, lists,
dicts). The text and struct renderers both walk that one structure, so they
always carry the same verdicts.
"""

from __future__ import annotations

from typing import Any

from . import order as orders
from .semiring import FiniteSemiring, regularity_predicates, spectrum
from .topology import FiniteSpace, RoutedVerdict, Verdict, classify_points, separation_report, \
    specialization_edges
from .xtop import XTopContext, complement_variety, cx_set, generate_space, is_xtop, variety

SEPARATION_FIELDS = (
    "t0", "t_quarter", "t_half", "t_three_quarter", "t1", "t2", "t2_half", "t3", "t3_half",
    "t4", "t5", "t6", "quasi_hausdorff", "regular", "completely_regular", "normal",
    "completely_normal", "perfectly_normal", "extremely_non_hausdorff", "anti_hausdorff",
    "extremely_non_regular", "anti_regular", "extremely_non_normal", "anti_normal",
    "connected", "hyperconnected", "ultraconnected", "sober", "spectral", "stone",
    "g_delta_space",
)


def plain(value: Any) -> Any:
    """Convert verdicts, sets and tuples to deterministic plain values."""
    if isinstance(value, (Verdict, RoutedVerdict)):
        out = {"holds": value.holds, "witness": plain(value.witness)}
        if isinstance(value, RoutedVerdict):
            out["routes"] = list(value.routes)
        return out
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def set_str(names) -> str:
    return "{" + ",".join(names) + "}" if names else "{}"


def _ordered(ctx: XTopContext, names) -> list[str]:
    return list(ctx.lattice.order.sort(names))


def analyze_context(ctx: XTopContext, source: str, limit: int | None = None) -> dict:
    L = ctx.lattice
    model: dict[str, Any] = {
        "source": source,
        "x": list(ctx.x_set),
        "lattice": {"elements": list(L.elements), "bottom": L.bottom, "top": L.top,
                    "covers": [list(c) for c in L.order.covers()]},
        "cx": _ordered(ctx, cx_set(ctx)),
        "varieties": [{"element": a, "closed": _ordered(ctx, variety(ctx, a)),
                       "open": _ordered(ctx, complement_variety(ctx, a))} for a in L.elements],
    }
    check = is_xtop(ctx)
    model["xtop"] = plain(check)
    if not check.holds:
        return model
    S = generate_space(ctx)
    model.update(_space_sections(S, limit))
    prof = orders.max_min_profile(ctx)
    flags = orders.structure_flags(ctx)
    pm = orders.pm_properties(ctx)
    ret = orders.find_retraction(ctx)
    trees = orders.tree_analysis(ctx)
    model["order"] = {
        "max": list(prof.max_x),
        "min": list(prof.min_x),
        "max_of": {x: list(v) for x, v in prof.max_of.items()},
        "min_of": {x: list(v) for x, v in prof.min_of.items()},
        "atomic": plain(flags.atomic),
        "coatomic": plain(flags.coatomic),
        "local": plain(flags.local),
        "colocal": plain(flags.colocal),
        "pm_property": plain(pm.pm_property),
        "m_property": plain(pm.m_property),
        "jacobson": plain(pm.jacobson),
        "dual_jacobson": plain(pm.dual_jacobson),
        "max_retraction": {
            "exists": ret.exists,
            "map": plain(ret.retraction.map) if ret.retraction else None,
            "method": ret.retraction.method if ret.retraction else None,
            "obstruction": plain(ret.obstruction),
        },
        "trees": {
            "kind": trees.kind,
            "components": [{"points": list(p), "apex": a} for p, a in trees.components],
            "strongly_disjoint": trees.strongly_disjoint,
            "vee_witness": plain(trees.vee_witness),
            "failure": plain(trees.failure),
        },
    }
    model["theorems"] = [
        {"name": c.name, "hypotheses": c.hypotheses, "conclusion": c.conclusion,
         "consistent": c.consistent}
        for c in orders.theorem_deciders(ctx, limit)
    ]
    return model


def _space_sections(S: FiniteSpace, limit: int | None) -> dict:
    rep = separation_report(S, limit)
    return {
        "space": {
            "points": list(S.points),
            "closed_sets": [list(c) for c in S.closed_sets()],
            "open_sets": [list(o) for o in S.open_sets()],
            "specialization": [list(e) for e in specialization_edges(S)],
            "shape": orders.classify_shape(S),
        },
        "point_classes": [
            {"point": p.point, "closed": p.closed, "isolated": p.isolated,
             "kerneled": p.kerneled, "regular_open": p.regular_open, "kernel": list(p.kernel)}
            for p in classify_points(S)
        ],
        "separation": {f: plain(getattr(rep, f)) for f in SEPARATION_FIELDS},
        "tasks": {"regular": {"tasks": rep.regular_tasks, "separated": rep.regular_separated},
                  "normal": {"tasks": rep.normal_tasks, "separated": rep.normal_separated}},
        "krull_dim": rep.krull_dim,
        "t_level": rep.t_level,
    }


def analyze_semiring(R: FiniteSemiring, source: str, limit: int | None = None) -> dict:
    spec = spectrum(R)
    model = analyze_context(spec.context, source, limit)
    reg = regularity_predicates(R)
    model["semiring"] = {
        "carrier": list(R.carrier),
        "entire": plain(R.entire),
        "ring": plain(R.ring),
        "proper": R.proper,
        "ideals": [I.name for I in spec.ideals],
        "primes": [P.name for P in spec.primes],
        "maximal": [P.name for P in spec.maximal],
        "minimal": [P.name for P in spec.minimal],
        "von_neumann_regular": plain(reg.von_neumann_regular),
        "pi_regular": plain(reg.pi_regular),
        "reduced": plain(reg.reduced),
        "nilradical": list(reg.nilradical),
    }
    return model


# ---------------------------------------------------------------------------
# rendering


def fmt_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(fmt_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {fmt_value(v[k])}" for k in sorted(v)) + "}"
    return str(v)


def render_struct(model: dict) -> str:
    """Nested ``key: value`` lines with sorted keys; list items are indexed."""
    lines: list[str] = []

    def walk(v, indent, key):
        pad = "  " * indent
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{key}:")
            for k in sorted(v):
                walk(v[k], indent + 1, k)
        elif isinstance(v, list) and v and any(isinstance(x, (dict, list)) for x in v):
            lines.append(f"{pad}{key}:")
            for i, x in enumerate(v):
                walk(x, indent + 1, f"[{i}]")
        else:
            lines.append(f"{pad}{key}: {fmt_value(v)}")

    for k in sorted(model):
        walk(model[k], 0, k)
    return "\n".join(lines) + "\n"


def _mark(v: dict | None) -> str:
    if v is None:
        return "skipped (size limit)"
    return "yes" if v["holds"] else "no"


def _why(v: dict | None) -> str:
    if v is None or v["witness"] in (None, [], {}):
        return ""
    return "  " + fmt_value(v["witness"])


def render_text(model: dict) -> str:
    out: list[str] = []
    add = out.append
    add(f"source: {model['source']}")
    add(f"X = {set_str(model['x'])}")
    add(f"C^X = {set_str(model['cx'])}")
    add(f"X-top: {_mark(model['xtop'])}{_why(model['xtop'])}")
    add("")
    add("varieties")
    width = max(len(r["element"]) for r in model["varieties"])
    cwidth = max(len(set_str(r["closed"])) for r in model["varieties"])
    for r in model["varieties"]:
        pad = " " * (width - len(r["element"]))
        add(f"  V({r['element']}){pad} = {set_str(r['closed']):<{cwidth}}   "
            f"D({r['element']}){pad} = {set_str(r['open'])}")
    if "space" not in model:
        return "\n".join(out) + "\n"
    sp = model["space"]
    add("")
    add(f"shape: {sp['shape']}   K.dim: {model['krull_dim']}   T-level: {model['t_level']}")
    add("closed sets: " + ", ".join(set_str(c) for c in sp["closed_sets"]))
    add("open sets:   " + ", ".join(set_str(o) for o in sp["open_sets"]))
    add("specialization: " + (", ".join(f"{a} ~> {b}" for a, b in sp["specialization"]) or "none"))
    add("")
    add("points       closed  isolated  kerneled  reg.open  kernel")
    for p in model["point_classes"]:
        add(f"  {p['point']:<10} {fmt_value(p['closed']):<7} {fmt_value(p['isolated']):<9} "
            f"{fmt_value(p['kerneled']):<9} {fmt_value(p['regular_open']):<9} {set_str(p['kernel'])}")
    add("")
    add("separation")
    for f in SEPARATION_FIELDS:
        v = model["separation"][f]
        add(f"  {f:<24} {_mark(v)}{_why(v)}")
    t = model["tasks"]
    add(f"  regular tasks: {t['regular']['tasks']} ({t['regular']['separated']} separated)   "
        f"normal tasks: {t['normal']['tasks']} ({t['normal']['separated']} separated)")
    o = model["order"]
    add("")
    add("order structure")
    add(f"  Max(X) = {set_str(o['max'])}   Min(X) = {set_str(o['min'])}")
    for x in model["x"]:
        add(f"  Max({x}) = {set_str(o['max_of'][x])}   Min({x}) = {set_str(o['min_of'][x])}")
    for f in ("atomic", "coatomic", "local", "colocal", "pm_property", "m_property",
              "jacobson", "dual_jacobson"):
        add(f"  {f:<24} {_mark(o[f])}{_why(o[f])}")
    r = o["max_retraction"]
    if r["exists"]:
        add(f"  max-retraction           yes  {fmt_value(r['map'])} ({r['method']})")
    else:
        add(f"  max-retraction           no  {fmt_value(r['obstruction'])}")
    tr = o["trees"]
    comps = "; ".join(f"{set_str(c['points'])} apex {c['apex'] or '-'}" for c in tr["components"])
    add(f"  trees: {tr['kind']}  strongly disjoint: {fmt_value(tr['strongly_disjoint'])}")
    add(f"    components: {comps}")
    if tr["vee_witness"]:
        add(f"    vee: {fmt_value(tr['vee_witness'])}")
    if tr["failure"]:
        add(f"    not a wedge forest: {fmt_value(tr['failure'])}")
    if "semiring" in model:
        s = model["semiring"]
        add("")
        add("semiring")
        add(f"  carrier: {set_str(s['carrier'])}")
        add(f"  ideals: {', '.join(s['ideals'])}")
        add(f"  Spec: {', '.join(s['primes'])}")
        add(f"  Max: {', '.join(s['maximal'])}   Min: {', '.join(s['minimal'])}")
        for f in ("entire", "ring", "von_neumann_regular", "pi_regular", "reduced"):
            add(f"  {f:<24} {_mark(s[f])}{_why(s[f])}")
        add(f"  proper                   {'yes' if s['proper'] else 'no'}")
        add(f"  nilradical: {set_str(s['nilradical'])}")
    add("")
    bad = [c for c in model["theorems"] if not c["consistent"]]
    applied = sum(c["hypotheses"] for c in model["theorems"])
    add(f"theorem checks: {len(model['theorems'])} evaluated, {applied} applicable, "
        f"{len(bad)} inconsistent")
    for c in bad:
        add(f"  INCONSISTENT: {c['name']}")
    return "\n".join(out) + "\n"
