"""Recompute the two published summary tables and compare every cell.

The expected values are transcribed as published, including the cells this
package disagrees with; each disagreement is reported with its witness
rather than hidden.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .examples import builtin
from .order import classify_shape
from .report import fmt_value, plain
from .semiring import FiniteSemiring, bni, spectrum
from .topology import _LADDER_FIELDS, FiniteSpace, SeparationReport, separation_report
from .xtop import generate_space

COLUMNS = ("K.dim", "UC", "HC", "R", "CR", "N", "CN", "PN", "T")
BNI_COLUMNS = ("shape", "K.dim", "R", "CR", "N", "CN", "PN", "T")

Y, N = True, False

# name -> (points as published, graph, K.dim, UC, HC, R, CR, N, CN, PN, T)
FIVE_SPACES: dict[str, tuple] = {
    "X": ("{0,x,y,w}", "D4", 2, Y, Y, N, N, Y, N, N, "T0"),
    "Y": ("{x,y,w}", "T2", 1, Y, N, N, N, Y, Y, N, "T3/4"),
    "Q": ("{x,y,w}", "V2", 1, N, Y, N, N, N, N, N, "T1/2"),
    "H": ("{x,y}", "P2", 0, Y, N, Y, Y, Y, Y, Y, "T6"),
    "G": ("{x,w}", "C2", 1, Y, Y, N, N, Y, Y, N, "T1/2"),
}

# (n, i) representative -> (row label n, row label i, omega label, shape, K.dim, R, CR, N, CN, PN, T)
BNI_ROWS: dict[tuple[int, int], tuple] = {
    (12, 0): (">=2", "0", "w(n)", "P2", 0, Y, Y, Y, Y, Y, "T6"),
    (2, 1): ("2", "1", "0", "P1", 0, Y, Y, Y, Y, Y, "T6"),
    (3, 1): (">=3", "1", "1", "C2", 1, N, N, Y, Y, N, "T1/2"),
    (7, 1): (">=7", "1", ">=2", "V2", 1, N, N, N, N, N, "T1/2"),
    (4, 3): (">=3", "n-1", "0", "C2", 1, N, N, Y, Y, N, "T1/2"),
    (6, 3): (">=4", "[2,n-2]", "1", "C3", 2, N, N, Y, Y, N, "T1/2"),
    (8, 2): (">=8", "[2,n-2]", ">=2", "D4", 2, N, N, Y, N, N, "T0"),
}


@dataclass
class Row:
    label: str
    computed: dict[str, Any]
    expected: dict[str, Any]
    info: dict[str, str] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def mismatches(self) -> list[str]:
        return [c for c in self.expected if self.computed[c] != self.expected[c]]


@dataclass
class Table:
    title: str
    columns: tuple[str, ...]
    rows: list[Row]

    @property
    def mismatches(self) -> list[tuple[str, str, Any, Any, Any]]:
        return [(r.label, c, r.expected[c], r.computed[c], r.witnesses.get(c))
                for r in self.rows for c in r.mismatches]

    @property
    def cells(self) -> int:
        return sum(len(r.expected) for r in self.rows)


_FIELDS = {"UC": "ultraconnected", "HC": "hyperconnected", "R": "regular",
           "CR": "completely_regular", "N": "normal", "CN": "completely_normal",
           "PN": "perfectly_normal"}


def witnesses(r: SeparationReport) -> dict[str, Any]:
    out = {c: plain(getattr(r, f).witness) for c, f in _FIELDS.items()}
    # the level is certified by the first rung that fails
    failing = next((f for f in _LADDER_FIELDS if not getattr(r, f).holds), None)
    out["T"] = failing and {failing: plain(getattr(r, failing).witness)}
    return out


def space_columns(S: FiniteSpace) -> tuple[dict[str, Any], dict[str, Any]]:
    r = separation_report(S)
    return {
        "shape": classify_shape(S),
        "K.dim": r.krull_dim,
        "UC": r.ultraconnected.holds,
        "HC": r.hyperconnected.holds,
        "R": r.regular.holds,
        "CR": r.completely_regular.holds,
        "N": r.normal.holds,
        "CN": r.completely_normal.holds,
        "PN": r.perfectly_normal.holds,
        "T": r.t_level,
    }, witnesses(r)


def five_space_table() -> Table:
    rows = []
    for name, (points, graph, *vals) in FIVE_SPACES.items():
        ctx = builtin(name)
        computed, wit = space_columns(generate_space(ctx))
        rows.append(Row(name, computed, dict(zip(COLUMNS, vals)),
                        {"points": "{" + ",".join(ctx.x_set) + "}", "published points": points,
                         "graph": computed["shape"], "published graph": graph}, wit))
    return Table("five spaces on the distributive lattice 0 < z < x, y < w < 1", COLUMNS, rows)


def omega(m: int) -> int:
    count, p = 0, 2
    while m > 1:
        if m % p == 0:
            count += 1
            while m % p == 0:
                m //= p
        p += 1
    return count


def bni_table() -> Table:
    rows = []
    for (n, i), (ln, li, lw, *vals) in BNI_ROWS.items():
        spec = spectrum(bni(n, i))
        computed, wit = space_columns(spec.space)
        m = n if i == 0 else n - i
        rows.append(Row(f"B({n},{i})", computed, dict(zip(BNI_COLUMNS, vals)),
                        {"n": ln, "i": li, "omega": f"{lw} (={omega(m)})",
                         "Spec": ", ".join(P.name for P in spec.primes)}, wit))
    return Table("prime spectra of B(n,i)", BNI_COLUMNS, rows)


def prime_divisors(m: int) -> list[int]:
    return [p for p in range(2, m + 1) if m % p == 0 and all(p % q for q in range(2, p))]


def _multiples(R: FiniteSemiring, a: str) -> frozenset[str]:
    return frozenset(R.times(a, r) for r in R.carrier)


def predicted_spectrum(n: int, i: int) -> tuple[set[frozenset[str]], int]:
    """Prime ideals and Krull dimension of B(n,i) by the published case analysis."""
    R = bni(n, i)
    zero = frozenset({"0"})
    maximal = frozenset(str(k) for k in range(n) if k != 1)
    if i == 0:
        return {_multiples(R, str(p % n)) for p in prime_divisors(n)}, 0
    if n == 2:
        return {zero}, 0
    if i == 1:
        return {zero} | {_multiples(R, str(p)) for p in prime_divisors(n - 1)}, 1
    if i == n - 1:
        return {zero, maximal}, 1
    return {zero, maximal} | {_multiples(R, str(p)) for p in prime_divisors(n - i)}, 2


@dataclass(frozen=True)
class CaseCheck:
    n: int
    i: int
    computed: tuple[frozenset[str], ...]
    predicted: tuple[frozenset[str], ...]
    krull_dim: int
    predicted_krull_dim: int

    @property
    def agrees(self) -> bool:
        return set(self.computed) == set(self.predicted) and self.krull_dim == self.predicted_krull_dim


def bni_case_analysis(max_n: int = 12) -> list[CaseCheck]:
    """Compare every computed Spec(B(n,i)) with the case analysis, for ``2 <= n <= max_n``."""
    out = []
    for n in range(2, max_n + 1):
        for i in range(n):
            spec = spectrum(bni(n, i))
            pred, dim = predicted_spectrum(n, i)
            key = lambda s: (len(s), sorted(s, key=int))
            out.append(CaseCheck(n, i, tuple(sorted(spec.member_sets(), key=key)),
                                 tuple(sorted(pred, key=key)), spec.krull_dim, dim))
    return out


def table_row(n: int, i: int) -> tuple[int, dict[str, Any]]:
    """The published row governing B(n,i) and its expected columns, shape instantiated."""
    if i == 0:
        row, shape = 0, f"P{omega(n)}"
    elif n == 2:
        row, shape = 1, "P1"
    elif i == 1:
        row, shape = (2, "C2") if omega(n - 1) == 1 else (3, f"V{omega(n - 1)}")
    elif i == n - 1:
        row, shape = 4, "C2"
    else:
        row, shape = (5, "C3") if omega(n - i) == 1 else (6, f"D{omega(n - i) + 2}")
    vals = list(list(BNI_ROWS.values())[row][4:])
    return row, dict(zip(BNI_COLUMNS, [shape] + vals))


def bni_table_sweep(max_n: int = 12) -> list[tuple[int, int, int, str, Any, Any]]:
    """Every cell where some B(n,i) with ``n <= max_n`` departs from its published row."""
    out = []
    for n in range(2, max_n + 1):
        for i in range(n):
            row, expected = table_row(n, i)
            computed, _ = space_columns(spectrum(bni(n, i)).space)
            out += [(n, i, row + 1, c, expected[c], computed[c])
                    for c in BNI_COLUMNS if computed[c] != expected[c]]
    return out


def paper_tables() -> tuple[Table, Table]:
    return five_space_table(), bni_table()


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_table(t: Table, info_keys: tuple[str, ...]) -> str:
    header = ("row",) + info_keys + t.columns
    body = []
    for r in t.rows:
        cells = [r.label] + [r.info[k] for k in info_keys]
        for c in t.columns:
            s = _cell(r.computed[c])
            if c in r.mismatches:
                s += f" (published {_cell(r.expected[c])})"
            cells.append(s)
        body.append(cells)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *body)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [t.title, fmt.format(*header).rstrip(), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*b).rstrip() for b in body]
    bad = t.mismatches
    lines.append(f"{t.cells - len(bad)}/{t.cells} cells match")
    for label, col, exp, got, wit in bad:
        lines.append(f"MISMATCH {label} {col}: published {_cell(exp)}, computed {_cell(got)}"
                     f"; witness {fmt_value(wit)}")
    return "\n".join(lines) + "\n"


def render_paper_tables(tables: tuple[Table, Table]) -> str:
    five, bn = tables
    return (render_table(five, ("points", "graph")) + "\n"
            + render_table(bn, ("n", "i", "omega", "Spec")))
