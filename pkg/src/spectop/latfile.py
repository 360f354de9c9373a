"""The line-oriented ``.lat`` lattice format.

::

    # comment
    elements: 0 a b 1
    leq: 0<a 0<b a<1 b<1
    bottom: 0
    top: 1
    x: a b

``elements``, ``bottom`` and ``top`` are required; ``leq`` may repeat and
``x`` is optional. Declaration order is the canonical element order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, SemanticError, SpectopError
from .lattice import BoundedLattice, build_poset, lattice_from_poset

_NAME = re.compile(r"[A-Za-z0-9_]+")
_KEYS = ("elements", "leq", "bottom", "top", "x")


@dataclass(frozen=True)
class LatticeFile:
    lattice: BoundedLattice
    x: tuple[str, ...] | None


def _tokens(text: str, start: int):
    for m in re.finditer(r"\S+", text):
        yield m.group(), start + m.start() + 1


def parse_lattice(text: str) -> LatticeFile:
    fields: dict[str, list[tuple[str, int, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        k = key.strip()
        if not sep:
            raise ParseError("expected 'key: value'", lineno, len(line) - len(line.lstrip()) + 1)
        if k not in _KEYS:
            raise ParseError(f"unknown key {k!r}", lineno, line.index(k) + 1 if k else 1)
        if k in fields and k != "leq":
            raise ParseError(f"key {k!r} given twice", lineno, line.index(k) + 1)
        fields.setdefault(k, []).extend((tok, lineno, col)
                                        for tok, col in _tokens(rest, len(key) + 1))
    for k in ("elements", "bottom", "top"):
        if k not in fields:
            raise SemanticError(f"missing required key {k!r}")

    def name(tok, line, col):
        if not _NAME.fullmatch(tok):
            raise ParseError(f"invalid element name {tok!r}", line, col)
        return tok

    elements = [name(*t) for t in fields["elements"]]
    seen = set()
    for (tok, line, col) in fields["elements"]:
        if tok in seen:
            raise SemanticError(f"duplicate element {tok!r} at {line}:{col}", tok)
        seen.add(tok)

    def known(tok, line, col):
        name(tok, line, col)
        if tok not in seen:
            raise SemanticError(f"element {tok!r} at {line}:{col} is not declared", tok)
        return tok

    pairs = []
    for tok, line, col in fields.get("leq", []):
        a, sep, b = tok.partition("<")
        if not sep or not a or not b or "<" in b:
            raise ParseError(f"expected 'a<b', got {tok!r}", line, col)
        pairs.append((known(a, line, col), known(b, line, col + len(a) + 1)))
    single = {}
    for k in ("bottom", "top"):
        if len(fields[k]) != 1:
            line = fields[k][1][1] if fields[k] else 0
            raise ParseError(f"{k!r} takes exactly one element", line, 1)
        single[k] = known(*fields[k][0])
    x = tuple(known(*t) for t in fields["x"]) if "x" in fields else None
    try:
        L = lattice_from_poset(build_poset(elements, pairs), single["bottom"], single["top"])
    except SpectopError as e:
        raise SemanticError(str(e), e.witness) from e
    return LatticeFile(L, x)


def load_lattice(path: str | Path) -> LatticeFile:
    return parse_lattice(Path(path).read_text())


def format_lattice(L: BoundedLattice, x=None) -> str:
    """Render ``L`` (and optionally ``X``) in the ``.lat`` format, Hasse edges only."""
    lines = [
        "elements: " + " ".join(L.elements),
        "leq: " + " ".join(f"{a}<{b}" for a, b in L.order.covers()),
        f"bottom: {L.bottom}",
        f"top: {L.top}",
    ]
    if x is not None:
        lines.append("x: " + " ".join(x))
    return "\n".join(lines) + "\n"
