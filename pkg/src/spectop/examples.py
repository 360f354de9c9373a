"""Built-in lattices and the named subsets studied on them."""

from __future__ import annotations

from importlib import resources

from .errors import UnknownElement
from .latfile import LatticeFile, parse_lattice
from .xtop import XTopContext

# name -> (fixture, X)
BUILTINS: dict[str, tuple[str, tuple[str, ...]]] = {
    "X": ("fig_LN.lat", ("0", "x", "y", "w")),
    "Y": ("fig_LN.lat", ("x", "y", "w")),
    "Q": ("fig_LN.lat", ("0", "x", "y")),
    "H": ("fig_LN.lat", ("x", "y")),
    "G": ("fig_LN.lat", ("x", "w")),
    "N5a": ("n5.lat", ("0", "y", "x")),
    "N5b": ("n5.lat", ("y", "x")),
    "notpm": ("not_pm.lat", ("x", "u", "y", "v")),
    "sd": ("strongly_disjoint.lat", ("x", "u", "y", "v")),
}


def fixture_text(filename: str) -> str:
    return resources.files(__package__).joinpath("data", filename).read_text()


def fixture(filename: str) -> LatticeFile:
    return parse_lattice(fixture_text(filename))


def builtin(name: str) -> XTopContext:
    if name not in BUILTINS:
        raise UnknownElement(f"unknown example {name!r}; choose from {', '.join(BUILTINS)}", name)
    filename, x = BUILTINS[name]
    return XTopContext.of(fixture(filename).lattice, x)
