"""Lattice generators shared by the property and acceptance suites."""

from __future__ import annotations

import itertools
import random

from spectop.errors import NotALattice
from spectop.lattice import BoundedLattice, build_poset, lattice_from_poset


def small_lattices(max_size: int = 5):
    """Every labelled bounded lattice with 2..max_size elements (bottom '0', top '1')."""
    for m in range(0, max_size - 1):
        middle = [f"a{k}" for k in range(m)]
        slots = [(i, j) for i in range(m) for j in range(m) if i != j]
        for chosen in itertools.product((False, True), repeat=len(slots)):
            rel = {s for s, c in zip(slots, chosen) if c}
            if any((j, i) in rel for i, j in rel):
                continue
            if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
                continue
            pairs = [("0", e) for e in middle] + [(e, "1") for e in middle]
            pairs += [(middle[i], middle[j]) for i, j in rel]
            if not middle:
                pairs = [("0", "1")]
            try:
                yield lattice_from_poset(build_poset(["0", *middle, "1"], pairs), "0", "1")
            except NotALattice:
                continue


def moore_lattice(rng: random.Random, ground: int, generators: int) -> BoundedLattice:
    """The intersection closure of random subsets of a ground set, ordered by inclusion."""
    full = (1 << ground) - 1
    family = {full}
    family.update(rng.randrange(full + 1) for _ in range(generators))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(family), 2):
            if a & b not in family:
                family.add(a & b)
                changed = True
    sets = sorted(family, key=lambda s: (bin(s).count("1"), s))
    names = [f"e{k}" for k in range(len(sets))]
    pairs = [(names[i], names[j]) for i in range(len(sets)) for j in range(len(sets))
             if i != j and sets[i] & sets[j] == sets[i]]
    return lattice_from_poset(build_poset(names, pairs), names[0], names[-1])


def random_lattices(rng: random.Random, count: int, max_size: int = 8):
    """``count`` random bounded lattices with 2..max_size elements."""
    made = 0
    while made < count:
        L = moore_lattice(rng, rng.randint(1, 6), rng.randint(1, 6))
        if 2 <= len(L) <= max_size:
            made += 1
            yield L


def random_x(rng: random.Random, L: BoundedLattice) -> tuple[str, ...]:
    pool = [e for e in L.elements if e != L.top]
    return tuple(rng.sample(pool, rng.randint(1, len(pool))))


def nonempty_subsets(items):
    for r in range(1, len(items) + 1):
        yield from itertools.combinations(items, r)
