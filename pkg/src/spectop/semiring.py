"""Finite commutative semirings given by operation tables.

Elements are strings; tables store carrier indices. Ideals are ordinary
semiring ideals (closed under addition and under multiplication by any
element) and are handled as bitmasks over the carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Sequence

from .errors import AxiomViolation, BadParameters, InternalInconsistency, SizeLimitExceeded
from .lattice import BoundedLattice, bits, build_poset, lattice_from_poset, popcount
from .topology import FiniteSpace, Verdict, disjoint_union, homeomorphic, krull_dim
from .xtop import XTopContext, generate_space, is_xtop

IDEAL_LIMIT = 16
# ideal lattices of small carriers can still be large
IDEAL_LATTICE_LIMIT = 1024


@dataclass(frozen=True)
class FiniteSemiring:
    carrier: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    def __len__(self):
        return len(self.carrier)

    def index(self, a: str) -> int:
        return self.carrier.index(a)

    def plus(self, a: str, b: str) -> str:
        return self.carrier[self.add[self.index(a)][self.index(b)]]

    def times(self, a: str, b: str) -> str:
        return self.carrier[self.mul[self.index(a)][self.index(b)]]

    @cached_property
    def entire(self) -> Verdict:
        """No nonzero zero divisors (a semidomain)."""
        n, z = len(self), self.zero
        for a in range(n):
            for b in range(n):
                if a != z and b != z and self.mul[a][b] == z:
                    return Verdict(False, (self.carrier[a], self.carrier[b]))
        return Verdict(True)

    @cached_property
    def ring(self) -> Verdict:
        """Every element has an additive inverse."""
        for a in range(len(self)):
            if self.zero not in self.add[a]:
                return Verdict(False, self.carrier[a])
        return Verdict(True)

    @property
    def proper(self) -> bool:
        return not self.ring.holds


def _table(carrier, t, name):
    n = len(carrier)
    pos = {c: k for k, c in enumerate(carrier)}
    if len(t) != n or any(len(row) != n for row in t):
        raise AxiomViolation(f"{name} table is not total", None)
    out = []
    for a, row in enumerate(t):
        r = []
        for b, v in enumerate(row):
            if isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n:
                r.append(v)
            elif v in pos:
                r.append(pos[v])
            else:
                raise AxiomViolation(f"{name} table closed", (carrier[a], carrier[b], v))
        out.append(tuple(r))
    return tuple(out)


def validate_semiring(carrier: Sequence[str], add, mul, zero: str, one: str) -> FiniteSemiring:
    """Check every commutative-semiring axiom exhaustively.

    ``add`` and ``mul`` are square tables whose entries are carrier names or
    carrier indices.
    """
    carrier = tuple(carrier)
    if len(set(carrier)) != len(carrier):
        raise AxiomViolation("carrier elements distinct", carrier)
    A, M = _table(carrier, add, "add"), _table(carrier, mul, "mul")
    if zero not in carrier or one not in carrier:
        raise AxiomViolation("zero and one belong to the carrier", (zero, one))
    z, u = carrier.index(zero), carrier.index(one)
    if z == u:
        raise AxiomViolation("zero != one", (zero, one))
    n = len(carrier)
    E = carrier
    for a in range(n):
        if A[z][a] != a:
            raise AxiomViolation("additive identity", (zero, E[a], E[A[z][a]]))
        if M[u][a] != a:
            raise AxiomViolation("multiplicative identity", (one, E[a], E[M[u][a]]))
        if M[z][a] != z or M[a][z] != z:
            raise AxiomViolation("zero absorbing", (zero, E[a], E[M[a][z]]))
        for b in range(n):
            if A[a][b] != A[b][a]:
                raise AxiomViolation("additive commutativity", (E[a], E[b], None))
            if M[a][b] != M[b][a]:
                raise AxiomViolation("multiplicative commutativity", (E[a], E[b], None))
            for c in range(n):
                if A[A[a][b]][c] != A[a][A[b][c]]:
                    raise AxiomViolation("additive associativity", (E[a], E[b], E[c]))
                if M[M[a][b]][c] != M[a][M[b][c]]:
                    raise AxiomViolation("multiplicative associativity", (E[a], E[b], E[c]))
                if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                    raise AxiomViolation("distributivity", (E[a], E[b], E[c]))
    return FiniteSemiring(carrier, A, M, z, u)


def bni(n: int, i: int) -> FiniteSemiring:
    """The semiring on ``{0, ..., n-1}`` whose overflow wraps into ``[i, n-1]``.

    A sum or product ``v > n-1`` becomes the unique ``u`` in ``[i, n-1]`` with
    ``u = v (mod n-i)``.
    """
    if not (isinstance(n, int) and isinstance(i, int)) or n < 2 or not 0 <= i <= n - 1:
        raise BadParameters(f"need n >= 2 and 0 <= i <= n-1, got n={n}, i={i}", (n, i))

    def wrap(v):
        return v if v <= n - 1 else i + (v - i) % (n - i)

    add = [[wrap(a + b) for b in range(n)] for a in range(n)]
    mul = [[wrap(a * b) for b in range(n)] for a in range(n)]
    R = validate_semiring([str(k) for k in range(n)], add, mul, "0", "1")
    if i == 0:
        zn = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        zm = tuple(tuple(a * b % n for b in range(n)) for a in range(n))
        if R.add != zn or R.mul != zm:
            raise InternalInconsistency("B(n,0) differs from Z_n", n)
    return R


def product(R1: FiniteSemiring, R2: FiniteSemiring, limit: int = IDEAL_LIMIT) -> FiniteSemiring:
    """Componentwise product, checked against the disjoint union of spectra."""
    for R in (R1, R2):
        if len(R) < 2 or R.zero == R.one:
            raise BadParameters("factors must satisfy zero != one", R.carrier)
    n1, n2 = len(R1), len(R2)
    if n1 * n2 > limit:
        raise SizeLimitExceeded(f"product carrier has {n1 * n2} elements, limit is {limit}", n1 * n2)
    pairs = list(cartesian(range(n1), range(n2)))
    pos = {p: k for k, p in enumerate(pairs)}
    carrier = [f"({R1.carrier[a]},{R2.carrier[b]})" for a, b in pairs]

    def table(t1, t2):
        return [[pos[(t1[a][c], t2[b][d])] for c, d in pairs] for a, b in pairs]

    R = validate_semiring(carrier, table(R1.add, R2.add), table(R1.mul, R2.mul),
                          carrier[pos[(R1.zero, R2.zero)]], carrier[pos[(R1.one, R2.one)]])
    union = disjoint_union(spectrum(R1).space, spectrum(R2).space, tags=("1", "2"))
    if not homeomorphic(spectrum(R).space, union).holds:
        raise InternalInconsistency("product spectrum is not the disjoint union of spectra")
    return R


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    members: tuple[str, ...]
    mask: int

    @property
    def name(self) -> str:
        return "{" + ",".join(self.members) + "}"

    def __contains__(self, a):
        return a in self.members

    def __str__(self):
        return self.name


def _ideal(R: FiniteSemiring, mask: int) -> Ideal:
    return Ideal(tuple(R.carrier[i] for i in bits(mask)), mask)


def _multiples(R: FiniteSemiring) -> list[int]:
    return [_mask(R.mul[a]) for a in range(len(R))]


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def ideal_closure(R: FiniteSemiring, mask: int, _mult=None) -> int:
    """Smallest ideal containing the elements of ``mask``."""
    mult = _mult or _multiples(R)
    m = mask | 1 << R.zero
    while True:
        new = m
        for a in bits(m):
            new |= mult[a]
        for a in bits(new):
            for b in bits(new):
                new |= 1 << R.add[a][b]
        if new == m:
            return m
        m = new


def enumerate_ideals(R: FiniteSemiring, limit: int = IDEAL_LIMIT) -> list[Ideal]:
    """All ideals of ``R``, smallest first, ties broken by carrier order."""
    n = len(R)
    if n > limit:
        raise SizeLimitExceeded(f"carrier has {n} elements, limit is {limit}", n)
    mult = _multiples(R)
    start = ideal_closure(R, 0, mult)
    found, frontier = {start}, [start]
    # every ideal is reached from {0} by adding one generator at a time
    while frontier:
        nxt = []
        for m in frontier:
            for a in range(n):
                if not m >> a & 1:
                    j = ideal_closure(R, m | 1 << a, mult)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
        frontier = nxt
    full = (1 << n) - 1
    if full not in found:
        raise InternalInconsistency("the whole carrier is not an ideal")
    ordered = sorted(found, key=lambda m: (popcount(m), tuple(bits(m))))
    ideals = [_ideal(R, m) for m in ordered]
    L = ideal_lattice(ideals)
    for a, I in enumerate(ideals):
        for b, J in enumerate(ideals):
            if ideals[L.meet_table[a][b]].mask != I.mask & J.mask:
                raise InternalInconsistency("ideal meet is not intersection", (I.name, J.name))
            if ideals[L.join_table[a][b]].mask != ideal_closure(R, I.mask | J.mask, mult):
                raise InternalInconsistency("ideal join is not the sum", (I.name, J.name))
    return ideals


def ideal_lattice(ideals: Sequence[Ideal]) -> BoundedLattice:
    """Inclusion lattice on ``ideals`` (smallest first, largest last)."""
    names = [I.name for I in ideals]
    pairs = [(I.name, J.name) for I in ideals for J in ideals
             if I is not J and I.mask & ~J.mask == 0]
    order = build_poset(names, pairs, limit=IDEAL_LATTICE_LIMIT)
    return lattice_from_poset(order, names[0], names[-1])


def _is_prime_elementwise(R: FiniteSemiring, P: int) -> tuple[bool, tuple | None]:
    if P == (1 << len(R)) - 1:
        return False, ("improper",)
    for a in range(len(R)):
        for b in range(a, len(R)):
            if P >> R.mul[a][b] & 1 and not (P >> a & 1 or P >> b & 1):
                return False, (R.carrier[a], R.carrier[b])
    return True, None


def _is_prime_idealwise(R: FiniteSemiring, P: int, ideals: Sequence[Ideal]) -> bool:
    if P == (1 << len(R)) - 1:
        return False
    for I in ideals:
        for J in ideals:
            # IJ is generated by the products ab, so IJ is inside P iff they all are
            inside = all(P >> R.mul[a][b] & 1 for a in bits(I.mask) for b in bits(J.mask))
            if inside and I.mask & ~P and J.mask & ~P:
                return False
    return True


def is_prime(R: FiniteSemiring, I: Ideal, ideals: Sequence[Ideal] | None = None) -> Verdict:
    """Elementwise primeness, cross-checked against the ideal-pair condition."""
    ideals = ideals if ideals is not None else enumerate_ideals(R)
    ok, witness = _is_prime_elementwise(R, I.mask)
    if ok != _is_prime_idealwise(R, I.mask, ideals):
        raise InternalInconsistency("element and ideal prime tests disagree", I.name)
    return Verdict(ok, witness)


@dataclass(frozen=True)
class Spectrum:
    ring: FiniteSemiring
    ideals: tuple[Ideal, ...]
    primes: tuple[Ideal, ...]
    lattice: BoundedLattice
    context: XTopContext
    space: FiniteSpace

    @property
    def krull_dim(self) -> int:
        return krull_dim(self.space)

    @property
    def maximal(self) -> tuple[Ideal, ...]:
        return tuple(P for P in self.primes
                     if not any(Q is not P and P.mask & ~Q.mask == 0 for Q in self.primes))

    @property
    def minimal(self) -> tuple[Ideal, ...]:
        return tuple(P for P in self.primes
                     if not any(Q is not P and Q.mask & ~P.mask == 0 for Q in self.primes))

    def member_sets(self) -> list[frozenset[str]]:
        return [frozenset(P.members) for P in self.primes]


def spectrum(R: FiniteSemiring, limit: int = IDEAL_LIMIT) -> Spectrum:
    """Prime ideals of ``R`` with the Zariski topology.

    The space is generated by the ideal lattice with ``X`` the primes, so its
    closed sets are the ``V(I)``.
    """
    ideals = enumerate_ideals(R, limit)
    primes = tuple(I for I in ideals if is_prime(R, I, ideals).holds)
    L = ideal_lattice(ideals)
    ctx = XTopContext.of(L, [P.name for P in primes])
    check = is_xtop(ctx)
    if not check.holds:
        raise InternalInconsistency("ideal lattice is not X-top over its primes", check.witness)
    return Spectrum(R, tuple(ideals), primes, L, ctx, generate_space(ctx))


# ---------------------------------------------------------------------------
# regularity


@dataclass(frozen=True)
class Regularity:
    von_neumann_regular: Verdict
    pi_regular: Verdict
    reduced: Verdict
    nilradical: tuple[str, ...]


def _powers(R: FiniteSemiring, a: int) -> list[int]:
    """``a, a^2, ..., a^n``; powers of ``a`` cycle within ``n`` steps."""
    out, p = [], a
    for _ in range(len(R)):
        out.append(p)
        p = R.mul[p][a]
    return out


def regularity_predicates(R: FiniteSemiring) -> Regularity:
    n, M, E = len(R), R.mul, R.carrier

    def regular(a):
        return any(M[M[a][b]][a] == a for b in range(n))

    vn = next((a for a in range(n) if not regular(a)), None)
    pi = next((a for a in range(n) if not any(regular(p) for p in _powers(R, a))), None)
    nil = tuple(E[a] for a in range(n) if R.zero in _powers(R, a))
    nonzero_nil = tuple(a for a in nil if a != E[R.zero])
    return Regularity(
        von_neumann_regular=Verdict(vn is None, None if vn is None else E[vn]),
        pi_regular=Verdict(pi is None, None if pi is None else E[pi]),
        reduced=Verdict(not nonzero_nil, nonzero_nil or None),
        nilradical=nil,
    )
