import pytest

from spectop.errors import EmptySubset, InvalidContext, NotSubsetOfX, NotXTop
from spectop.examples import builtin
from spectop.lattice import lattice
from spectop.xtop import XTopContext, complement_variety, cx_set, generate_space, \
    is_strongly_irreducible, is_xtop, radical, strongly_disjoint, subspace, variety

from helpers import nonempty_subsets, small_lattices


def diamond():
    return lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], "0", "1")


def test_varieties_complement():
    ctx = builtin("X")
    for a in ctx.lattice.elements:
        assert variety(ctx, a) | complement_variety(ctx, a) == set(ctx.x_set)
        assert not variety(ctx, a) & complement_variety(ctx, a)


def test_bottom_not_irreducible_in_diamond():
    ctx = XTopContext.of(diamond(), ["0", "a", "b"])
    v = is_xtop(ctx)
    assert not v.holds
    assert v.witness["not_strongly_irreducible"] == "0"
    with pytest.raises(NotXTop):
        generate_space(ctx)


def test_xtop_routes_agree_everywhere():
    # is_xtop raises if the two routes disagree
    for L in small_lattices(5):
        pool = [e for e in L.elements if e != L.top]
        for X in nonempty_subsets(pool):
            is_xtop(XTopContext.of(L, X))


def test_cx_and_radical():
    ctx = builtin("N5b")
    assert cx_set(ctx) == {"y", "x"}
    assert radical(ctx, "0") == "y"


def test_strong_irreducibility_witness():
    ctx = XTopContext.of(diamond(), ["a", "b"])
    v = is_strongly_irreducible(ctx, "0", ["a", "b"])
    assert not v.holds and set(v.witness["subset"]) == {"a", "b"}


def test_context_validation():
    L = diamond()
    with pytest.raises(InvalidContext):
        XTopContext.of(L, [])
    with pytest.raises(InvalidContext):
        XTopContext.of(L, ["1"])
    ctx = XTopContext.of(L, ["a", "b"])
    with pytest.raises(EmptySubset):
        subspace(ctx, [])
    with pytest.raises(NotSubsetOfX):
        subspace(ctx, ["0"])
    with pytest.raises(NotSubsetOfX):
        strongly_disjoint(ctx, ["0"], ["a"])


def test_subspace_topology_matches():
    ctx = builtin("X")
    sub = subspace(ctx, ["x", "y"])
    assert len(generate_space(sub).closed) == 4


def test_strongly_disjoint():
    ctx = builtin("sd")
    assert strongly_disjoint(ctx, ["u", "x"], ["v", "y"]).holds
    assert not strongly_disjoint(builtin("notpm"), ["u", "x"], ["v", "y"]).holds
