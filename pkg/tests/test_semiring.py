import pytest

from spectop.errors import AxiomViolation, BadParameters, SizeLimitExceeded
from spectop.semiring import bni, enumerate_ideals, is_prime, product, regularity_predicates, \
    spectrum, validate_semiring
from spectop.topology import separation_report


def test_bni_arithmetic():
    R = bni(6, 3)
    assert R.plus("4", "5") == "3"
    assert R.times("2", "2") == "4"
    assert bni(3, 1).times("2", "2") == "2"


def test_bni_zero_is_zn():
    R = bni(5, 0)
    assert R.ring.holds and R.entire.holds
    assert not bni(6, 0).entire.holds
    assert bni(6, 3).entire.holds


def test_bad_parameters():
    for n, i in ((1, 0), (4, 4), (4, -1)):
        with pytest.raises(BadParameters):
            bni(n, i)


def test_validate_semiring_rejects():
    add = [[0, 1], [1, 1]]
    mul = [[0, 0], [0, 0]]  # 1 is not a multiplicative identity
    with pytest.raises(AxiomViolation):
        validate_semiring(["0", "1"], add, mul, "0", "1")


def test_ideals_and_primes():
    R = bni(6, 3)
    ideals = enumerate_ideals(R)
    names = {I.name for I in ideals}
    assert "{0}" in names and "{0,3}" in names
    primes = [I.name for I in ideals if is_prime(R, I, ideals).holds]
    assert primes == ["{0}", "{0,3}", "{0,2,3,4,5}"]


def test_spectrum_dimensions():
    assert spectrum(bni(3, 1)).krull_dim == 1
    assert spectrum(bni(6, 3)).krull_dim == 2
    assert spectrum(bni(12, 0)).krull_dim == 0


def test_regularity():
    r = regularity_predicates(bni(4, 0))
    assert not r.reduced.holds and r.pi_regular.holds
    assert set(r.nilradical) == {"0", "2"}
    r = regularity_predicates(bni(3, 1))
    assert r.reduced.holds and r.von_neumann_regular.holds


def test_boolean_product():
    S = spectrum(product(bni(2, 1), bni(2, 1))).space
    assert separation_report(S).t_level == "T6" and len(S) == 2


def test_product_limits():
    with pytest.raises(SizeLimitExceeded):
        product(bni(5, 1), bni(5, 1))


def test_b63_t_level_is_t0():
    # the 3-chain is not T1/4: the closure of {0,3} contains more than its own points
    assert separation_report(spectrum(bni(6, 3)).space).t_level == "T0"
