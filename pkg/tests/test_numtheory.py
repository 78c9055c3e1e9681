import random
from math import prod

import pytest
from hypothesis import given, strategies as st

import oracles
from moebius import numtheory as nt
from moebius.errors import DomainError, MissingDivisorError


@pytest.mark.parametrize("n, factors", [
    (1, ()),
    (12, ((2, 2), (3, 1))),
    (360, ((2, 3), (3, 2), (5, 1))),
    (2**20, ((2, 20),)),
    (1000000007, ((1000000007, 1),)),
])
def test_factorize_examples(n, factors):
    assert nt.factorize(n).factors == factors


def test_factorize_360_product():
    assert 8 * 9 * 5 == 360


@pytest.mark.parametrize("bad", [0, -3])
def test_domain_errors(bad):
    for fn in (nt.factorize, nt.moebius, nt.divisors, nt.euler_phi):
        with pytest.raises(DomainError):
            fn(bad)


def test_factorize_rejects_huge():
    with pytest.raises(DomainError):
        nt.factorize(2**63)


def test_factorize_large_semiprime():
    n = 999983 * 1000003
    assert nt.factorize(n).factors == ((999983, 1), (1000003, 1))


def test_factorization_invariants():
    for n in range(1, 10**4 + 1):
        f = nt.factorize(n)
        assert f.value() == n
        primes = f.primes
        assert list(primes) == sorted(set(primes))
        assert all(e >= 1 and oracles.mu(p) == -1 for p, e in f.factors)
        assert (n == 1) == (f.factors == ())


@pytest.mark.parametrize("n, mu", [(1, 1), (4, 0), (6, 1), (30, -1), (2, -1)])
def test_moebius(n, mu):
    assert nt.moebius(n) == mu


def test_moebius_matches_oracle():
    assert [nt.moebius(n) for n in range(1, 500)] == [oracles.mu(n) for n in range(1, 500)]


@given(st.integers(1, 1000), st.integers(1, 1000))
def test_moebius_multiplicative(a, b):
    if nt.factorize(a).primes and set(nt.factorize(a).primes) & set(nt.factorize(b).primes):
        return
    assert nt.moebius(a * b) == nt.moebius(a) * nt.moebius(b)


def test_moebius_divisor_sum():
    assert sum(nt.moebius(d) for d in nt.divisors(1)) == 1
    for n in range(2, 2001):
        assert sum(nt.moebius(d) for d in nt.divisors(n)) == 0


@pytest.mark.parametrize("n, divs", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (17, [1, 17])])
def test_divisors(n, divs):
    assert nt.divisors(n) == divs


def test_divisors_match_oracle():
    for n in range(1, 400):
        assert nt.divisors(n) == oracles.divisors(n)


@pytest.mark.parametrize("n, phi", [(1, 1), (9, 6), (12, 4)])
def test_euler_phi(n, phi):
    assert nt.euler_phi(n) == phi


def test_euler_phi_matches_gcd_count():
    for n in range(1, 600):
        assert nt.euler_phi(n) == oracles.phi(n)


def test_phi_multiplicative_over_prime_powers():
    for n in range(1, 2001):
        assert nt.euler_phi(n) == prod(nt.euler_phi(p**e) for p, e in nt.factorize(n).factors)


def test_gauss_identity():
    assert all(nt.gauss_identity_check(n) for n in range(1, 2001))
    assert nt.gauss_identity_check(97)


def test_mobius_invert_examples():
    assert nt.mobius_invert({1: 5}, 1) == 5
    assert nt.mobius_invert({1: 2, 2: 4, 4: 16}, 4) == 12
    assert nt.mobius_invert({d: d for d in (1, 2, 3, 6)}, 6) == 2


def test_mobius_invert_missing_divisor():
    with pytest.raises(MissingDivisorError) as info:
        nt.mobius_invert({1: 1, 2: 1}, 4)
    assert info.value.divisor == 4


def test_mobius_invert_roundtrip():
    rng = random.Random(7)
    for n in range(1, 201):
        f = {d: rng.randint(-10**30, 10**30) for d in nt.divisors(n)}
        g = {m: sum(f[d] for d in nt.divisors(m)) for m in nt.divisors(n)}
        assert nt.mobius_invert(g, n) == f[n]
