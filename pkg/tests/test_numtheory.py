import math

import pytest
from hypothesis import given, strategies as st

from endvertex.numtheory import factorize, gcd, is_prime, lcm, max_phi_inverse, phi, prime_power_base, rad
from oracles import phi_bruteforce, phi_sieve, rad_bruteforce

SIEVE = phi_sieve(10_000)  # covers the k <= 64 scan range 2k^2 + 1


@pytest.mark.parametrize("a, b, want", [(6, 35, 1), (1, 17, 1), (12, 18, 6), (18, 12, 6)])
def test_gcd_examples(a, b, want):
    assert gcd(a, b) == want


def test_gcd_rejects_zero():
    with pytest.raises(ValueError):
        gcd(0, 4)


@pytest.mark.parametrize("n, want", [(1, 1), (10, 4), (30, 8), (7, 6), (12, 4)])
def test_phi_examples(n, want):
    assert phi(n) == want


@pytest.mark.parametrize("n, want", [(1, 1), (12, 6), (7, 7), (72, 6), (240, 30)])
def test_rad_examples(n, want):
    assert rad(n) == want


@pytest.mark.parametrize("k, want", [(2, 6), (4, 12), (10, 30), (1, 2), (8, 30)])
def test_max_phi_inverse_examples(k, want):
    assert max_phi_inverse(k) == want


def test_sieve_oracle_agrees_with_gcd_count():
    assert SIEVE[1:501] == [phi_bruteforce(n) for n in range(1, 501)]


def test_phi_and_rad_match_bruteforce():
    for n in range(1, 10_001):
        assert phi(n) == SIEVE[n], n
    for n in range(1, 400):
        assert rad(n) == rad_bruteforce(n), n


def test_rad_divides_and_is_idempotent():
    for n in range(1, 10_001):
        r = rad(n)
        assert n % r == 0 and rad(r) == r


@pytest.mark.parametrize("k", range(1, 65))
def test_max_phi_inverse_scan_oracle(k):
    M = max_phi_inverse(k)
    assert phi(M) <= k
    assert all(SIEVE[m] > k for m in range(M + 1, 2 * k * k + 2))


@given(st.integers(1, 1000), st.integers(1, 1000))
def test_multiplicativity(a, b):
    if math.gcd(a, b) != 1:
        return
    assert phi(a * b) == phi(a) * phi(b)
    assert rad(a * b) == rad(a) * rad(b)


@given(st.integers(1, 10**6))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f) == n
    assert all(is_prime(p) for p, _ in f)
    assert [p for p, _ in f] == sorted({p for p, _ in f})


@given(st.integers(1, 500), st.integers(1, 500))
def test_gcd_lcm_product(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b


@pytest.mark.parametrize("n, want", [(1, None), (2, 2), (8, 2), (9, 3), (12, None), (49, 7)])
def test_prime_power_base(n, want):
    assert prime_power_base(n) == want


@pytest.mark.parametrize("bad", [0, -3])
def test_domain_errors(bad):
    with pytest.raises(ValueError):
        phi(bad)
    with pytest.raises(ValueError):
        max_phi_inverse(bad)
