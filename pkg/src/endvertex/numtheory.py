"""Integer helpers: gcd, Euler phi, radical and the largest M with phi(M) <= k."""
from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "gcd",
    "lcm",
    "factorize",
    "phi",
    "rad",
    "max_phi_inverse",
    "prime_power_base",
    "is_prime",
]


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def gcd(a: int, b: int) -> int:
    _check_positive(a)
    _check_positive(b)
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with increasing p.

    Trial division; arguments here never exceed a few million.
    """
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def rad(n: int) -> int:
    """Product of the distinct primes dividing n; rad(1) == 1."""
    return math.prod(p for p, _ in factorize(n))


def prime_power_base(n: int) -> int | None:
    """Return p if n = p**k with k >= 1, else None (so 1 maps to None)."""
    f = factorize(n)
    return f[0][0] if len(f) == 1 else None


def max_phi_inverse(k: int) -> int:
    """Largest M with phi(M) <= k.

    Since phi(m) >= sqrt(m/2), any m with phi(m) <= k satisfies m <= 2k**2,
    so scanning up to 2k**2 + 1 is exhaustive.
    """
    _check_positive(k)
    best = 1
    for m in range(1, 2 * k * k + 2):
        if phi(m) <= k:
            best = m
    return best
