"""Deterministic integer arithmetic helpers.

Factorization is exact and reproducible: trial division by 2, 3 and the 6k±1
wheel, with a deterministic Pollard rho fallback for stubborn cofactors.  All
inputs at desk scale (≤ 10**12) stay inside trial division.
"""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for 64-bit range and beyond at these scales
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            # n = 37 reaches this point; a base ≡ 0 would wrongly flag it composite
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # deterministic increment sweep; n is odd, composite, not a prime power issue here
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"factorization failed for {n}")


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n ≥ 1 as ((p, e), ...) with p ascending."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f < 1_000_000:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    # cofactor beyond the wheel limit
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return tuple(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of n ≥ 1, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def radical_int(n: int) -> int:
    """Product of the distinct primes dividing n (1 for n = 1)."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def is_prime_power(n: int) -> bool:
    f = factorize(n) if n > 1 else ()
    return len(f) == 1


def prime_part(n: int, primes) -> int:
    """Largest divisor of n composed only of the given primes."""
    u = 1
    for p, e in factorize(n):
        if p in primes:
            u *= p**e
    return u
