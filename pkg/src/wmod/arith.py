"""Integer factorization and p-adic valuations.

Everything here works on Python ints, so there is no size limit other than
the running time of Pollard rho on the cofactor left after trial division.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Dict


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


@total_ordering
class _Infinity:
    """Valuation of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("wmod.INF")

    def __repr__(self):
        return "INF"


INF = _Infinity()

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
_TRIAL_BOUND = 10_000


def is_prime(n: int) -> bool:
    """Strong-pseudoprime test with the first 20 primes as bases.

    The answer is proven correct for n < 3.3 * 10**24; above that no
    counterexample to this base set is known.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    # n is odd, composite and not a perfect power of a small prime
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: Dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _brent(m, rng)
        stack.extend((d, m // d))


@dataclass(frozen=True)
class PrimeFactorization:
    unit: int
    factors: Dict[int, int] = field(default_factory=dict)

    def value(self) -> int:
        n = self.unit
        for p, e in self.factors.items():
            n *= p**e
        return n

    def primes(self):
        return list(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return str(self.unit)
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors.items())
        return f"-{body}" if self.unit < 0 else body


def factorize(n: int) -> PrimeFactorization:
    """Factor a nonzero integer; primes are listed in increasing order."""
    n = int(n)
    if n == 0:
        raise DomainError("zero has no factorization")
    unit = 1 if n > 0 else -1
    n = abs(n)
    found: Dict[int, int] = {}
    p = 2
    while p <= _TRIAL_BOUND and p * p <= n:
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        # fixed seed keeps the output (and running time) reproducible
        _split(n, found, random.Random(n))
    return PrimeFactorization(unit, dict(sorted(found.items())))


def valuation(n: int, p: int):
    """Exponent of the prime ``p`` in ``n``; ``INF`` when ``n == 0``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    n = int(n)
    if n == 0:
        return INF
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def rational_valuation(x, p: int):
    """Valuation of a rational number (numerator minus denominator)."""
    if x == 0:
        return INF
    return valuation(x.numerator, p) - valuation(x.denominator, p)
