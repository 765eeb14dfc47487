"""Independent reference computations used only by the tests.

None of these share code with the package: Igusa-Clebsch invariants come
from high-precision numerical roots, factorizations from plain trial
division, weighted gcds from exhaustive search.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath as mp

BASE_SEXTIC = (107, 1470, 8382, 25056, 40176, 31104, 7776)  # a_0 .. a_6
REDUCED_SEXTIC = (642, 1470, 1397, 696, 186, 24, 1)

BASE_POINT = (
    2**15 * 3**5,
    -(2**12) * 3**9 * 101 * 233,
    2**16 * 3**13 * 29 * 37 * 8837,
    2**26 * 3**21 * 11 * 23 * 547 * 1445831,
)
REDUCED_POINT = (
    2**11 * 3,
    -(2**4) * 3 * 101 * 233,
    2**4 * 3 * 29 * 37 * 8837,
    2**6 * 3 * 11 * 23 * 547 * 1445831,
)
ABS_TWIST_POINT = (
    2**10 * 3,
    -(2**2) * 3 * 101 * 233,
    2 * 3 * 29 * 37 * 8837,
    2 * 3 * 11 * 23 * 547 * 1445831,
)


def trial_factor(n: int) -> dict:
    n = abs(n)
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _pairings(items):
    if not items:
        yield []
        return
    a = items[0]
    for b in items[1:]:
        rest = [x for x in items if x not in (a, b)]
        for p in _pairings(rest):
            yield [(a, b)] + p


def _roots(coeffs, dps):
    # coeffs a_0..a_d, leading a_d must be nonzero
    return mp.polyroots([mp.mpf(c) for c in reversed(coeffs)], maxsteps=800, extraprec=4 * dps)


def igusa_clebsch_by_roots(coeffs, dps=80):
    """(I2, I4, I6, I10) from numerical roots, rounded to the nearest integer."""
    with mp.workdps(dps):
        a6 = mp.mpf(coeffs[6])
        r = _roots(coeffs, dps)
        D = lambda i, j: (r[i] - r[j]) ** 2  # noqa: E731
        idx = list(range(6))
        i2 = sum(D(*p[0]) * D(*p[1]) * D(*p[2]) for p in _pairings(idx))
        i4 = 0
        i6 = 0
        for T in itertools.combinations(idx, 3):
            if 0 not in T:
                continue
            U = [x for x in idx if x not in T]
            core = D(T[0], T[1]) * D(T[1], T[2]) * D(T[2], T[0]) * D(U[0], U[1]) * D(U[1], U[2]) * D(U[2], U[0])
            i4 += core
            for perm in itertools.permutations(U):
                i6 += core * D(T[0], perm[0]) * D(T[1], perm[1]) * D(T[2], perm[2])
        i10 = mp.mpf(1)
        for i, j in itertools.combinations(idx, 2):
            i10 *= D(i, j)
        vals = (a6**2 * i2, a6**4 * i4, a6**6 * i6, a6**10 * i10)
        return tuple(int(mp.nint(mp.re(v))) for v in vals)


def discriminant_by_roots(coeffs, dps=60):
    d = len(coeffs) - 1
    with mp.workdps(dps):
        r = _roots(coeffs, dps)
        v = mp.mpf(coeffs[-1]) ** (2 * d - 2)
        for i, j in itertools.combinations(range(d), 2):
            v *= (r[i] - r[j]) ** 2
        return int(mp.nint(mp.re(v)))


def brute_wgcd(xs, ws) -> int:
    """Largest integer d with d^q | x for every nonzero coordinate."""
    nz = [(x, q) for x, q in zip(xs, ws) if x]
    bound = min(math.isqrt(abs(x)) + 2 if q >= 2 else abs(x) + 1 for x, q in nz)
    best = 1
    for d in range(1, bound + 1):
        if all(x % d**q == 0 for x, q in nz):
            best = d
    return best


def brute_prime_exponent(xs, ws, p: int, step: Fraction) -> Fraction:
    """Largest e in step*Z with p^(e q) an integer dividing every coordinate."""
    best = Fraction(0)
    k = 1
    while True:
        e = k * step
        ok = True
        for x, q in zip(xs, ws):
            if x == 0:
                continue
            eq = e * q
            if eq.denominator != 1 or x % p ** int(eq):
                ok = False
                break
        if not ok:
            return best
        best = e
        k += 1


def exact_root_max_index(xs, ws) -> int:
    """Argmax of |x_i|^(1/q_i) by pairwise cross-power comparison."""
    best = 0
    for i in range(1, len(xs)):
        if abs(xs[i]) ** ws[best] > abs(xs[best]) ** ws[i]:
            best = i
    return best
