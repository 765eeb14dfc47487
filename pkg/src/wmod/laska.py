"""Minimal Weierstrass equations of elliptic curves over Z (Laska's method).

Only global minimality over Z is handled: the largest u with
u^4 | c4 and u^6 | c6 for which an integral equation with those scaled
c-invariants exists.  Kodaira types and conductors are out of scope.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from .arith import DomainError, factorize


@dataclass(frozen=True)
class WeierstrassEquation:
    """``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6``."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @classmethod
    def from_list(cls, a) -> "WeierstrassEquation":
        if len(a) != 5:
            raise DomainError("expected five coefficients a1,a2,a3,a4,a6")
        return cls(*(int(v) for v in a))

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def discriminant(self) -> int:
        c4, c6 = c_invariants(self)
        num = c4**3 - c6**2
        assert num % 1728 == 0
        return num // 1728


def c_invariants(E: WeierstrassEquation) -> Tuple[int, int]:
    b2 = E.a1**2 + 4 * E.a2
    b4 = E.a1 * E.a3 + 2 * E.a4
    b6 = E.a3**2 + 4 * E.a6
    c4 = b2**2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    return c4, c6


def u_candidates(c4: int, c6: int) -> List[int]:
    """All u > 0 with u^4 | c4 and u^6 | c6, largest first."""
    if c4 == 0 and c6 == 0:
        raise DomainError("singular: c4 = c6 = 0")
    g = math.gcd(c4, c6)
    bounds = {}
    for p, _ in factorize(g).factors.items():
        k4 = _val(c4, p) // 4 if c4 else None
        k6 = _val(c6, p) // 6 if c6 else None
        k = min(v for v in (k4, k6) if v is not None)
        if k:
            bounds[p] = k
    us = [1]
    for p, k in bounds.items():
        us = [u * p**j for u in us for j in range(k + 1)]
    return sorted(us, reverse=True)


def _val(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _solve_tail(a1: int, a2: int, a3: int, xu: int, yu: int) -> Optional[Tuple[int, int]]:
    # invert the c4/c6 formulas for a4, a6; None when not integral
    b2 = a1 * a1 + 4 * a2
    b4 = Fraction(b2 * b2 - xu, 24)
    a4 = (b4 - a1 * a3) / 2
    b6 = Fraction(-(b2**3) + 36 * b2 * b4 - yu, 216)
    a6 = (b6 - a3 * a3) / 4
    if a4.denominator != 1 or a6.denominator != 1:
        return None
    return int(a4), int(a6)


@dataclass(frozen=True)
class LaskaReduction:
    """Reduced equation and the change of variables ``x = u^2 x' + r``, ``y = u^3 y' + u^2 s x' + t``."""

    equation: WeierstrassEquation
    u: int
    r: int
    s: int
    t: int


def _shift(E: WeierstrassEquation, u: int, a1p: int, a2p: int, a3p: int) -> Optional[Tuple[int, int, int]]:
    s = Fraction(u * a1p - E.a1, 2)
    r = Fraction(u * u * a2p - E.a2 + s * E.a1 + s * s, 3)
    t = Fraction(u**3 * a3p - E.a3 - r * E.a1, 2)
    if any(v.denominator != 1 for v in (r, s, t)):
        return None
    return int(r), int(s), int(t)


def laska_reduce(E: WeierstrassEquation) -> LaskaReduction:
    """Minimal model with a1, a3 in {0, 1} and a2 in {-1, 0, 1}."""
    c4, c6 = c_invariants(E)
    if c4**3 == c6**2:
        raise DomainError("singular cubic: discriminant is zero")
    for u in u_candidates(c4, c6):
        xu, yu = c4 // u**4, c6 // u**6
        for a1p, a2p, a3p in product((0, 1), (-1, 0, 1), (0, 1)):
            if (a1p**4 - xu) % 8 or (a2p**3 + a1p**6 + yu) % 3:
                continue
            tail = _solve_tail(a1p, a2p, a3p, xu, yu)
            if tail is None:
                continue
            rst = _shift(E, u, a1p, a2p, a3p)
            if rst is None:
                continue
            out = WeierstrassEquation(a1p, a2p, a3p, *tail)
            return LaskaReduction(out, u, *rst)
    raise AssertionError("u = 1 always admits a reduced equation")
