"""Binary forms with exact rational coefficients.

A form of degree d is stored as ``(a_0, ..., a_d)`` where ``a_j`` is the
coefficient of ``x^j y^(d-j)``.  Univariate input ``f(x)`` therefore maps
directly onto the coefficient list of the homogenization.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .arith import DomainError

Coeffs = Tuple[Fraction, ...]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floating-point coefficients are not accepted")
    return Fraction(v)


# -- raw coefficient-vector helpers (also used for covariants, which may vanish)

def poly_mul(f: Sequence, g: Sequence) -> list:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return out


def poly_pow(f: Sequence, k: int) -> list:
    out = [Fraction(1)]
    for _ in range(k):
        out = poly_mul(out, f)
    return out


def d_dx(f: Sequence) -> list:
    return [j * f[j] for j in range(1, len(f))]


def d_dy(f: Sequence) -> list:
    d = len(f) - 1
    return [(d - j) * f[j] for j in range(d)]


def substitute(coeffs: Sequence, a, b, c, d) -> list:
    """Coefficients of ``f(a x + b y, c x + d y)``."""
    deg = len(coeffs) - 1
    lin_x = [Fraction(b), Fraction(a)]  # a x + b y, index = power of x
    lin_y = [Fraction(d), Fraction(c)]
    xs = [poly_pow(lin_x, j) for j in range(deg + 1)]
    ys = [poly_pow(lin_y, j) for j in range(deg + 1)]
    out = [Fraction(0)] * (deg + 1)
    for j, aj in enumerate(coeffs):
        if aj:
            term = poly_mul(xs[j], ys[deg - j])
            for k, t in enumerate(term):
                out[k] += aj * t
    return out


@dataclass(frozen=True)
class BinaryForm:
    coeffs: Coeffs

    def __init__(self, coeffs: Sequence):
        cs = tuple(_frac(c) for c in coeffs)
        if len(cs) < 2:
            raise DomainError("a binary form needs degree >= 1")
        if not any(cs):
            raise DomainError("zero form")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_ints(cls, *coeffs) -> "BinaryForm":
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> Tuple[int, ...]:
        if not self.is_integral:
            raise DomainError("form has non-integral coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def scale(self, c) -> "BinaryForm":
        c = _frac(c)
        return BinaryForm([c * a for a in self.coeffs])

    def __call__(self, x, y=1):
        return sum(a * Fraction(x) ** j * Fraction(y) ** (self.degree - j) for j, a in enumerate(self.coeffs))

    def render(self) -> str:
        d = self.degree
        parts = []
        for j in range(d, -1, -1):
            a = self.coeffs[j]
            if not a:
                continue
            mono = []
            if j:
                mono.append("x" if j == 1 else f"x^{j}")
            if d - j:
                mono.append("y" if d - j == 1 else f"y^{d - j}")
            mag = abs(a)
            if mono and mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([str(mag)] + mono)
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Gl2Transform:
    """``f -> scalar * f(a x + b y, c x + d y)``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    scalar: Fraction = Fraction(1)

    def __init__(self, a, b, c, d, scalar=1):
        vals = [_frac(v) for v in (a, b, c, d, scalar)]
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)
        object.__setattr__(self, "scalar", vals[4])
        if self.det == 0:
            raise DomainError("singular matrix")
        if self.scalar == 0:
            raise DomainError("zero scalar")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @classmethod
    def diag(cls, u, v, scalar=1) -> "Gl2Transform":
        return cls(u, 0, 0, v, scalar)

    def then(self, other: "Gl2Transform") -> "Gl2Transform":
        """Transform equal to applying ``self`` first and ``other`` second.

        ``(f^M)^N(x, y) = f(M N (x, y))``, so the matrices multiply as M N.
        """
        return Gl2Transform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.scalar * other.scalar,
        )


IDENTITY = Gl2Transform(1, 0, 0, 1)


def transform(f: BinaryForm, t: Gl2Transform) -> BinaryForm:
    out = substitute(f.coeffs, t.a, t.b, t.c, t.d)
    return BinaryForm([t.scalar * c for c in out])


def content_and_primitive(f: BinaryForm) -> Tuple[int, int, BinaryForm]:
    """Return ``(content, unit, primitive)`` with ``f == unit * content * primitive``.

    The primitive part has a positive leading coefficient (highest power
    of x with a nonzero coefficient).
    """
    cs = f.int_coeffs()
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    lead = next(c for c in reversed(cs) if c)
    unit = 1 if lead > 0 else -1
    return g, unit, BinaryForm([unit * c // g for c in cs])


def _det(rows) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            if m[r][col]:
                k = m[r][col] / p
                for cc in range(col, n):
                    m[r][cc] -= k * m[col][cc]
    return det


def resultant(f: Sequence, g: Sequence) -> Fraction:
    """Resultant of two binary forms given as coefficient vectors.

    Degrees are the formal degrees ``len - 1``, so a vanishing leading
    coefficient is treated as a root at infinity rather than a degree drop.
    """
    m, n = len(f) - 1, len(g) - 1
    fd, gd = list(reversed(f)), list(reversed(g))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return _det(rows)


def discriminant(f: BinaryForm) -> Fraction:
    """Discriminant, normalized so that ``ax^2 + bxy + cy^2`` gives ``b^2 - 4ac``.

    Computed as ``(-1)^(d(d-1)/2) Res(f_x, f_y) / d^(d-2)``, which equals
    ``a_d^(2d-2) prod_{i<j} (r_i - r_j)^2`` for the roots of f(x, 1).
    """
    d = f.degree
    if d < 2:
        raise DomainError("discriminant needs degree >= 2")
    res = resultant(d_dx(f.coeffs), d_dy(f.coeffs))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / Fraction(d) ** (d - 2)
