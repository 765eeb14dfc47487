"""Generator invariants of binary forms and their weight systems.

Sextics use the Igusa-Clebsch invariants ``I2, I4, I6, I10`` in the root
normalization

    I2  = a6^2  * sum_15 (12)(34)(56)
    I4  = a6^4  * sum_10 (12)(23)(31)(45)(56)(64)
    I6  = a6^6  * sum_60 (12)(23)(31)(45)(56)(64)(14)(25)(36)
    I10 = a6^10 * prod_{i<j} (ij)

with ``(ij) = (r_i - r_j)^2``.  They are evaluated without roots, from the
Clebsch transvectant invariants A, B, C, D.  These are the values labelled
``[J2 : J4 : J6 : J10]`` throughout this package, and ``J10`` coincides with
the discriminant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence, Tuple

from .arith import DomainError
from .forms import BinaryForm, d_dx, d_dy, discriminant, poly_mul
from .weighted import WeightedPoint, WeightSystem

IGUSA_WEIGHTS = WeightSystem((2, 4, 6, 10), "igusa")


def _partial(f: Sequence, nx: int, ny: int) -> list:
    for _ in range(nx):
        f = d_dx(f)
    for _ in range(ny):
        f = d_dy(f)
    return f


def transvectant(f: Sequence, g: Sequence, k: int) -> list:
    """k-th transvectant of two forms given as coefficient vectors.

    Normalized by ``(m-k)! (n-k)! / (m! n!)`` so that the transvectant of
    forms with integer coefficients in the binomial basis stays small.
    """
    m, n = len(f) - 1, len(g) - 1
    if k > min(m, n):
        raise DomainError(f"transvectant order {k} exceeds degrees {m}, {n}")
    out = [Fraction(0)] * (m + n - 2 * k + 1)
    for i in range(k + 1):
        term = poly_mul(_partial(f, k - i, i), _partial(g, i, k - i))
        c = (-1) ** i * comb(k, i)
        for j, t in enumerate(term):
            out[j] += c * t
    scale = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return [scale * c for c in out]


def clebsch_invariants(f: BinaryForm) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Clebsch's A, B, C, D of a sextic."""
    c = f.coeffs
    i = transvectant(c, c, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(c, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(c, c, 6)[0]
    B = transvectant(i, i, 4)[0]
    C = transvectant(i, delta, 4)[0]
    D = transvectant(y3, y1, 2)[0]
    return A, B, C, D


def igusa_point(f: BinaryForm) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(J2, J4, J6, J10)`` of a sextic; integers for integral forms."""
    if f.degree != 6:
        raise DomainError(f"Igusa invariants need a sextic, got degree {f.degree}")
    A, B, C, D = clebsch_invariants(f)
    j2 = -120 * A
    j4 = -720 * A**2 + 6750 * B
    j6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    j10 = (-62208 * A**5 + 972000 * A**3 * B + 1620000 * A**2 * C
           - 3037500 * A * B**2 - 6075000 * B * C - 4556250 * D)
    return j2, j4, j6, j10


@dataclass(frozen=True)
class InvariantSystem:
    degree: int
    weight_system: WeightSystem
    evaluator: Callable[[BinaryForm], tuple]

    def __call__(self, f: BinaryForm) -> tuple:
        if f.degree != self.degree:
            raise DomainError(f"system is for degree {self.degree}, form has degree {f.degree}")
        vals = tuple(self.evaluator(f))
        assert len(vals) == len(self.weight_system)
        return vals

    def point(self, f: BinaryForm) -> WeightedPoint:
        return WeightedPoint(self(f), self.weight_system)

    @property
    def names(self) -> Tuple[str, ...]:
        if self.weight_system.label == "igusa":
            return ("J2", "J4", "J6", "J10")
        return ("disc",)


def system_for(d: int) -> InvariantSystem:
    """Igusa system for sextics, the discriminant (weight 2d-2) otherwise."""
    if d < 2:
        raise DomainError(f"no invariant system for degree {d}")
    if d == 6:
        return InvariantSystem(6, IGUSA_WEIGHTS, igusa_point)
    return InvariantSystem(d, WeightSystem((2 * d - 2,), "discriminant"), lambda f: (discriminant(f),))


def moduli_point(f: BinaryForm) -> WeightedPoint:
    return system_for(f.degree).point(f)
