"""Minimal models and minimal twists of superelliptic curves.

All three reductions share one engine (:func:`reduction_exponents`): per
prime, divide the moduli point by the largest star scalar whose exponent is
a multiple of a fixed step and keeps the point integral.

* ``model``: step d/2.  A substitution ``x -> x/lam`` scales the invariants
  by ``lam^(-d/2)``, so these are exactly the reductions realizable by an
  integral change of the x coordinate.
* ``normalize``: step 1, the wgcd-1 representative of the point.
* ``twist``: step 1/gcd(weights), the absolute weighted gcd.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Tuple

from .arith import INF, DomainError, factorize
from .forms import BinaryForm, Gl2Transform, content_and_primitive, discriminant, transform
from .invariants import system_for
from .weighted import PrimeExponentMap, WeightedPoint, scaling_exponents, star

MODES = ("model", "normalize", "twist")


@dataclass(frozen=True)
class SuperellipticCurve:
    """``c * z^m * y^(d-m) = f(x, y)`` with f integral and separable."""

    m: int
    form: BinaryForm
    twist_scalar: Fraction = Fraction(1)

    def __post_init__(self):
        if self.m < 2:
            raise DomainError("superelliptic exponent m must be >= 2")
        if not self.form.is_integral:
            raise DomainError("curve equation must have integral coefficients")
        if self.form.degree < 3:
            raise DomainError("form degree must be >= 3")
        object.__setattr__(self, "twist_scalar", Fraction(self.twist_scalar))
        if self.twist_scalar == 0:
            raise DomainError("twist scalar must be nonzero")
        if discriminant(self.form) == 0:
            raise DomainError("inseparable form: discriminant is zero")

    @property
    def d(self) -> int:
        return self.form.degree

    @property
    def low_degree(self) -> bool:
        """Degree 3 or 4: accepted, but outside the superelliptic range d >= 5."""
        return self.d < 5

    @property
    def system(self):
        return system_for(self.d)

    def form_point(self) -> WeightedPoint:
        """Invariants of the form itself, ignoring the twist scalar."""
        return self.system.point(self.form)

    def moduli_point(self) -> WeightedPoint:
        return star(self.twist_scalar, self.form_point(), inverse=True)

    def render(self) -> str:
        c = self.twist_scalar
        lhs = "z" if self.m == 1 else f"z^{self.m}"
        if self.d - self.m > 0:
            lhs += "*y" if self.d - self.m == 1 else f"*y^{self.d - self.m}"
        elif self.d - self.m < 0:
            lhs += f"*y^({self.d - self.m})"
        if c != 1:
            lhs = f"{c}*{lhs}"
        return f"{lhs} = {self.form.render()}"


@dataclass(frozen=True)
class ReductionReport:
    mode: str
    input_point: WeightedPoint
    output_point: WeightedPoint
    star_exponents: PrimeExponentMap
    lam: PrimeExponentMap
    realized_equation: Optional[SuperellipticCurve] = None
    defined_over_base: bool = True
    extension_note: Optional[str] = None
    flags: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def lam_value(self) -> Optional[Fraction]:
        return self.lam.as_rational()


def weighted_tuple_valuation(p: WeightedPoint, prime: int) -> int:
    """Largest j with prime^j dividing x_i^q_i for every i."""
    vals = [q * v for v, q in zip(p.valuations(prime), p.weights) if v is not INF]
    if not vals:
        raise DomainError("all coordinates are zero")
    return min(vals)


def _step(mode: str, p: WeightedPoint, d: int) -> Fraction:
    if mode == "model":
        return Fraction(d, 2)
    if mode == "normalize":
        return Fraction(1)
    if mode == "twist":
        return Fraction(1, p.weights.gcd)
    raise DomainError(f"unknown reduction mode {mode!r}")


def reduction_exponents(p: WeightedPoint, step) -> PrimeExponentMap:
    """Star-scalar exponents of the maximal reduction with exponents in ``step * Z``."""
    return scaling_exponents(p, step)


def _curve_lambda(star_map: PrimeExponentMap, d: int) -> PrimeExponentMap:
    # star scalar lam^(d/2) <-> substitution x -> x/lam
    return star_map.scaled(Fraction(2, d))


def _lambda_note(lam: PrimeExponentMap, power: Fraction) -> Optional[str]:
    root = lam.scaled(power)
    if root.is_rational():
        return None
    return f"isomorphism defined over k({root.render()})"


def _model_exponents(curve: SuperellipticCurve) -> PrimeExponentMap:
    # only reductions count: a non-integral point (rational twist scalar) is never scaled up
    e = reduction_exponents(curve.moduli_point(), Fraction(curve.d, 2))
    return PrimeExponentMap({p: x for p, x in e.factors.items() if x > 0}, e.denominator_bound)


def is_minimal(curve: SuperellipticCurve) -> bool:
    """No prime p has p^(d q_i / 2) dividing every coordinate of the moduli point."""
    return _model_exponents(curve).is_one()


def _rescale(curve: SuperellipticCurve, lam: Fraction) -> SuperellipticCurve:
    # lam^d * c * z^m y^(d-m) = lam^d f(x/lam, y); the moduli point drops by lam^(d/2)
    d = curve.d
    g = transform(curve.form, Gl2Transform.diag(1 / lam, 1, lam**d))
    c = curve.twist_scalar * lam**d
    # a factor common to both sides is cancelled; the point does not move
    k = math.gcd(content_and_primitive(g)[0], c.numerator)
    return SuperellipticCurve(curve.m, g.scale(Fraction(1, k)), c / k)


def minimal_model(curve: SuperellipticCurve) -> ReductionReport:
    d, m = curve.d, curve.m
    e = _model_exponents(curve)
    lam = _curve_lambda(e, d)
    lam_value = lam.as_rational()
    assert lam_value is not None and lam_value.denominator == 1
    realized = _rescale(curve, lam_value) if lam_value != 1 else curve
    inp = curve.moduli_point()
    out = star(e, inp, inverse=True)
    note = _lambda_note(lam, Fraction(d, m))
    return ReductionReport(
        mode="model",
        input_point=inp,
        output_point=out,
        star_exponents=e,
        lam=lam,
        realized_equation=realized,
        defined_over_base=note is None,
        extension_note=note,
    )


def _ceil_lambda(e: PrimeExponentMap, d: int) -> int:
    lam = 1
    for p, ep in e.factors.items():
        lam *= p ** max(0, math.ceil(Fraction(2, d) * ep))
    return lam


def _realize_twist(curve: SuperellipticCurve, e: PrimeExponentMap, target: WeightedPoint):
    d = curve.d
    lam_c = _ceil_lambda(e, d)
    g = transform(curve.form, Gl2Transform.diag(Fraction(1, lam_c), 1, lam_c**d))
    _, _, prim = content_and_primitive(g)
    candidates = [SuperellipticCurve(curve.m, prim)]
    exact = _curve_lambda(e, d).as_rational()
    if exact is not None and exact.denominator == 1:
        candidates.append(_rescale(curve, exact))
    for cand in candidates:
        if cand.moduli_point() == target:
            return cand
    return None


def minimal_twist(curve: SuperellipticCurve, integral_only: bool = True) -> ReductionReport:
    """Reduce the moduli point as far as any twist allows.

    ``integral_only`` keeps the star scalar rational (the wgcd-1
    normalization); otherwise the absolute weighted gcd is divided out and
    the scalar may be irrational.
    """
    inp = curve.moduli_point()
    mode = "normalize" if integral_only else "twist"
    e = reduction_exponents(inp, _step(mode, inp, curve.d))
    out = star(e, inp, inverse=True)
    realized = _realize_twist(curve, e, out)
    flags = () if realized is not None else ("point-only",)
    if integral_only:
        # the substitution actually used; its content is divided out afterwards
        lam = PrimeExponentMap.of_rational(_ceil_lambda(e, curve.d))
        note = None
    else:
        lam = _curve_lambda(e, curve.d)
        note = None if lam.is_rational() else f"twist defined over k({lam.render()})"
    return ReductionReport(
        mode=mode,
        input_point=inp,
        output_point=out,
        star_exponents=e,
        lam=lam,
        realized_equation=realized,
        defined_over_base=note is None,
        extension_note=note,
        flags=flags,
    )


def scalar_twist(curve: SuperellipticCurve, c) -> SuperellipticCurve:
    """The twist ``c * (old scalar) * z^m y^(d-m) = f``, isomorphic over k(c^(1/m))."""
    c = Fraction(c)
    if c == 0:
        raise DomainError("twist scalar must be nonzero")
    return replace(curve, twist_scalar=curve.twist_scalar * c)


def minimize_discriminant(curve: SuperellipticCurve) -> Tuple[SuperellipticCurve, int]:
    """Divide out u^(m d (d-1)) from the discriminant by x- or y-substitutions.

    The target u collects every prime whose exponent in the discriminant
    reaches m d (d-1).  Each prime power is realized by ``x -> x/p^(m k)``
    or ``y -> y/p^(m k)`` for the largest k keeping the form integral; the
    returned u is the part actually realized.
    """
    delta = discriminant(curve.form)
    if delta == 0:
        raise DomainError("inseparable: discriminant is zero")
    m, d = curve.m, curve.d
    bound = m * d * (d - 1)
    form = curve.form
    u = 1
    for p, alpha in factorize(int(delta)).factors.items():
        k = alpha // bound
        while k > 0:
            s = Fraction(1, p ** (m * k))
            for t in (Gl2Transform.diag(s, 1), Gl2Transform.diag(1, s)):
                g = transform(form, t)
                if g.is_integral:
                    form = g
                    u *= p**k
                    break
            else:
                k -= 1
                continue
            break
    if u == 1:
        return curve, 1
    return replace(curve, form=form), u
