"""Weighted projective points: scaling, weighted gcds, normalization, heights."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import reduce, total_ordering
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .arith import INF, DomainError, factorize, rational_valuation


@dataclass(frozen=True)
class WeightSystem:
    weights: Tuple[int, ...]
    label: str = field(default="", compare=False)

    def __init__(self, weights: Iterable[int], label: str = ""):
        ws = tuple(int(w) for w in weights)
        if not ws or any(w < 1 for w in ws):
            raise DomainError(f"weights must be a nonempty tuple of positive integers, got {ws}")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "label", label)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.weights)

    @property
    def lcm(self) -> int:
        return reduce(lambda a, b: a * b // math.gcd(a, b), self.weights)

    def scaled(self, k: int) -> "WeightSystem":
        return WeightSystem([k * w for w in self.weights], self.label)


def _as_weights(w) -> WeightSystem:
    return w if isinstance(w, WeightSystem) else WeightSystem(w)


@dataclass(frozen=True)
class WeightedPoint:
    coords: Tuple[Fraction, ...]
    weights: WeightSystem

    def __init__(self, coords: Sequence, weights):
        cs = tuple(Fraction(c) for c in coords)
        ws = _as_weights(weights)
        if len(cs) != len(ws):
            raise DomainError(f"{len(cs)} coordinates but {len(ws)} weights")
        if not any(cs):
            raise DomainError("all coordinates are zero")
        object.__setattr__(self, "coords", cs)
        object.__setattr__(self, "weights", ws)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def int_coords(self) -> Tuple[int, ...]:
        if not self.is_integral:
            raise DomainError("point has non-integral coordinates")
        return tuple(c.numerator for c in self.coords)

    def valuations(self, p: int) -> tuple:
        return tuple(rational_valuation(c, p) for c in self.coords)

    def support(self) -> list:
        """Primes dividing the gcd of the nonzero numerators or any denominator."""
        g = 0
        den = 1
        for c in self.coords:
            if c:
                g = math.gcd(g, c.numerator)
                den = den * c.denominator // math.gcd(den, c.denominator)
        primes = set(factorize(g).factors) | set(factorize(den).factors)
        return sorted(primes)

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class PrimeExponentMap:
    """The real number ``prod p^e_p`` with rational exponents.

    Every exponent is a nonzero multiple of ``1/denominator_bound``.
    Negative exponents are allowed; they arise when a rational point has to
    be scaled up to become integral.
    """

    factors: Dict[int, Fraction] = field(default_factory=dict)
    denominator_bound: int = 1

    def __init__(self, factors=None, denominator_bound: int = 1):
        fs = {int(p): Fraction(e) for p, e in sorted((factors or {}).items()) if e}
        for p, e in fs.items():
            if (e * denominator_bound).denominator != 1:
                raise DomainError(f"exponent {e} of {p} is not a multiple of 1/{denominator_bound}")
        object.__setattr__(self, "factors", fs)
        object.__setattr__(self, "denominator_bound", int(denominator_bound))

    @classmethod
    def of_rational(cls, x) -> "PrimeExponentMap":
        x = Fraction(x)
        if x <= 0:
            raise DomainError("only positive rationals have an exponent map")
        fs: Dict[int, Fraction] = {}
        for p, e in factorize(x.numerator).factors.items():
            fs[p] = Fraction(e)
        for p, e in factorize(x.denominator).factors.items():
            fs[p] = fs.get(p, 0) - e
        return cls(fs)

    def is_one(self) -> bool:
        return not self.factors

    def inverse(self) -> "PrimeExponentMap":
        return PrimeExponentMap({p: -e for p, e in self.factors.items()}, self.denominator_bound)

    def scaled(self, k) -> "PrimeExponentMap":
        """The map of ``lambda^k`` for rational k."""
        k = Fraction(k)
        fs = {p: e * k for p, e in self.factors.items()}
        bound = 1
        for e in fs.values():
            bound = bound * e.denominator // math.gcd(bound, e.denominator)
        return PrimeExponentMap(fs, bound)

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for e in self.factors.values())

    def as_rational(self) -> Optional[Fraction]:
        if not self.is_rational():
            return None
        v = Fraction(1)
        for p, e in self.factors.items():
            v *= Fraction(p) ** int(e)
        return v

    def power_rational(self, q: int) -> Fraction:
        """``lambda^q`` as an exact rational; q times every exponent must be integral."""
        v = Fraction(1)
        for p, e in self.factors.items():
            k = e * q
            if k.denominator != 1:
                raise DomainError(f"{p}^({e}) raised to {q} is irrational")
            v *= Fraction(p) ** int(k)
        return v

    def to_float(self) -> float:
        return math.prod(p ** float(e) for p, e in self.factors.items())

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^({e})" if e.denominator != 1 or e < 0 else (str(p) if e == 1 else f"{p}^{e}")
                        for p, e in self.factors.items())

    def to_json(self) -> dict:
        return {str(p): str(e) for p, e in self.factors.items()}


def star(lam, p: WeightedPoint, *, inverse: bool = False) -> WeightedPoint:
    """``lam * (x_0..x_n) = (lam^q_0 x_0, ..., lam^q_n x_n)``.

    ``lam`` is a nonzero rational or a :class:`PrimeExponentMap`; with
    ``inverse=True`` the point is divided by ``lam`` instead.
    """
    if isinstance(lam, PrimeExponentMap):
        m = lam.inverse() if inverse else lam
        coords = []
        for i, (x, q) in enumerate(zip(p.coords, p.weights)):
            for prime, e in m.factors.items():
                if (e * q).denominator != 1:
                    raise DomainError(f"prime {prime} with exponent {e} is irrational at coordinate {i} (weight {q})")
            coords.append(x * m.power_rational(q))
        return WeightedPoint(coords, p.weights)
    lam = Fraction(lam)
    if lam == 0:
        raise DomainError("star by zero")
    if inverse:
        lam = 1 / lam
    return WeightedPoint([lam**q * x for x, q in zip(p.coords, p.weights)], p.weights)


def _min_ratio(vals, weights, step: Fraction) -> Optional[int]:
    # floor(min_i v_i / (step q_i)) with INF entries skipped
    best = None
    for v, q in zip(vals, weights):
        if v is INF:
            continue
        k = math.floor(Fraction(v) / (step * q))
        best = k if best is None else min(best, k)
    return best


def scaling_exponents(p: WeightedPoint, step) -> PrimeExponentMap:
    """Per prime, the largest multiple e of ``step`` with ``e q_i <= v_p(x_i)`` for all i.

    The result is the maximal star scalar that can be divided out while
    keeping the point integral, restricted to exponents in ``step * Z``.
    """
    step = Fraction(step)
    if step <= 0:
        raise DomainError("step must be positive")
    for q in p.weights:
        if (step * q).denominator != 1:
            raise DomainError(f"step {step} times weight {q} is not an integer")
    out = {}
    for prime in p.support():
        k = _min_ratio(p.valuations(prime), p.weights, step)
        if k:
            out[prime] = k * step
    return PrimeExponentMap(out, step.denominator)


def _require_integral(p: WeightedPoint) -> None:
    if not p.is_integral:
        raise DomainError("weighted gcd needs integral coordinates")


def wgcd(p: WeightedPoint) -> int:
    """Largest integer d with d^q_i | x_i for all i."""
    _require_integral(p)
    lam = scaling_exponents(p, 1)
    return int(lam.as_rational())


def abs_wgcd(p: WeightedPoint) -> PrimeExponentMap:
    """Largest real d with d^q_i integral and dividing x_i for all i."""
    _require_integral(p)
    return scaling_exponents(p, Fraction(1, p.weights.gcd))


def _sign_fix(p: WeightedPoint) -> WeightedPoint:
    for x, q in zip(p.coords, p.weights):
        if q % 2 and x:
            return star(-1, p) if x < 0 else p
    return p


def normalize(p: WeightedPoint) -> WeightedPoint:
    """Integral representative with weighted gcd 1.

    Rational input is accepted: the scalar found may then have negative
    exponents.  When some weight is odd, the first nonzero odd-weight
    coordinate is made positive.
    """
    lam = scaling_exponents(p, 1)
    return _sign_fix(star(lam, p, inverse=True))


def _root_decimal(x: int, q: int, digits: int, log: bool) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 20
        v = Decimal(x)
        val = v.ln() / q if log else (v.ln() / q).exp()
        ctx.prec = digits
        return str(+val)


@total_ordering
@dataclass(frozen=True)
class Height:
    """``base^(1/weight)``, attained at coordinate ``argmax_index`` of the normalized point."""

    base: int
    weight: int
    argmax_index: int
    logarithmic: bool = False

    def _key(self, other: "Height"):
        # compare base^(1/w) exactly via base^(w') vs other.base^(w)
        return self.base ** other.weight, other.base ** self.weight

    def __eq__(self, other):
        if not isinstance(other, Height):
            return NotImplemented
        a, b = self._key(other)
        return a == b

    def __lt__(self, other):
        a, b = self._key(other)
        return a < b

    def __hash__(self):
        # equal heights share the reduced form b^(1/w) with w minimal
        if self.base <= 1:
            return hash((self.base, 1))
        fz = factorize(self.base).factors
        g = reduce(math.gcd, fz.values(), self.weight)
        return hash((math.prod(p ** (e // g) for p, e in fz.items()), self.weight // g))

    def decimal(self, digits: int = 12) -> str:
        return _root_decimal(self.base, self.weight, digits, self.logarithmic)

    def __float__(self):
        v = self.base ** (1.0 / self.weight)
        return math.log(v) if self.logarithmic else v


def weighted_height(p: WeightedPoint, mode: str = "multiplicative") -> Height:
    """Height over Q: max_i |x_i|^(1/q_i) on the normalized representative.

    The maximum is located exactly by comparing |x_i|^(L/q_i) with L the
    lcm of the weights.
    """
    if mode not in ("multiplicative", "logarithmic"):
        raise DomainError(f"unknown height mode {mode!r}")
    n = normalize(p)
    L = n.weights.lcm
    best_i, best_v = None, None
    for i, (x, q) in enumerate(zip(n.int_coords(), n.weights)):
        v = abs(x) ** (L // q)
        if best_v is None or v > best_v:
            best_i, best_v = i, v
    q = n.weights.weights[best_i]
    return Height(abs(n.int_coords()[best_i]), q, best_i, mode == "logarithmic")
