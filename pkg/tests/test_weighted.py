import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ABS_TWIST_POINT, BASE_POINT, REDUCED_POINT, brute_prime_exponent, brute_wgcd, exact_root_max_index
from wmod.arith import DomainError
from wmod.weighted import (
    Height,
    PrimeExponentMap,
    WeightedPoint,
    abs_wgcd,
    normalize,
    star,
    weighted_height,
    wgcd,
)

IGUSA = (2, 4, 6, 10)


def P(coords, weights=IGUSA):
    return WeightedPoint(coords, weights)


def test_star_identity_and_powers():
    p = P(BASE_POINT)
    assert star(1, p) == p
    assert star(2, P((1, 1, 1, 1))).coords == (4, 16, 64, 1024)


def test_star_maps_base_point_to_reduced_point():
    assert star(Fraction(1, 36), P(BASE_POINT)) == P(REDUCED_POINT)


def test_star_by_exponent_map():
    lam = PrimeExponentMap({2: Fraction(5, 2), 3: 2}, 2)
    assert star(lam, P(BASE_POINT), inverse=True) == P(ABS_TWIST_POINT)


def test_star_rejects_irrational_scaling():
    lam = PrimeExponentMap({2: Fraction(1, 3)}, 3)
    with pytest.raises(DomainError, match="prime 2"):
        star(lam, P(BASE_POINT))


def test_wgcd_examples():
    assert wgcd(P(BASE_POINT)) == 36
    assert wgcd(P(REDUCED_POINT)) == 1
    assert brute_wgcd((2**6, 2**12), (2, 4)) == 8
    assert wgcd(P((2**6, 2**12), (2, 4))) == 8


def test_wgcd_errors():
    with pytest.raises(DomainError):
        P((0, 0, 0, 0))
    with pytest.raises(DomainError):
        wgcd(P((Fraction(1, 2), 1), (2, 4)))


def test_wgcd_skips_zero_coordinates():
    assert wgcd(P((0, 2**12), (2, 4))) == 8


def test_wgcd_matches_brute_force_sweep():
    rng = random.Random(12)
    for _ in range(400):
        n = rng.randint(1, 4)
        ws = [rng.randint(1, 5) for _ in range(n)]
        xs = [rng.choice([0, 1, -1]) * rng.randint(1, 2**16) for _ in range(n)]
        if not any(xs):
            continue
        # sprinkle in high prime powers so that nontrivial answers occur
        k = rng.choice([1, 2, 3, 4, 6])
        xs = [x * k ** (q * rng.randint(0, 2)) for x, q in zip(xs, ws)]
        xs = [x if abs(x) <= 2**16 else x % (2**16) for x in xs]
        if not any(xs):
            continue
        assert wgcd(P(xs, ws)) == brute_wgcd(xs, ws), (xs, ws)


def test_abs_wgcd_examples():
    assert abs_wgcd(P((2, 4), (2, 4))).factors == {2: Fraction(1, 2)}
    assert abs_wgcd(P(BASE_POINT, (6, 12, 18, 30))).factors == {2: Fraction(5, 6), 3: Fraction(2, 3)}
    assert abs_wgcd(P((1, 8), (2, 4))).is_one()


def test_abs_wgcd_against_brute_force():
    ws = (6, 12, 18, 30)
    for p in (2, 3):
        assert brute_prime_exponent(BASE_POINT, ws, p, Fraction(1, 6)) == abs_wgcd(P(BASE_POINT, ws)).factors[p]
    assert brute_prime_exponent((2, 4), (2, 4), 2, Fraction(1, 2)) == Fraction(1, 2)


def test_abs_wgcd_dominates_wgcd():
    rng = random.Random(13)
    for _ in range(200):
        ws = [rng.randint(1, 6) for _ in range(3)]
        xs = [rng.randint(1, 3000) * rng.choice([1, 8, 27, 64, 729]) for _ in range(3)]
        p = P(xs, ws)
        a = abs_wgcd(p)
        assert a.to_float() >= wgcd(p) * (1 - 1e-12)
        if p.weights.gcd == 1:
            assert a.as_rational() == wgcd(p)


def test_normalize_examples():
    assert normalize(P(BASE_POINT)) == P(REDUCED_POINT)
    assert normalize(P(REDUCED_POINT)) == P(REDUCED_POINT)
    assert normalize(P((4, 16), (2, 4))).coords == (1, 1)


def test_normalize_rational_input():
    p = star(Fraction(5, 7), P(REDUCED_POINT))
    assert normalize(p) == P(REDUCED_POINT)


def test_normalize_sign_convention_for_odd_weights():
    p = P((-8, 4), (3, 2))
    n = normalize(p)
    assert n.coords[0] > 0
    assert normalize(star(-1, p)) == n


positive_rationals = st.fractions(min_value=Fraction(1, 30), max_value=50, max_denominator=30).filter(lambda x: x > 0)
small_points = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=4).filter(any)


@settings(max_examples=80, deadline=None)
@given(small_points, st.data(), positive_rationals, positive_rationals)
def test_star_composes(xs, data, lam, mu):
    ws = data.draw(st.lists(st.integers(1, 6), min_size=len(xs), max_size=len(xs)))
    p = P(xs, ws)
    assert star(lam, star(mu, p)) == star(lam * mu, p)


@settings(max_examples=80, deadline=None)
@given(small_points, st.data(), positive_rationals)
def test_normalize_is_idempotent_and_scale_invariant(xs, data, lam):
    ws = data.draw(st.lists(st.integers(1, 6), min_size=len(xs), max_size=len(xs)))
    p = P(xs, ws)
    n = normalize(p)
    assert wgcd(n) == 1
    assert normalize(n) == n
    assert normalize(star(lam, p)) == n
    assert normalize(star(-lam, p)) == n


def test_height_examples():
    assert weighted_height(P((1, -1, 1, 1))).decimal() == "1"
    assert weighted_height(P((1, -1), (2, 4)), "logarithmic").decimal() == "0"
    assert weighted_height(P((4, 16), (2, 4))) == Height(1, 1, 0)
    h = weighted_height(P(REDUCED_POINT))
    assert h.argmax_index == exact_root_max_index(REDUCED_POINT, IGUSA) == 0
    assert (h.base, h.weight) == (2**11 * 3, 2)
    assert h.decimal() == "78.3836717691"


def test_height_argmax_uses_lcm_powers():
    # 3^(1/2) vs 2^(1/1): compare 3 vs 4
    h = weighted_height(P((3, 2), (2, 1)))
    assert h.argmax_index == 1 and h == Height(2, 1, 1)


def test_height_ordering_is_exact():
    assert Height(2, 1, 0) < Height(5, 2, 0)
    assert Height(4, 2, 0) == Height(2, 1, 0)


@settings(max_examples=100, deadline=None)
@given(small_points, st.data(), st.fractions(min_value=-30, max_value=30, max_denominator=12).filter(bool))
def test_height_invariant_under_star(xs, data, lam):
    ws = data.draw(st.lists(st.integers(1, 6), min_size=len(xs), max_size=len(xs)))
    p = P(xs, ws)
    h = weighted_height(p)
    assert h == weighted_height(star(lam, p))
    assert float(h) >= 1


def test_height_hash_agrees_with_equality():
    assert hash(Height(4, 2, 0)) == hash(Height(2, 1, 1))
    assert Height(8, 3, 0) >= Height(2, 1, 0) and Height(9, 2, 0) > Height(2, 1, 0)
    assert len({Height(16, 4, 0), Height(4, 2, 0), Height(2, 1, 0), Height(3, 1, 0)}) == 2
