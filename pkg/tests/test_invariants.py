import random
from fractions import Fraction

import pytest

from conftest import random_separable_form
from oracles import REDUCED_SEXTIC, BASE_SEXTIC, BASE_POINT, REDUCED_POINT, igusa_clebsch_by_roots
from wmod.arith import DomainError
from wmod.forms import BinaryForm, Gl2Transform, discriminant, transform
from wmod.invariants import igusa_point, system_for
from wmod.weighted import normalize


def test_base_sextic_values(base_form):
    assert igusa_point(base_form) == BASE_POINT


def test_reduced_sextic_values(reduced_form):
    assert igusa_point(reduced_form) == REDUCED_POINT


def test_repeated_root_has_zero_j10():
    f = BinaryForm([0, 0, 0, -1, 1, 0, 0])  # x^2 (x - y) y^3
    assert igusa_point(f)[3] == 0


def test_wrong_degree():
    with pytest.raises(DomainError):
        igusa_point(BinaryForm([1, 0, 0, 0, 0, 1]))


def test_agrees_with_root_oracle():
    rng = random.Random(2024)
    for _ in range(25):
        f = random_separable_form(rng, bound=12)
        assert igusa_point(f) == igusa_clebsch_by_roots(f.int_coeffs())
    assert igusa_clebsch_by_roots(BASE_SEXTIC) == BASE_POINT
    assert igusa_clebsch_by_roots(REDUCED_SEXTIC) == REDUCED_POINT


def test_integral_on_integral_forms():
    rng = random.Random(8)
    for _ in range(100):
        f = BinaryForm([rng.randint(-50, 50) for _ in range(7)])
        assert all(v.denominator == 1 for v in igusa_point(f))


def test_j10_is_discriminant_times_fixed_constant():
    rng = random.Random(9)
    forms = [random_separable_form(rng) for _ in range(202)]
    k1 = igusa_point(forms[0])[3] / discriminant(forms[0])
    k2 = igusa_point(forms[1])[3] / discriminant(forms[1])
    assert k1 == k2
    kappa = k1
    assert kappa == 1
    for f in forms[2:]:
        assert igusa_point(f)[3] == kappa * discriminant(f)


def test_scaling_law():
    rng = random.Random(77)
    for _ in range(200):
        f = random_separable_form(rng, bound=6, lead_nonzero=False)
        while True:
            m = [rng.randint(-3, 3) for _ in range(4)]
            if m[0] * m[3] - m[1] * m[2]:
                break
        c = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2, 5]))
        M = Gl2Transform(*m, scalar=c)
        lam = c * M.det**3
        for q, before, after in zip((2, 4, 6, 10), igusa_point(f), igusa_point(transform(f, M))):
            assert after == lam**q * before


def test_unimodular_substitution_keeps_normalized_point():
    rng = random.Random(31)
    sys6 = system_for(6)
    for _ in range(30):
        f = random_separable_form(rng, bound=5)
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        M = Gl2Transform(1, a, 0, 1).then(Gl2Transform(1, 0, b, 1))
        assert M.det == 1
        assert normalize(sys6.point(transform(f, M))) == normalize(sys6.point(f))


def test_system_dispatch():
    assert system_for(6).weight_system.weights == (2, 4, 6, 10)
    assert system_for(5).weight_system.weights == (8,)
    assert system_for(8).weight_system.weights == (14,)
    with pytest.raises(DomainError):
        system_for(1)


def test_homogeneity_of_systems():
    rng = random.Random(4)
    for d in (3, 5, 6, 7):
        s = system_for(d)
        f = random_separable_form(rng, d=d, bound=4)
        c = Fraction(-3, 2)
        for q, a, b in zip(s.weight_system, s(f), s(f.scale(c))):
            assert b == c**q * a
