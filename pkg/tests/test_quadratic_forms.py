import random

import pytest

from carkwork import (
    GEN_L,
    GEN_S,
    GEN_T,
    IDENTITY,
    GroupElement,
    IdentityHasNoForm,
    QuadForm,
    act,
    classify_form,
    form_of_element,
    is_gauss_reduced,
    is_lagrange_reduced,
    is_on_spine,
    is_primitive,
    multiply,
)


def random_element(rng: random.Random) -> GroupElement:
    m = IDENTITY
    for _ in range(rng.randint(1, 25)):
        m = multiply(m, rng.choice((GEN_S, GEN_L)))
    return m


def test_classify_form():
    assert classify_form(QuadForm(1, 0, 1)) == "positive_definite"
    assert classify_form(QuadForm(-1, 0, -1)) == "negative_definite"
    assert classify_form(QuadForm(1, 1, -1)) == "indefinite"
    assert classify_form(QuadForm(1, 0, -1)) == "degenerate"  # disc 4 = 2^2
    assert classify_form(QuadForm(0, 1, 0)) == "degenerate"


def test_discriminant_and_evaluate():
    f = QuadForm(2, 1, -3)
    assert f.discriminant == 1 + 24
    assert f.evaluate(1, 1) == 0
    assert f.evaluate(2, -1) == 2 * 4 - 2 - 3


def test_primitivity():
    assert is_primitive(QuadForm(2, 1, -3))
    assert not is_primitive(QuadForm(2, 4, -2))


def test_form_of_element_examples():
    assert form_of_element(GEN_S) == QuadForm(1, 0, 1)
    assert form_of_element(GEN_T) == QuadForm(0, 0, -1)
    assert form_of_element(GroupElement(2, 1, 1, 1)) == QuadForm(1, -1, -1)


def test_form_of_identity_rejected():
    with pytest.raises(IdentityHasNoForm):
        form_of_element(IDENTITY)


def test_act_is_right_action():
    rng = random.Random(11)
    for _ in range(200):
        f = QuadForm(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        m1, m2 = random_element(rng), random_element(rng)
        assert act(m2, act(m1, f)) == act(multiply(m1, m2), f)
        assert act(IDENTITY, f) == f


def test_act_preserves_discriminant():
    rng = random.Random(3)
    for _ in range(500):
        f = QuadForm(rng.randint(-10**9, 10**9), rng.randint(-10**9, 10**9), rng.randint(-10**9, 10**9))
        m = random_element(rng)
        assert act(m, f).discriminant == f.discriminant


def test_act_value_correspondence():
    # act(m, f) evaluates at (x, y) as f evaluates at (x, y) * m
    rng = random.Random(5)
    for _ in range(100):
        f = QuadForm(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        m = random_element(rng)
        x, y = rng.randint(-5, 5), rng.randint(-5, 5)
        assert act(m, f).evaluate(x, y) == f.evaluate(m.p * x + m.q * y, m.r * x + m.s * y)


def test_gauss_reduced_predicate():
    assert is_gauss_reduced(QuadForm(1, 1, -1))
    assert is_gauss_reduced(QuadForm(-1, 1, 1))
    assert not is_gauss_reduced(QuadForm(1, -1, -1))
    assert not is_gauss_reduced(QuadForm(-14, 2, 1))


def test_gauss_reduced_delta60_oracle():
    # All Gauss reduced forms of discriminant 60 share b = 6, a*c = -6.
    reduced = [
        QuadForm(a, b, c)
        for a in range(-60, 61)
        for b in range(-60, 61)
        for c in range(-60, 61)
        if b * b - 4 * a * c == 60 and is_gauss_reduced(QuadForm(a, b, c))
    ]
    assert len(reduced) == 8
    assert all(f.b == 6 and f.a * f.c == -6 for f in reduced)


def test_gauss_reduced_implies_on_spine():
    for a in range(-30, 31):
        for b in range(-30, 31):
            for c in range(-30, 31):
                f = QuadForm(a, b, c)
                if classify_form(f) == "indefinite" and is_gauss_reduced(f):
                    assert is_on_spine(f)


def test_lagrange_reduced_predicate():
    assert is_lagrange_reduced(QuadForm(1, 0, 1))
    assert is_lagrange_reduced(QuadForm(2, 1, 3))
    assert is_lagrange_reduced(QuadForm(2, -1, 3))
    assert not is_lagrange_reduced(QuadForm(2, -2, 3))  # b = -a is excluded
    assert is_lagrange_reduced(QuadForm(2, 2, 3))
    assert not is_lagrange_reduced(QuadForm(3, 1, 2))  # a > c
