import math
import random
from fractions import Fraction

import mpmath
import pytest

from trigpow.errors import (
    NonIntegerNeedsPositiveBase,
    PoleAtEvaluationPoint,
    PoleNearby,
    StepTooSmall,
)
from trigpow.evaluator import (
    Form,
    build_expression,
    evaluate,
    evaluate_specialized,
    finite_difference,
    specialize,
)
from trigpow.exactpoly import N, NPoly, UPoly
from trigpow.families import FAMILIES, Family

REAL_GRID = (1.7, -1.7, 0.9, -0.9, 0.3, -0.3, 0.1)


def rel(a, b):
    return abs(a - b) / max(1.0, abs(a), abs(b))


def test_build_expression_examples():
    e = build_expression("sin", 2, "final")
    assert not e.cofactor
    assert e.base_exponent == N - 2
    assert e.poly == UPoly({2: -N * N, 0: N * N - N})
    e = build_expression("cos", 3, "final")
    assert e.cofactor
    assert e.poly == UPoly({2: NPoly.monomial(1, 3), 0: NPoly((0, -2, 3, -1))})
    for fam in FAMILIES:
        for form in Form:
            e = build_expression(fam, 0, form)
            assert e.poly == UPoly.one()
            assert e.base_exponent == N


def test_expression_rejects_wrong_parity():
    with pytest.raises(ValueError):
        build_expression("sin", 1, "final").__class__(Family.SIN, 1, Form.FINAL, True, UPoly({1: N}))


def test_evaluate_examples():
    assert evaluate(build_expression("sin", 2), 1, 0.7) == pytest.approx(-math.sin(0.7), rel=1e-15)
    assert abs(evaluate(build_expression("sin", 1), -1, math.pi / 2)) < 1e-15
    with pytest.raises(PoleAtEvaluationPoint):
        evaluate(build_expression("sin", 1), -1, 0.0)
    want = 2.5 * math.cosh(0.4) ** 1.5 * math.sinh(0.4)
    assert evaluate(build_expression("cosh", 1), 2.5, 0.4).real == pytest.approx(want, rel=1e-14)
    assert finite_difference("cosh", 2.5, 1, 0.4) == pytest.approx(want, rel=1e-8)


def test_real_exponent_needs_nonnegative_base():
    with pytest.raises(NonIntegerNeedsPositiveBase):
        evaluate(build_expression("sin", 1), 2.5, -0.4)
    with pytest.raises(NonIntegerNeedsPositiveBase):
        evaluate(build_expression("cosh", 1), 2.5, 0.3 + 0.2j)
    with pytest.raises(PoleAtEvaluationPoint):
        evaluate(build_expression("sinh", 2), 0.5, 0.0)
    # exponent above k: base 0 is fine
    assert evaluate(build_expression("sinh", 1), 2.5, 0.0) == 0


def test_fraction_exponent_is_exact_integral():
    assert evaluate(build_expression("sin", 2), Fraction(2), 0.3) == evaluate(build_expression("sin", 2), 2, 0.3)


def test_natural_exponent_at_zero_of_base_is_entire():
    # d^4/dx^4 sin^2 x = -8 cos 2x, evaluated exactly at the zero of sin
    for form in Form:
        assert evaluate(build_expression("sin", 4, form), 2, 0.0) == pytest.approx(-8)
        assert evaluate(build_expression("sinh", 3, form), 1, 0.0) == pytest.approx(1)
    assert evaluate(build_expression("cos", 5, Form.FINAL), 3, math.pi / 2).real == pytest.approx(
        float(mpmath.diff(lambda t: mpmath.cos(t) ** 3, mpmath.pi / 2, 5)), rel=1e-12
    )


def test_specialize_examples():
    s = specialize("sin", 2, 1)
    assert (s.reduced_exponent, s.poly_v, s.cofactor) == (1, (-1,), False)
    s = specialize("sin", 4, 2)
    assert (s.reduced_exponent, s.poly_v) == (0, (-8, 0, 16))
    s = specialize("cosh", 0, 5)
    assert (s.reduced_exponent, s.poly_v) == (5, (1,))


def test_specialize_negative_n_keeps_exponent():
    s = specialize("sin", 3, -2)
    assert s.reduced_exponent == -5
    with pytest.raises(PoleAtEvaluationPoint):
        evaluate_specialized(s, 0.0)


def test_specialize_rejects_fractional_n():
    with pytest.raises(ValueError):
        specialize("sin", 2, 1.5)


@pytest.mark.parametrize("family", FAMILIES)
def test_specialization_matches_generic(family):
    rng = random.Random(7)
    for k in range(0, 11):
        for n in range(0, 9):
            spec = specialize(family, k, n)
            assert spec.reduced_exponent >= 0
            expr = build_expression(family, k)
            for _ in range(5):
                x = rng.uniform(0.2, 1.3)
                assert rel(evaluate_specialized(spec, x), evaluate(expr, n, x)) <= 1e-12


def test_sin_cycle():
    for k in range(13):
        for x in (-1.1, 0.25, 2.0):
            got = evaluate(build_expression("sin", k), 1, x)
            assert abs(got - math.sin(x + k * math.pi / 2)) <= 1e-10


def test_zero_power():
    for fam in FAMILIES:
        for form in Form:
            assert evaluate(build_expression(fam, 0, form), 0, 0.37) == 1
            for k in range(1, 8):
                assert evaluate(build_expression(fam, k, form), 0, 0.37) == 0


def test_finite_difference_examples():
    want = 3 * math.sin(0.5) ** 2 * math.cos(0.5)
    assert finite_difference("sin", 3, 1, 0.5, 1e-2) == pytest.approx(want, abs=1e-5)
    got = finite_difference("sinh", 4, 3, 0.8, 1e-2)
    assert rel(got, evaluate(build_expression("sinh", 3), 4, 0.8).real) <= 1e-5
    assert finite_difference("cos", 0, 2, 1.0, 1e-2) == pytest.approx(0, abs=1e-5)


def test_finite_difference_errors():
    with pytest.raises(StepTooSmall):
        finite_difference("sin", 2, 1, 0.5, 1e-7)
    with pytest.raises(PoleNearby):
        finite_difference("sin", -1, 1, 0.05, 1e-2)
    with pytest.raises(PoleNearby):
        finite_difference("sinh", -2, 2, 1e-9)
    with pytest.raises(ValueError):
        finite_difference("sin", 2, 7, 0.5)
    with pytest.raises(ValueError):
        finite_difference("sin", 2, 1, 0.5 + 0.1j)


@pytest.mark.parametrize("family", FAMILIES)
def test_derivative_chaining(family):
    # numerically differentiating the k-th derivative gives the (k+1)-th
    for k in range(0, 6):
        nxt = build_expression(family, k + 1)
        expr = build_expression(family, k)
        for n in (0, 2, 5, 8):
            for x in (0.9, -0.3, 1.7):
                h = 1e-3
                num = (evaluate(expr, n, x + h).real - evaluate(expr, n, x - h).real) / (2 * h)
                fine = (evaluate(expr, n, x + h / 2).real - evaluate(expr, n, x - h / 2).real) / h
                num = (4 * fine - num) / 3
                assert rel(num, evaluate(nxt, n, x).real) <= 1e-4


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("k", range(0, 9))
def test_final_and_intermediate_against_high_precision(family, k):
    fn = {"sin": mpmath.sin, "cos": mpmath.cos, "sinh": mpmath.sinh, "cosh": mpmath.cosh}[family.value]
    mpmath.mp.dps = 40
    for n in (-3, 2, 7):
        for x in (0.7, -1.2, 0.3 + 0.4j):
            want = complex(mpmath.diff(lambda t: fn(t) ** n, mpmath.mpmathify(x), k))
            for form in Form:
                got = evaluate(build_expression(family, k, form), n, x)
                assert rel(got, want) <= 1e-10
