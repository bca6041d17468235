"""Polynomial, rational-function, and symmetric-function arithmetic."""

import random
from fractions import Fraction as F

import pytest

from sgw.errors import DimensionError, DomainError
from sgw.exact import LinForm, Poly, RatFunc, complete_homogeneous, rational_from_str, rational_to_str


def tau(i, num_tau=2):
    return Poly.tau(num_tau, i)


def test_monomial_product():
    assert tau(0) * tau(1) == Poly(2, {(1, 1, 0): F(1)})


def test_lambda_squares_to_zero():
    lam = Poly.lam(2)
    assert (lam * lam).is_zero()


def test_difference_of_squares():
    a, b = tau(0), tau(1)
    assert (a - b) * (a + b) == a * a - b * b


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionError):
        Poly.tau(1, 0) * Poly.tau(2, 0)


def test_poly_eval_examples():
    assert (tau(1, 2) - tau(0, 2)).eval([0, 1]) == 1
    assert (tau(0, 2) * tau(1, 2)).eval([F(2, 3), 3]) == 2
    assert Poly.lam(2).eval([5, 7], 0) == 0


def test_rational_strings():
    assert rational_to_str(F(-1, 2)) == "-1/2"
    assert rational_to_str(F(4, 2)) == "2"
    assert rational_from_str("-3/6") == F(-1, 2)
    assert rational_from_str("7") == 7


def test_poly_str_is_canonical():
    p = tau(1) ** 2 - tau(0).scale(F(1, 2)) + Poly.lam(2) + Poly.one(2)
    assert str(p) == "tau1^2 + lam - 1/2*tau0 + 1"
    assert str(Poly.zero(3)) == "0"


# -- complete homogeneous ----------------------------------------------


def brute_force_h(c, weights, num_tau):
    """Coefficient of t^c in prod_i sum_{j<=c} (w_i t)^j, truncated at t^c."""
    series = [Poly.one(num_tau)] + [Poly.zero(num_tau)] * c
    for w in weights:
        wp = w.to_poly(num_tau)
        powers = [Poly.one(num_tau)]
        for _ in range(c):
            powers.append(powers[-1] * wp)
        new = [Poly.zero(num_tau) for _ in range(c + 1)]
        for i in range(c + 1):
            for j in range(c + 1 - i):
                new[i + j] = new[i + j] + series[i] * powers[j]
        series = new
    return series[c]


def test_h_zero_is_one():
    assert complete_homogeneous(0, [LinForm.make({0: 3})], 1) == Poly.one(1)
    assert complete_homogeneous(0, [], 4) == Poly.one(4)


def test_h_one_is_sum():
    w1 = LinForm.make({0: 1})
    w2 = LinForm.make({1: F(1, 2)}, lam=1)
    expect = w1.to_poly(2) + w2.to_poly(2)
    assert complete_homogeneous(1, [w1, w2], 2) == expect


def test_h_two_nilpotent_pair_vanishes():
    weights = [LinForm.zero(), LinForm.make(lam=F(-1, 2))]
    assert complete_homogeneous(2, weights, 1).is_zero()


def test_h_two_single_weight_squares():
    w = LinForm.make({0: 2, 1: -1})
    assert complete_homogeneous(2, [w], 2) == w.to_poly(2) * w.to_poly(2)


def random_linform(rng, num_tau):
    taus = {i: F(rng.randint(-3, 3), rng.randint(1, 3)) for i in range(num_tau)}
    lam = F(rng.randint(-2, 2), 2) if rng.random() < 0.4 else F(0)
    return LinForm.make(taus, lam=lam)


def test_h_matches_brute_force_series():
    rng = random.Random(20)
    for _ in range(60):
        num_tau = rng.randint(1, 3)
        weights = [random_linform(rng, num_tau) for _ in range(rng.randint(0, 6))]
        c = rng.randint(0, 4)
        assert complete_homogeneous(c, weights, num_tau) == brute_force_h(c, weights, num_tau)


# -- ring laws and lambda truncation ------------------------------------


def random_poly(rng, num_tau):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        mono = tuple(rng.randint(0, 2) for _ in range(num_tau)) + (rng.randint(0, 1),)
        terms[mono] = F(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(num_tau, terms)


def mul_without_truncation(a, b):
    """Reference product keeping all lam powers."""
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            out[mono] = out.get(mono, F(0)) + ca * cb
    return {m: c for m, c in out.items() if c}


def test_poly_ring_laws():
    rng = random.Random(7)
    for _ in range(40):
        num_tau = rng.randint(1, 3)
        a, b, c = (random_poly(rng, num_tau) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_truncation_drops_exactly_high_lambda():
    rng = random.Random(8)
    for _ in range(40):
        num_tau = rng.randint(1, 3)
        a, b = random_poly(rng, num_tau), random_poly(rng, num_tau)
        reference = mul_without_truncation(a, b)
        truncated = {m: c for m, c in reference.items() if m[-1] < 2}
        assert (a * b).terms == truncated


# -- rational functions --------------------------------------------------


def test_ratfunc_cancellation_to_zero():
    one = Poly.one(2)
    u = tau(1) - tau(0)
    total = RatFunc(one, u) + RatFunc(one, -u)
    assert total.is_zero()


def test_ratfunc_weighted_sum_is_one():
    u = tau(1) - tau(0)
    total = RatFunc(tau(1), u) + RatFunc(tau(0), -u)
    assert total.constant_value() == 1


def test_ratfunc_mul_inverse():
    x, y = tau(0), tau(1)
    assert (RatFunc(x, y) * RatFunc(y, x)).constant_value() == 1
    rng = random.Random(9)
    for _ in range(25):
        num = random_poly(rng, 2)
        den = random_poly(rng, 2)
        num0, _ = num.lambda_parts()
        den0, _ = den.lambda_parts()
        if num0.is_zero() or den0.is_zero():
            continue
        r = RatFunc(num0, den0)
        assert (r * r.inverse()).constant_value() == 1


def test_ratfunc_rejects_lambda_denominator():
    with pytest.raises(DomainError):
        RatFunc(Poly.one(1), Poly.lam(1))


def test_ratfunc_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly.one(1), Poly.zero(1))


def test_ratfunc_canonical_denominator():
    u = (tau(1) - tau(0)).scale(F(-3, 2))
    r = RatFunc(tau(0), u)
    assert r.den.leading_coeff() > 0
    assert r.den.content() == 1


def test_ratfunc_str_is_canonical():
    u = (tau(1) - tau(0)).scale(F(-3, 2))
    assert str(RatFunc(tau(0), u)) == "(-2/3*tau0) / (tau1 - tau0)"
    assert str(RatFunc(tau(0) * Poly.const(2, 5), tau(0))) == "5"
