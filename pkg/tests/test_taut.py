"""Pushforward calculus on genus-zero moduli spaces."""

import random
from fractions import Fraction as F
from math import comb

import pytest

from sgw.errors import DomainError
from sgw.taut import TautExpr, TautMonomial, integrate, integrate_monomial, pushforward_step


def expr(l, psi=(), kappa=(), coeff=1):
    return TautExpr(l, [TautMonomial.make(l, psi=psi, kappa=kappa, coeff=coeff)])


def test_psi4_pushes_to_the_point_count():
    down = pushforward_step(expr(4, psi=[(0, 1)]))
    assert down == expr(3, coeff=1)
    assert integrate(expr(4, psi=[(0, 1)])) == 1


def test_pulled_psi_times_top_psi():
    down = pushforward_step(expr(5, psi=[(1, 1), (0, 1)]))
    assert down == expr(4, psi=[(0, 1)], coeff=2)


def test_pullback_alone_pushes_to_zero():
    down = pushforward_step(expr(5, psi=[(1, 1)]))
    assert down == TautExpr(4)


def test_pushforward_needs_four_points():
    with pytest.raises(DomainError):
        pushforward_step(expr(3))


def test_worked_integrals():
    assert integrate(expr(5, psi=[(0, 2)])) == 1
    assert integrate(expr(6, psi=[(2, 1), (1, 1), (0, 1)])) == 6
    assert integrate(expr(6, psi=[(1, 1), (0, 2)])) == 3
    assert integrate(expr(3)) == 1


def test_all_reference_monomials():
    golden = {
        (4, (1,)): 1,
        (5, (1, 1)): 2,
        (5, (0, 2)): 1,
        (6, (1, 1, 1)): 6,
        (6, (1, 0, 2)): 2,
        (6, (0, 1, 2)): 3,
        (6, (0, 0, 3)): 1,
    }
    for (k, exps), value in golden.items():
        assert integrate_monomial(k, exps) == value


def test_degree_gate():
    rng = random.Random(13)
    for _ in range(60):
        l = rng.randint(4, 8)
        psi = []
        for depth in rng.sample(range(l - 3), rng.randint(0, l - 3)):
            psi.append((depth, rng.randint(1, 2)))
        kappa = [(rng.randint(1, 3), 1)] if rng.random() < 0.5 else []
        mono = TautMonomial.make(l, psi=psi, kappa=kappa)
        if mono.degree() != l - 3:
            assert integrate(TautExpr(l, [mono])) == 0


def test_linearity():
    rng = random.Random(14)
    for _ in range(20):
        l = rng.randint(4, 7)
        e1 = expr(l, psi=[(0, rng.randint(1, l - 3))])
        depth = rng.randint(0, l - 4)
        e2 = expr(l, psi=[(depth, 1)], kappa=[(1, 1)] if rng.random() < 0.5 else [])
        a, b = F(rng.randint(-3, 3)), F(rng.randint(-3, 3))
        combined = e1.scale(a) + e2.scale(b)
        assert integrate(combined) == a * integrate(e1) + b * integrate(e2)


def test_kappa_zero_never_stored():
    with pytest.raises(DomainError):
        TautMonomial.make(5, kappa=[(0, 1)])


def test_duplicate_depths_rejected():
    with pytest.raises(DomainError):
        TautMonomial.make(6, psi=[(1, 1), (1, 2)])


# -- independent oracle --------------------------------------------------
# A from-scratch recursion over explicit dictionaries, no TautExpr machinery.


def oracle_integrate(l, psi, kappa, coeff=F(1)):
    psi = {m: p for m, p in psi.items() if p}
    kappa = {a: p for a, p in kappa.items() if p}
    if l == 3:
        return coeff if not psi and not kappa else F(0)
    branches = [({}, 0, 1)]
    for a, p in kappa.items():
        grown = []
        for rest, extra, weight in branches:
            for t in range(p + 1):
                kept = dict(rest)
                if p - t:
                    kept[a] = kept.get(a, 0) + (p - t)
                grown.append((kept, extra + a * t, weight * comb(p, t)))
        branches = grown
    total = F(0)
    top = psi.get(0, 0)
    for rest_kappa, extra, weight in branches:
        s = top + extra
        if s == 0:
            continue
        down_psi = {m - 1: p for m, p in psi.items() if m >= 1}
        down_kappa = dict(rest_kappa)
        scale = F(1)
        if s == 1:
            scale = F(l - 3)
        else:
            down_kappa[s - 1] = down_kappa.get(s - 1, 0) + 1
        total += oracle_integrate(l - 1, down_psi, down_kappa, coeff * weight * scale)
    return total


def oracle_monomial(k, exps):
    psi = {k - j: e for j, e in zip(range(4, k + 1), exps) if e}
    return oracle_integrate(k, psi, {})


def test_oracle_agrees_on_random_monomials():
    rng = random.Random(15)
    for _ in range(80):
        l = rng.randint(4, 8)
        psi = {}
        for depth in rng.sample(range(l - 3), rng.randint(0, l - 3)):
            psi[depth] = rng.randint(1, 3)
        kappa = {}
        if rng.random() < 0.6:
            kappa[rng.randint(1, 3)] = rng.randint(1, 2)
        mono = TautMonomial.make(l, psi=psi.items(), kappa=kappa.items())
        assert integrate(TautExpr(l, [mono])) == oracle_integrate(l, psi, kappa)
