"""Degree-one localization sums for super Gromov-Witten numbers of P^n.

Each fixed graph contributes

    (-1)^c * h_c(odd normal weights) * ev-pullback * (inverse Euler class)

where c is the codegree in hyperplane-power units; the result is a single
kappa-monomial with exponent -(rank) - (dimension) + (total insertion
degree).  Point-type loci take the lam-free part, loci isomorphic to the
four-pointed moduli curve take the lam-coefficient.  The sum is a constant
rational function of the torus characters, so the default strategy
evaluates it at several seeded generic integer tuples and insists the
values agree; the symbolic strategy (three or fewer characters) builds the
full rational-function sum and checks it collapses to a constant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DomainError, InconsistencyError, ResampleSignal, UnsupportedError
from .exact import Poly, RatFunc, complete_homogeneous
from .graphs import FixedGraph, enumerate_graphs, euler_data, ev_pullback, geometry
from .point import Invariant

DEFAULT_SEED = 1729
SAMPLE_RANGE = 1000
MAX_RESAMPLES = 100

LamValue = tuple[Fraction, Fraction]  # value a + b*lam with lam^2 = 0


@dataclass(frozen=True)
class LocalizationJob:
    n: int
    k: int
    classes: tuple[int, ...]
    d: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if self.k not in (1, 2, 3):
            raise UnsupportedError("localization implemented for k in {1, 2, 3}")
        if self.d != 1:
            raise UnsupportedError("localization implemented for degree 1")
        if len(self.classes) != self.k:
            raise DomainError(f"expected {self.k} classes")
        for a in self.classes:
            if not 0 <= a <= self.n:
                raise DomainError(f"class exponent {a} outside [0, {self.n}]")

    @property
    def d_kd(self) -> int:
        return self.n + self.d * (self.n + 1) + self.k - 3

    @property
    def r_kd(self) -> int:
        return self.d * (self.n + 1) + self.k - 2

    @property
    def total_class_degree(self) -> int:
        return sum(self.classes)

    @property
    def c(self) -> int:
        return self.d_kd - self.total_class_degree

    @property
    def kappa_exp(self) -> int:
        return -self.r_kd - self.d_kd + self.total_class_degree

    @property
    def graded_zero(self) -> bool:
        return self.c < 0


def _lam_mul(x: LamValue, y: LamValue) -> LamValue:
    return (x[0] * y[0], x[0] * y[1] + x[1] * y[0])


def _h_values(c: int, weights: Sequence[LamValue]) -> LamValue:
    """h_c of numeric weights in the ring Q[lam]/(lam^2)."""
    h: list[LamValue] = [(Fraction(1), Fraction(0))] + [(Fraction(0), Fraction(0))] * c
    for w in weights:
        for j in range(1, c + 1):
            prod = _lam_mul(w, h[j - 1])
            h[j] = (h[j][0] + prod[0], h[j][1] + prod[1])
    return h[c]


def graph_contribution(g: FixedGraph, job: LocalizationJob, tau: Sequence[Fraction]) -> Fraction:
    """Exact value of one graph's summand at the given character tuple."""
    if g.n != job.n or g.k != job.k:
        raise DomainError("graph and job disagree on (n, k)")
    taus = [Fraction(t) for t in tau]
    data = euler_data(g)
    den = Fraction(data.den_sign)
    for (i, j), mult in data.den_factors:
        den *= (taus[i] - taus[j]) ** mult
    if den == 0:
        raise ResampleSignal(f"denominator of {g.label()} vanishes at {taus}")
    et: LamValue = (
        data.num_lambda_free.eval(taus, 0) / den,
        data.num_lambda_coeff.eval(taus, 0) / den,
    )

    weights: list[LamValue] = [(w.eval_tau(taus), w.lam) for w in data.susy_weights]
    h = _h_values(job.c, weights)
    ev = ev_pullback(g, job.classes).eval(taus, 0)
    sign = Fraction(-1 if job.c % 2 else 1)
    value = _lam_mul(h, et)
    value = (sign * ev * value[0], sign * ev * value[1])
    if geometry(g).moduli_kind == "m04":
        return value[1]
    if value[1] != 0:
        raise InconsistencyError(f"lam survived on the point-type locus {g.label()}")
    return value[0]


def _symbolic_sum(graphs: Sequence[FixedGraph], job: LocalizationJob) -> RatFunc:
    """Exact rational-function sum over a shared factored denominator.

    Every graph denominator divides prod_{i<j} (tau_i - tau_j)^k, so the
    sum is accumulated as one numerator over that fixed product; this
    avoids the degree blow-up of pairwise cross-multiplication.
    """
    num_tau = job.n + 1
    pairs = list(combinations(range(num_tau), 2))
    shared = Poly.one(num_tau)
    diffs = {pair: Poly.tau(num_tau, pair[0]) - Poly.tau(num_tau, pair[1]) for pair in pairs}
    for pair in pairs:
        shared = shared * diffs[pair] ** job.k

    total = Poly.zero(num_tau)
    for g in graphs:
        data = euler_data(g)
        mults = dict(data.den_factors)
        cofactor = Poly.const(num_tau, data.den_sign)
        for pair in pairs:
            cofactor = cofactor * diffs[pair] ** (job.k - mults.get(pair, 0))
        numerator = data.num_lambda_free + Poly.lam(num_tau) * data.num_lambda_coeff
        integrand = complete_homogeneous(job.c, data.susy_weights, num_tau)
        integrand = integrand * ev_pullback(g, job.classes) * numerator * cofactor
        if job.c % 2:
            integrand = -integrand
        if geometry(g).moduli_kind == "m04":
            integrand = integrand.lambda_coefficient()
        elif not integrand.is_lambda_free():
            raise InconsistencyError(f"lam survived on the point-type locus {g.label()}")
        total = total + integrand
    return RatFunc(total, shared)


def sample_tau(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Distinct integer characters in [-SAMPLE_RANGE, SAMPLE_RANGE]."""
    return tuple(Fraction(v) for v in rng.sample(range(-SAMPLE_RANGE, SAMPLE_RANGE + 1), n + 1))


def _evaluate_once(graphs: Sequence[FixedGraph], job: LocalizationJob, tau) -> Fraction:
    return sum((graph_contribution(g, job, tau) for g in graphs), Fraction(0))


def invariant(
    n: int,
    k: int,
    classes: Sequence[int],
    strategy: str = "evaluate",
    samples: int = 3,
    seed: int = DEFAULT_SEED,
    trace: list | None = None,
) -> Invariant:
    """Degree-one k-point invariant of P^n with hyperplane-power insertions.

    ``strategy`` is "evaluate" (seeded generic evaluations, all required to
    agree) or "symbolic" (full rational-function sum, n <= 2).  ``trace``,
    if given, receives per-sample diagnostics.
    """
    job = LocalizationJob(n=n, k=k, classes=tuple(classes))
    if job.graded_zero:
        return Invariant.zero()
    graphs = enumerate_graphs(n, k)

    if strategy == "symbolic":
        if n > 2:
            raise DomainError("symbolic strategy supported for n <= 2")
        total = _symbolic_sum(graphs, job)
        constant = total.constant_value()
        if constant is None:
            raise InconsistencyError(f"symbolic sum is not constant: {total}")
        return Invariant.of(constant, job.kappa_exp)

    if strategy != "evaluate":
        raise DomainError(f"unknown strategy {strategy!r}")
    if samples < 2:
        raise DomainError("evaluate strategy needs at least 2 samples")
    rng = random.Random(seed)
    values = []
    for _ in range(samples):
        for _attempt in range(MAX_RESAMPLES):
            tau = sample_tau(rng, n)
            try:
                value = _evaluate_once(graphs, job, tau)
            except ResampleSignal:
                continue
            break
        else:
            raise InconsistencyError("could not find a sample with nonvanishing denominators")
        values.append(value)
        if trace is not None:
            trace.append({"tau": [str(t) for t in tau], "value": str(value)})
    if len(set(values)) != 1:
        raise InconsistencyError(
            f"evaluations disagree across samples: {[str(v) for v in values]}"
        )
    return Invariant.of(values[0], job.kappa_exp)


def check_extension(n: int, k: int, classes: Sequence[int], seed: int = DEFAULT_SEED) -> bool:
    """Codegree-zero three-point values must be exactly kappa^-(n+2)."""
    job = LocalizationJob(n=n, k=k, classes=tuple(classes))
    if k != 3:
        raise DomainError("extension check applies to three-point invariants")
    if job.c != 0:
        raise DomainError("extension check needs codegree zero")
    result = invariant(n, k, classes, seed=seed)
    return result == Invariant.of(1, -job.r_kd)
