"""Adaptive numerical integration on finite intervals and on [0, inf).

The engine is a globally adaptive nested Gauss rule: each interval is
estimated with 7-point and 15-point Gauss-Legendre rules and the difference
serves as the local error; the worst interval is bisected until the summed
error meets the tolerance.  Semi-infinite integrals are split into an
adaptive finite part plus an analytic exponential tail bound.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from mpmath import mp, mpf

from .errors import ConvergenceError, DomainError

MAX_SUBDIVISIONS = 2000

LOW_ORDER = 7
HIGH_ORDER = 15


@dataclass(frozen=True)
class IntegrandSpec:
    """A pure integrand with decay/origin metadata.

    ``decay_rate`` is the dominant exp(-r*t) rate for t -> inf (0 if none);
    ``origin_order`` the leading power of t as t -> 0+ (> -1, integrable).
    ``evaluate`` must be pure: the engine may reuse and reorder calls freely.
    """

    evaluate: Callable
    decay_rate: float = 0.0
    origin_order: int = 0

    def __post_init__(self):
        if self.origin_order <= -1:
            raise DomainError("origin_order must exceed -1 for integrability")


@dataclass(frozen=True)
class QuadratureResult:
    value: mpf
    error_estimate: float
    evaluations: int


@lru_cache(maxsize=None)
def _gauss_rule(order: int, prec_bits: int):
    """Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration."""
    with mp.workprec(prec_bits + 40):
        nodes = []
        for i in range(1, order + 1):
            x = mp.cos(mp.pi * (i - mpf(1) / 4) / (order + mpf(1) / 2))
            for _ in range(60):
                p0, p1 = mpf(1), x
                for k in range(2, order + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = order * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < mpf(2) ** (-prec_bits - 20):
                    break
            p0, p1 = mpf(1), x
            for k in range(2, order + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = order * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.append((+x, +w))
    return tuple(nodes)


def _fixed_gauss(f, a, b, order):
    half = (b - a) / 2
    mid = (a + b) / 2
    total = mpf(0)
    for x, w in _gauss_rule(order, mp.prec):
        total += w * f(mid + half * x)
    return half * total


def _transform_origin(f: IntegrandSpec, b):
    # t = u**2 regularizes an integrable algebraic singularity at 0.
    g = f.evaluate

    def evaluate(u):
        return g(u * u) * 2 * u

    return evaluate, mp.sqrt(b)


def integrate_finite(f: IntegrandSpec, a, b, tol: float) -> QuadratureResult:
    """Adaptive integral of f over (a, b) with absolute tolerance ``tol``."""
    a, b = mpf(a), mpf(b)
    if not a < b:
        raise DomainError("integrate_finite requires a < b")
    if tol <= 0:
        raise DomainError("tolerance must be positive")

    func = f.evaluate
    if a == 0 and -1 < f.origin_order < 0:
        func, b = _transform_origin(f, b)
        a = mpf(0)

    evaluations = 0

    def estimate(lo, hi):
        nonlocal evaluations
        low = _fixed_gauss(func, lo, hi, LOW_ORDER)
        high = _fixed_gauss(func, lo, hi, HIGH_ORDER)
        evaluations += LOW_ORDER + HIGH_ORDER
        return high, abs(high - low)

    value, err = estimate(a, b)
    # Heap of (-error, tiebreak, lo, hi, value, error).
    counter = 0
    heap = [(-err, counter, a, b, value, err)]
    total_value = value
    total_err = err
    splits = 0
    while total_err > tol and heap:
        if splits >= MAX_SUBDIVISIONS:
            raise ConvergenceError(
                "max subdivisions reached in integrate_finite",
                best=total_value,
                error_estimate=float(total_err),
            )
        _, _, lo, hi, val, e = heapq.heappop(heap)
        mid = (lo + hi) / 2
        lv, le = estimate(lo, mid)
        rv, re = estimate(mid, hi)
        total_value += lv + rv - val
        total_err += le + re - e
        counter += 1
        heapq.heappush(heap, (-le, counter, lo, mid, lv, le))
        counter += 1
        heapq.heappush(heap, (-re, counter, mid, hi, rv, re))
        splits += 1
    return QuadratureResult(
        value=total_value, error_estimate=float(total_err), evaluations=evaluations
    )


def _tail_cutoff(f: IntegrandSpec, tol: float):
    """Pick T with an explicit exponential tail bound <= tol/2.

    For integrands bounded by |f(T)| * exp(-r (t-T)) * polynomial growth,
    int_T^inf |f| <= 2 |f(T)| / r once r*T clears twice the polynomial
    degree (incomplete-gamma comparison); T is grown until that holds.
    """
    r = f.decay_rate
    T = max(1.0, 2.0 / r, 2.0 * (f.origin_order + 4) / r)
    bound = None
    for _ in range(200):
        bound = 2 * abs(f.evaluate(mpf(T))) / r
        if bound <= tol / 2:
            return mpf(T), bound
        T *= 1.4
    raise ConvergenceError(
        "could not find a tail cutoff meeting the tolerance",
        best=None,
        error_estimate=float(bound),
    )


def integrate_semi_infinite(f: IntegrandSpec, tol: float) -> QuadratureResult:
    """Integral of f over [0, inf) for exponentially decaying integrands."""
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if f.decay_rate <= 0:
        raise DomainError(
            "integrate_semi_infinite requires a positive declared decay_rate"
        )
    T, tail_bound = _tail_cutoff(f, tol)
    finite = integrate_finite(f, 0, T, tol / 2)
    return QuadratureResult(
        value=finite.value,
        error_estimate=finite.error_estimate + float(tail_bound),
        evaluations=finite.evaluations,
    )
