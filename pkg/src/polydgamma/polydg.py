"""Logarithmic derivatives of the double gamma (Barnes G) function.

The central object is psi2^(n)(x), n >= 2, defined canonically by the series

    psi2^(n)(x) = (-1)^(n+1) n! sum_{k>=0} (1+k) / (x+k)^(n+1),   x > 0,

together with the first logarithmic derivative psi2(x) (its own series) and
log G(x) itself.  psi2^(n) is evaluated by four independent routes - direct
series, polygamma combination, Laplace-transform quadrature, and a Bernoulli
asymptotic expansion with an exact integral remainder - which cross-check
one another.  Differentiation in x is closed: d/dx psi2^(n) = psi2^(n+1),
so derivative-sign questions downstream reduce to direct evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp, mpf

from .errors import ConvergenceError, DomainError
from .quadrature import IntegrandSpec, integrate_semi_infinite
from .specfun import (
    BERNOULLI,
    CONSTANTS,
    DEFAULT_PRECISION,
    EvalResult,
    Precision,
    hurwitz_zeta,
    polygamma,
)

METHODS = ("series", "polygamma", "integral", "asymptotic", "auto")

# Auto dispatch: the direct series (with Euler-Maclaurin tail) is cheap and
# accurate for moderate x or high order; past the shift threshold the
# Bernoulli expansion with the remainder dropped is faster and its first
# omitted term is already negligible.
AUTO_SERIES_ORDER = 8


@dataclass(frozen=True)
class PolyDoubleArg:
    """Derivative order n >= 2 and argument x > 0."""

    n: int
    x: mpf

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("derivative order must be >= 2")
        object.__setattr__(self, "x", mpf(self.x))
        if not self.x > 0:
            raise DomainError("argument must be positive")


@dataclass(frozen=True)
class AsymptoticParams:
    """Number of Bernoulli blocks N and whether the exact remainder is added.

    With ``include_remainder`` the expansion is an identity, not merely
    asymptotic; without it the first omitted Bernoulli term bounds the error.
    """

    terms: int = 6
    include_remainder: bool = True
    remainder_tol: float = 1e-10

    def __post_init__(self):
        if not 1 <= self.terms <= BERNOULLI.capacity // 2:
            raise DomainError("terms must fit the Bernoulli table capacity")


@dataclass(frozen=True)
class Psi2Kernel:
    """Laplace density t^n / (1 - exp(-t))^2 of (-1)^(n+1) psi2^(n)."""

    n: int

    def density(self, t):
        t = mpf(t)
        if t <= 0:
            raise DomainError("kernel density is defined for t > 0")
        em = -mp.expm1(-t)  # 1 - exp(-t), no cancellation near 0
        return t ** self.n / (em * em)

    def damped(self, x):
        x = mpf(x)

        def evaluate(t):
            return mp.exp(-x * t) * self.density(t)

        return evaluate


def psi2_series(arg: PolyDoubleArg, prec: Precision = DEFAULT_PRECISION) -> EvalResult:
    """Canonical series evaluation; every other route is audited against it.

    The term (1+t)/(x+t)^(n+1) splits as (x+t)^-n + (1-x)(x+t)^-(n+1), so
    both the tail integral and all Euler-Maclaurin derivative corrections
    are available in closed form.
    """
    n, x = arg.n, arg.x
    c = 1 - x
    sign = mpf(-1) ** (n + 1)
    fact = mp.factorial(n)

    head_terms = max(8, int(mp.ceil(prec.shift_threshold + 10 - x)))
    if head_terms > prec.max_terms:
        raise ConvergenceError("series head exceeds max_terms in psi2_series")
    head = mpf(0)
    for k in range(head_terms):
        head += (1 + k) * (x + k) ** (-(n + 1))

    K = mpf(head_terms)
    base = x + K
    tail = base ** (1 - n) / (n - 1) + c * base ** (-n) / n  # integral comparison
    tail += (base ** (-n) + c * base ** (-(n + 1))) / 2
    err = abs(tail)
    prev = mpf("inf")
    for j in range(1, 15):
        q = 2 * j - 1
        deriv = (-1) ** q * (
            mp.rf(n, q) * base ** (-n - q) + c * mp.rf(n + 1, q) * base ** (-n - 1 - q)
        )
        term = BERNOULLI[2 * j] / mp.factorial(2 * j) * deriv
        tail -= term
        # The two powers can cancel exactly at isolated (x, j); demand two
        # consecutive small terms before trusting convergence, and report
        # the larger of the pair as the error.
        err = max(abs(term), prev) if prev != mpf("inf") else abs(term)
        threshold = max(mpf(prec.abs_tol) * mpf("1e-8"), mpf(10) ** (-mp.dps - 2))
        if abs(term) < threshold and prev < threshold:
            break
        prev = abs(term)
    value = sign * fact * (head + tail)
    return EvalResult(value=value, error=float(fact * err) + 1e-30, method="series")


def psi2_from_polygamma(
    arg: PolyDoubleArg, prec: Precision = DEFAULT_PRECISION
) -> EvalResult:
    """psi2^(n)(x) = -n psi^(n-1)(x) + (1-x) psi^(n)(x)."""
    n, x = arg.n, arg.x
    lo = polygamma(n - 1, x, prec)
    hi = polygamma(n, x, prec)
    value = -n * lo.value + (1 - x) * hi.value
    err = n * lo.error + abs(float(1 - x)) * hi.error
    return EvalResult(value=value, error=err + 1e-30, method="polygamma")


def psi2_zeta_form(arg: PolyDoubleArg, prec: Precision = DEFAULT_PRECISION) -> EvalResult:
    """Equivalent closed form (-1)^(n+1) n! (zeta(n,x) + (1-x) zeta(n+1,x))."""
    n, x = arg.n, arg.x
    za = hurwitz_zeta(n, x, prec)
    zb = hurwitz_zeta(n + 1, x, prec)
    fact = mp.factorial(n)
    value = mpf(-1) ** (n + 1) * fact * (za.value + (1 - x) * zb.value)
    err = float(fact) * (za.error + abs(float(1 - x)) * zb.error)
    return EvalResult(value=value, error=err + 1e-30, method="zeta-form")


def psi2_integral(arg: PolyDoubleArg, tol: float = 1e-10) -> EvalResult:
    """Quadrature of the Laplace representation with the positive kernel."""
    n, x = arg.n, arg.x
    kernel = Psi2Kernel(n)
    spec = IntegrandSpec(
        evaluate=kernel.damped(x), decay_rate=float(x), origin_order=n - 2
    )
    quad = integrate_semi_infinite(spec, tol)
    value = mpf(-1) ** (n + 1) * quad.value
    return EvalResult(value=value, error=quad.error_estimate, method="integral")


def _bernoulli_remainder(t, n_blocks: int):
    """t/(e^t - 1) minus its Bernoulli partial sum through degree 2N.

    Evaluated directly; cancellation near t = 0 only costs relative digits
    of a quantity whose absolute size is already far below tolerance.
    """
    t = mpf(t)
    lead = t / mp.expm1(t)
    part = mpf(0)
    tk = mpf(1)
    for k in range(0, 2 * n_blocks + 1):
        if k > 0:
            tk *= t / k
        part += BERNOULLI[k] * tk
    return lead - part


def asymptotic_remainder(arg: PolyDoubleArg, params: AsymptoticParams) -> EvalResult:
    """Exact remainder term of the expansion, by semi-infinite quadrature.

    tau_n(x) = (-1)^n int_0^inf t^(n-2) e^(-xt)
               (t/(e^t-1) - sum_{k=0}^{2N} B_k t^k / k!) dt
    """
    n, x = arg.n, arg.x
    N = params.terms

    def evaluate(t):
        return t ** (n - 2) * mp.exp(-x * t) * _bernoulli_remainder(t, N)

    spec = IntegrandSpec(
        evaluate=evaluate, decay_rate=float(x), origin_order=n + 2 * N
    )
    quad = integrate_semi_infinite(spec, params.remainder_tol)
    return EvalResult(
        value=mpf(-1) ** n * quad.value,
        error=quad.error_estimate,
        method="remainder-quadrature",
    )


def asymptotic_bernoulli_sum(arg: PolyDoubleArg, n_blocks: int):
    """sigma_n(x): the Bernoulli block sum of the expansion.

    sigma_n(x) = (-1)^n sum_{k=1}^{N-1} B_{2k+2} (2k+n)! /
                 ((2k+2)! x^(2k+n+1)).
    Also returns the magnitude of the first omitted block (k = N-1 term of
    the next truncation), the natural error estimate with the remainder off.
    """
    n, x = arg.n, arg.x
    sign = mpf(-1) ** n
    total = mpf(0)
    for k in range(1, n_blocks):
        total += (
            BERNOULLI[2 * k + 2]
            * mp.factorial(2 * k + n)
            / (mp.factorial(2 * k + 2) * x ** (2 * k + n + 1))
        )
    k = n_blocks
    omitted = abs(
        BERNOULLI[2 * k + 2]
        * mp.factorial(2 * k + n)
        / (mp.factorial(2 * k + 2) * x ** (2 * k + n + 1))
    )
    return sign * total, omitted


def psi2_asymptotic(
    arg: PolyDoubleArg, params: AsymptoticParams = AsymptoticParams()
) -> EvalResult:
    """psi2^(n)(x+1) from the shifted-argument expansion at x = arg.x.

    Closed-form part (n-fold derivative of the first-derivative expansion):

        -x psi^(n)(x+1) - (n+1) psi^(n-1)(x+1)
        + (-1)^n (n-2)!/x^(n-1) + (-1)^(n-1) (n-1)!/(2 x^n)
        + (-1)^n n!/(12 x^(n+1))

    plus sigma_n(x) and, when requested, the exact remainder tau_n(x).
    """
    n, x = arg.n, arg.x
    pg_hi = polygamma(n, x + 1)
    pg_lo = polygamma(n - 1, x + 1)
    value = -x * pg_hi.value - (n + 1) * pg_lo.value
    value += mpf(-1) ** n * mp.factorial(n - 2) / x ** (n - 1)
    value += mpf(-1) ** (n - 1) * mp.factorial(n - 1) / (2 * x ** n)
    value += mpf(-1) ** n * mp.factorial(n) / (12 * x ** (n + 1))
    sigma, omitted = asymptotic_bernoulli_sum(arg, params.terms)
    value += sigma
    err = float(x) * pg_hi.error + (n + 1) * pg_lo.error
    if params.include_remainder:
        tau = asymptotic_remainder(arg, params)
        value += tau.value
        err += tau.error
    else:
        err += float(omitted)
    return EvalResult(value=value, error=err + 1e-30, method="asymptotic")


def _via_asymptotic(arg: PolyDoubleArg, prec: Precision) -> EvalResult:
    # psi2^(n)(x) = expansion at x-1; recurrence-shift first if x is small.
    n, x = arg.n, arg.x
    shift = max(0, int(mp.ceil(prec.shift_threshold + 1 - x)))
    head = mpf(0)
    head_err = 0.0
    for i in range(shift):
        pg = polygamma(n, x + i, prec)
        head += pg.value
        head_err += pg.error
    base = psi2_asymptotic(
        PolyDoubleArg(n, x + shift - 1),
        AsymptoticParams(terms=6, include_remainder=False),
    )
    return EvalResult(
        value=head + base.value, error=head_err + base.error, method="asymptotic"
    )


def psi2_eval(
    arg: PolyDoubleArg,
    method: str = "auto",
    prec: Precision = DEFAULT_PRECISION,
) -> EvalResult:
    """Dispatch to one of the evaluation routes; ``auto`` picks per argument."""
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "series":
        return psi2_series(arg, prec)
    if method == "polygamma":
        return psi2_from_polygamma(arg, prec)
    if method == "integral":
        return psi2_integral(arg, tol=prec.abs_tol)
    if method == "asymptotic":
        return _via_asymptotic(arg, prec)
    # auto
    if arg.x <= prec.shift_threshold or arg.n >= AUTO_SERIES_ORDER:
        return psi2_series(arg, prec)
    return _via_asymptotic(arg, prec)


@lru_cache(maxsize=200000)
def _cached_value(n: int, x: mpf) -> EvalResult:
    return psi2_eval(PolyDoubleArg(n, x))


def psi2_cached(n: int, x) -> EvalResult:
    """Memoized auto-dispatch evaluation at default precision."""
    return _cached_value(n, mpf(x))


def psi2_value(n: int, x) -> mpf:
    return psi2_cached(n, x).value


def psi2_didouble(x, prec: Precision = DEFAULT_PRECISION) -> EvalResult:
    """First logarithmic derivative psi2(x), by its own series:

        -log(2 pi)/2 + (1+gamma) x + 1/2 - sum_{k>=0} (x-1)^2/((k+1)(x+k)).

    The summand partial-fractions into (x-1) [1/(t+1) - 1/(t+x)], giving the
    tail integral and all Euler-Maclaurin corrections in closed form; raw
    k^-2 decay would otherwise be hopeless at 1e-12.
    """
    x = mpf(x)
    if x <= 0:
        raise DomainError("psi2_didouble requires x > 0")
    base_part = -CONSTANTS.log_two_pi / 2 + (1 + CONSTANTS.euler_gamma) * x + mpf(1) / 2
    if x == 1:
        return EvalResult(value=base_part, error=1e-30, method="series-em")

    head_terms = max(16, int(mp.ceil(prec.shift_threshold + 10 - x)))
    head = mpf(0)
    for k in range(head_terms):
        head += (x - 1) ** 2 / ((k + 1) * (x + k))

    K = mpf(head_terms)
    s = x - 1

    def f(t):
        return s * (1 / (t + 1) - 1 / (t + x))

    def f_deriv(q, t):
        return s * (-1) ** q * mp.factorial(q) * (
            (t + 1) ** (-q - 1) - (t + x) ** (-q - 1)
        )

    tail = s * mp.log((K + x) / (K + 1)) + f(K) / 2
    err = abs(f(K))
    for j in range(1, 15):
        term = BERNOULLI[2 * j] / mp.factorial(2 * j) * f_deriv(2 * j - 1, K)
        tail -= term
        err = abs(term)
        if err < mpf(prec.abs_tol) * mpf("1e-8") or err < mpf(10) ** (-mp.dps - 2):
            break
    return EvalResult(
        value=base_part - (head + tail), error=float(err) + 1e-30, method="series-em"
    )


def log_barnes_g(x, prec: Precision = DEFAULT_PRECISION) -> EvalResult:
    """log G(x) via the Weierstrass product at z = x - 1:

        log G(x) = (z/2) log(2 pi) - ((1+gamma) z^2 + z)/2
                   + sum_{k>=1} [ k log(1 + z/k) - z + z^2/(2k) ].

    Each product term expands as sum_{j>=3} (-1)^(j+1) z^j/(j k^(j-1)), so
    the tail beyond K sums to sum_j (-1)^(j+1) z^j/j * zeta(j-1, K+1);
    truncation is corrected by that closed form rather than accepting the
    raw k^-2 decay.
    """
    x = mpf(x)
    if x <= 0:
        raise DomainError("log_barnes_g requires x > 0")
    z = x - 1
    total = z / 2 * CONSTANTS.log_two_pi - ((1 + CONSTANTS.euler_gamma) * z * z + z) / 2
    if z == 0:
        return EvalResult(value=total, error=1e-30, method="weierstrass")

    K = max(64, int(mp.ceil(2 * abs(z))) + 16)
    for k in range(1, K + 1):
        total += k * mp.log1p(z / k) - z + z * z / (2 * k)

    err = mpf(0)
    zj = z ** 2
    for j in range(3, 200):
        zj *= z
        term = (-1) ** (j + 1) * zj / j * hurwitz_zeta(j - 1, K + 1, prec).value
        total += term
        err = abs(term)
        if err < mpf(prec.abs_tol) * mpf("1e-6") or err < mpf(10) ** (-mp.dps - 2):
            break
    else:
        raise ConvergenceError("tail correction did not converge in log_barnes_g")
    return EvalResult(value=total, error=float(err) + 1e-30, method="weierstrass")
