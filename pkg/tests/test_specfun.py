"""Special-function layer: Bernoulli numbers, Hurwitz zeta, polygamma,
log-gamma.  Frozen reference values were generated independently at 50
decimal digits and are trusted well beyond every tolerance used here."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from polydgamma import (
    BERNOULLI,
    CapacityError,
    DomainError,
    Precision,
    bernoulli,
    hurwitz_zeta,
    log_gamma,
    polygamma,
    polygamma_cached,
)

# Independent 50-digit oracles (frozen).
ORACLE = {
    ("zeta", 3, "1.5"): "0.41439832211715999779816713058",
    ("zeta", 5, "0.25"): "1024.34897452658057223159279802",
    ("psi", 0, "0.7"): "-1.22002355369793461474860724456",
    ("psi", 3, "2.5"): "0.22390584881725205125514750352",
    ("psi", 6, "0.4"): "-439523.164998806644320660161388",
    ("lgamma", "0.3"): "1.09579799481807552167716814237",
    ("lgamma", "15.25"): "25.8619499018485193582760523029",
}


class TestBernoulli:
    def test_known_exact_values(self):
        known = {
            0: Fraction(1),
            1: Fraction(-1, 2),
            2: Fraction(1, 6),
            4: Fraction(-1, 30),
            6: Fraction(1, 42),
            8: Fraction(-1, 30),
            10: Fraction(5, 66),
            12: Fraction(-691, 2730),
        }
        for k, v in known.items():
            assert BERNOULLI.exact(k) == v

    def test_odd_vanish(self):
        for k in range(3, BERNOULLI.capacity, 2):
            assert BERNOULLI.exact(k) == 0

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            bernoulli(BERNOULLI.capacity + 2)

    def test_negative_index(self):
        with pytest.raises(DomainError):
            BERNOULLI.exact(-1)


class TestHurwitzZeta:
    def test_oracles(self):
        for (_, s, a), ref in [(k, v) for k, v in ORACLE.items() if k[0] == "zeta"]:
            r = hurwitz_zeta(s, mpf(a))
            scale = max(1.0, abs(float(mpf(ref))))
            assert abs(r.value - mpf(ref)) < 1e-19 * scale
            # The reported error estimate must cover the true error.
            assert abs(r.value - mpf(ref)) <= max(2 * r.error, 1e-26)

    def test_riemann_special_case(self):
        # zeta(2, 1) = pi^2/6; s = 2 converges slowest, honest error ~1e-20.
        r = hurwitz_zeta(2, 1)
        assert abs(r.value - mp.pi ** 2 / 6) < 1e-19
        assert abs(r.value - mp.pi ** 2 / 6) <= 2 * r.error

    def test_domain(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(1, 1.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(3, 0.0)

    @settings(max_examples=30, deadline=None)
    @given(
        s=st.integers(min_value=2, max_value=8),
        a=st.floats(min_value=0.1, max_value=30.0),
    )
    def test_recurrence_property(self, s, a):
        # zeta(s, a) - zeta(s, a+1) = a^-s  (shift in mpf to avoid float64
        # rounding of a+1 perturbing the argument)
        a = mpf(a)
        lhs = hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1).value
        rhs = a ** (-s)
        assert abs(lhs - rhs) < 1e-18 * max(1.0, abs(float(rhs)))


class TestPolygamma:
    def test_oracles(self):
        for (_, n, x), ref in [(k, v) for k, v in ORACLE.items() if k[0] == "psi"]:
            r = polygamma(n, mpf(x))
            scale = max(1.0, abs(float(mpf(ref))))
            assert abs(r.value - mpf(ref)) < 1e-18 * scale

    def test_digamma_at_one(self):
        assert abs(polygamma(0, 1).value + mp.euler) < 1e-24

    def test_trigamma_at_one(self):
        assert abs(polygamma(1, 1).value - mp.pi ** 2 / 6) < 1e-24

    def test_domain(self):
        with pytest.raises(DomainError):
            polygamma(-1, 1.0)
        with pytest.raises(DomainError):
            polygamma(2, 0.0)

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(min_value=0, max_value=5),
        x=st.floats(min_value=0.1, max_value=20.0),
    )
    def test_reflection_free_recurrence(self, n, x):
        # psi^(n)(x+1) - psi^(n)(x) = (-1)^n n! / x^(n+1)
        x = mpf(x)
        lhs = polygamma(n, x + 1).value - polygamma(n, x).value
        rhs = mpf(-1) ** n * mp.factorial(n) / x ** (n + 1)
        scale = max(1.0, abs(float(rhs)))
        assert abs(lhs - rhs) < 1e-18 * scale

    def test_cache_stability(self):
        a = polygamma_cached(2, 1.5)
        b = polygamma_cached(2, 1.5)
        assert a is b


class TestLogGamma:
    def test_oracles(self):
        for (_, x), ref in [(k, v) for k, v in ORACLE.items() if k[0] == "lgamma"]:
            assert abs(log_gamma(mpf(x)) - mpf(ref)) < 1e-20

    def test_integers(self):
        assert abs(log_gamma(1)) < 1e-25
        assert abs(log_gamma(5) - mp.log(24)) < 1e-24

    @settings(max_examples=30, deadline=None)
    @given(x=st.floats(min_value=0.2, max_value=50.0))
    def test_functional_equation(self, x):
        x = mpf(x)
        assert abs(log_gamma(x + 1) - log_gamma(x) - mp.log(x)) < 1e-20


class TestPrecision:
    def test_invariants(self):
        with pytest.raises(ValueError):
            Precision(abs_tol=0.0)
        with pytest.raises(ValueError):
            Precision(max_terms=4)
        with pytest.raises(ValueError):
            Precision(shift_threshold=1.0)

    def test_defaults_valid(self):
        p = Precision()
        assert p.abs_tol == 1e-12
