import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import ellipk

from ellipk.cei1 import (
    Cei1Request,
    Method,
    elliptic_k,
    evaluate,
    k_agm,
    k_from_m,
    k_gc,
    k_gl,
    k_series,
    ker_gc,
    ker_gl,
)
from ellipk.errors import DomainError, NonConvergence

SOLVERS = {"series": k_series, "agm": k_agm, "gc": k_gc, "gl": k_gl}


class TestAgainstScipy:
    @pytest.mark.parametrize("k", [0.0, 0.1, 0.3, 0.5, 0.7])
    @pytest.mark.parametrize("method", ["series", "agm", "gc", "gl"])
    def test_moderate_k(self, k, method):
        np.testing.assert_allclose(SOLVERS[method](k), ellipk(k * k), rtol=1e-9)

    @pytest.mark.parametrize("k", [0.9, 0.99, 0.999999])
    def test_agm_near_one(self, k):
        np.testing.assert_allclose(k_agm(k, 1e-12), ellipk(k * k), rtol=1e-12)


class TestConventions:
    def test_zero_is_half_pi(self):
        for solve in SOLVERS.values():
            np.testing.assert_allclose(solve(0.0), math.pi / 2, rtol=1e-15)

    @pytest.mark.parametrize("method", list(Method))
    @pytest.mark.parametrize("k", [0.0, 0.2, 0.55, 0.8])
    def test_from_m_bit_identical(self, method, k):
        direct = {Method.SERIES: k_series, Method.AGM: k_agm,
                  Method.GAUSS_CHEBYSHEV: k_gc, Method.GAUSS_LEGENDRE: k_gl}[method](k)
        assert k_from_m(k * k, method) == direct

    def test_request_front_door(self):
        assert evaluate(Cei1Request(0.5, "gl", n=20)) == k_gl(0.5, 20)
        assert elliptic_k(0.5) == k_agm(0.5)

    def test_diagnostics(self):
        _, d = k_series(0.5, full_output=True)
        assert d.method is Method.SERIES and d.unit == "terms" and d.count > 5
        _, d = k_gl(0.5, 12, full_output=True)
        assert (d.count, d.n) == (12, 12)

    def test_kernels(self):
        assert ker_gc(0.0, 0.9) == 0.5
        assert ker_gl(0.0, 0.9) == 1.0


class TestErrors:
    @pytest.mark.parametrize("k", [1.0, -0.1, 1.5, math.nan])
    @pytest.mark.parametrize("method", ["series", "agm", "gc", "gl"])
    def test_domain(self, k, method):
        with pytest.raises(DomainError):
            SOLVERS[method](k)

    def test_m_domain(self):
        with pytest.raises(DomainError):
            k_from_m(1.0)

    def test_request_validation(self):
        with pytest.raises(DomainError):
            Cei1Request(0.5, eps=0.0)
        with pytest.raises(DomainError):
            Cei1Request(0.5, n=0)
        with pytest.raises(ValueError):
            Cei1Request(0.5, method="simpson")

    def test_series_term_cap(self):
        with pytest.raises(NonConvergence, match="AGM"):
            k_series(0.99, max_terms=50)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.9))
def test_methods_agree(k):
    vals = [k_series(k), k_agm(k), k_gl(k)]
    assert max(vals) - min(vals) < 1e-8


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.98), st.floats(min_value=0.0, max_value=0.98))
def test_monotone_in_k(k1, k2):
    lo, hi = sorted((k1, k2))
    assert k_agm(lo, 1e-12) <= k_agm(hi, 1e-12) + 1e-15
