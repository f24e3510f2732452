import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellipk.errors import NonConvergence
from ellipk.series import SeriesSpec, cei1_coefficient, is_negligible, iter_partial_sums, sum_series


def double_factorial_ratio_sq(j):
    num = math.prod(range(2 * j - 1, 0, -2))
    den = math.prod(range(2 * j, 0, -2))
    return (num / den) ** 2


class TestCoefficient:
    def test_first_values(self):
        expected = [1.0, 0.25, 9 / 64, 25 / 256, 1225 / 16384]
        np.testing.assert_allclose([cei1_coefficient(j) for j in range(5)], expected, rtol=1e-15)

    @pytest.mark.parametrize("j", [1, 5, 20, 60])
    def test_matches_double_factorials(self, j):
        np.testing.assert_allclose(cei1_coefficient(j), double_factorial_ratio_sq(j), rtol=1e-13)

    def test_decreasing(self):
        c = [cei1_coefficient(j) for j in range(50)]
        assert all(b < a for a, b in zip(c, c[1:]))


class TestSumSeries:
    def test_exp(self):
        spec = SeriesSpec(lambda j: 1.0 / math.factorial(j), 1.0)
        np.testing.assert_allclose(sum_series(spec), math.e, rtol=1e-9)

    def test_cos_pi_skips_zero_coefficients(self):
        coef = lambda j: 0.0 if j % 2 else (-1) ** (j // 2) / math.factorial(j)
        np.testing.assert_allclose(sum_series(SeriesSpec(coef, math.pi)), -1.0, atol=1e-9)

    def test_geometric(self):
        total, terms = sum_series(SeriesSpec(lambda j: 1.0, 0.5), full_output=True)
        np.testing.assert_allclose(total, 2.0, rtol=1e-9)
        assert 25 < terms < 40

    def test_zero_argument_stops_after_one_term(self):
        assert sum_series(SeriesSpec(cei1_coefficient, 0.0), full_output=True) == (1.0, 2)

    def test_term_cap_raises(self):
        with pytest.raises(NonConvergence):
            sum_series(SeriesSpec(lambda j: 1.0, 0.999, max_terms=100))

    @pytest.mark.parametrize("kwargs", [{"eps": 0.0}, {"eps": -1.0}, {"max_terms": 0}])
    def test_bad_spec(self, kwargs):
        with pytest.raises(ValueError):
            SeriesSpec(cei1_coefficient, 0.1, **kwargs)

    def test_partial_sums_are_running(self):
        it = iter_partial_sums(lambda j: 1.0, 0.5)
        sums = [next(it)[3] for _ in range(4)]
        assert sums == [1.0, 1.5, 1.75, 1.875]

    def test_negligible_guard_near_zero_sum(self):
        assert is_negligible(1e-20, 0.0, 1e-9)
        assert not is_negligible(1e-3, 0.0, 1e-9)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=-0.95, max_value=0.95))
def test_geometric_series_property(x):
    np.testing.assert_allclose(sum_series(SeriesSpec(lambda j: 1.0, x)), 1 / (1 - x), rtol=1e-7)
