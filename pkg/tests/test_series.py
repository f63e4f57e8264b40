import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hardylab import (BoundaryGrid, FourierSeries, GridTooSmallError,
                      RationalFunction, analyze, conj_series, evaluate,
                      multiply, project_minus, project_plus, synthesize)
from hardylab.series import series_divide, series_exp


def coeff_strategy(max_order=8, analytic=False):
    lo = 0 if analytic else -max_order
    scalar = st.complex_numbers(max_magnitude=10, allow_nan=False,
                                allow_infinity=False)
    return st.dictionaries(st.integers(lo, max_order), scalar, max_size=9)


series_st = coeff_strategy().map(FourierSeries)


class TestFourierSeries:
    def test_trims_support(self):
        f = FourierSeries({-3: 0.0, 0: 1.0, 5: 0.0})
        assert (f.min_index, f.max_index) == (0, 0)
        assert f.order == 0

    def test_zero(self):
        z = FourierSeries.zero()
        assert z.is_zero and z.is_analytic and z.is_coanalytic

    def test_getitem_outside_window(self):
        f = FourierSeries({2: 1j})
        assert f[5] == 0 and f[-1] == 0 and f[2] == 1j

    def test_arithmetic(self):
        f = FourierSeries({-1: 1, 1: 2})
        g = FourierSeries({0: 3})
        assert (f + g).coefficients() == {-1: 1, 0: 3, 1: 2}
        assert (f - f).is_zero
        assert (2 * f).coefficients() == {-1: 2, 1: 4}

    def test_multiply_convolves(self):
        f = FourierSeries({0: 1, 1: 1})
        assert multiply(f, f, 0).coefficients() == {0: 1, 1: 2, 2: 1}

    def test_multiply_truncates_to_working_order(self):
        f = FourierSeries({2000: 1.0})
        prod = f * f  # degree 4000 exceeds the default order 2048
        assert prod.is_zero

    def test_require_analytic(self):
        with pytest.raises(ValueError):
            FourierSeries({-1: 1}).require_analytic()


class TestAnalyzeSynthesize:
    def test_constant(self):
        grid = BoundaryGrid(np.full(16, 3.0))
        assert analyze(grid).coefficients() == {0: 3}

    def test_single_mode(self):
        grid = BoundaryGrid.sample(lambda th: np.exp(1j * th), 64)
        f = analyze(grid)
        assert abs(f[1] - 1) < 1e-14
        assert (f - FourierSeries({1: 1})).l2_norm() < 1e-13

    def test_two_cosine(self):
        # hand expansion: 2 cos(theta) = zeta + conj(zeta)
        grid = BoundaryGrid.sample(lambda th: 2 * np.cos(th), 64)
        f = analyze(grid)
        assert abs(f[1] - 1) < 1e-14 and abs(f[-1] - 1) < 1e-14

    def test_synthesize_all_ones(self):
        vals = synthesize(FourierSeries({0: 1}), 8).values
        assert np.allclose(vals, 1.0)

    def test_synthesize_fourth_roots(self):
        vals = synthesize(FourierSeries({1: 1}), 4).values
        assert np.allclose(vals, [1, 1j, -1, -1j])

    def test_grid_too_small(self):
        with pytest.raises(GridTooSmallError):
            synthesize(FourierSeries({5: 1}), 8)
        with pytest.raises(GridTooSmallError):
            analyze(BoundaryGrid(np.ones(8)), order=6)

    def test_power_of_two_enforced(self):
        with pytest.raises(ValueError):
            BoundaryGrid(np.ones(12))

    @settings(max_examples=30, deadline=None)
    @given(coeff_strategy(max_order=6))
    def test_roundtrip(self, coeffs):
        f = FourierSeries(coeffs)
        back = analyze(synthesize(f, 16))
        assert (back - f).l2_norm() < 1e-12 * max(1.0, f.l2_norm())


class TestProjections:
    def test_split_example(self):
        f = FourierSeries({-1: 1, 0: 2, 3: 1j})
        assert project_plus(f).coefficients() == {0: 2, 3: 1j}
        assert project_minus(f).coefficients() == {-1: 1}

    def test_analytic_fixed_point(self):
        f = FourierSeries({0: 1, 2: -3})
        assert project_plus(f) is not f
        assert (project_plus(f) - f).is_zero
        assert project_minus(f).is_zero

    def test_pure_negative(self):
        assert project_plus(FourierSeries({-5: 7})).is_zero

    @settings(max_examples=40, deadline=None)
    @given(series_st)
    def test_complementarity_and_idempotence(self, f):
        plus, minus = project_plus(f), project_minus(f)
        assert (plus + minus - f).is_zero
        assert (project_plus(plus) - plus).is_zero
        assert (project_minus(minus) - minus).is_zero

    @settings(max_examples=40, deadline=None)
    @given(series_st)
    def test_range_orthogonality(self, f):
        plus = project_plus(f).coefficients()
        minus = project_minus(f).coefficients()
        inner = sum(plus.get(n, 0) * np.conj(minus.get(n, 0))
                    for n in set(plus) | set(minus))
        assert inner == 0


class TestConjSeries:
    def test_single_mode(self):
        assert conj_series(FourierSeries({1: 1j})).coefficients() == {-1: -1j}

    def test_real_even_symbol_fixed(self):
        f = FourierSeries({-1: 1, 1: 1})
        assert (conj_series(f) - f).is_zero

    @settings(max_examples=40, deadline=None)
    @given(series_st)
    def test_projection_identity(self, f):
        # conj(P- f) = P+ conj(f) - conj(f[0]), exactly on coefficients
        lhs = conj_series(project_minus(f))
        rhs = project_plus(conj_series(f)) - np.conj(f[0])
        assert (lhs - rhs).is_zero


class TestEvaluate:
    def test_affine(self):
        assert evaluate(FourierSeries({0: 1, 1: 1}), 0.5) == 1.5

    def test_origin_gives_constant_coefficient(self):
        f = FourierSeries({0: 2 + 1j, 3: -4})
        assert evaluate(f, 0) == 2 + 1j

    def test_geometric_closed_form(self):
        # coefficients 2^-n at z = 1/2 sum to 1/(1 - 1/4)
        f = FourierSeries.from_analytic(0.5 ** np.arange(60))
        assert abs(evaluate(f, 0.5) - 4.0 / 3.0) < 1e-15

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            evaluate(FourierSeries({0: 1}), 1.0)
        with pytest.raises(ValueError):
            evaluate(FourierSeries({-1: 1}), 0.5)


class TestRationalFunction:
    def test_rejects_inner_zero(self):
        with pytest.raises(ValueError):
            RationalFunction([1], [1, -2.0])  # root at 1/2

    def test_allows_boundary_zero(self):
        RationalFunction([1, 1], [1, -1])

    def test_long_division(self):
        h = RationalFunction([1, 1], [1, -1]).to_series(8)
        # (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
        assert abs(h[0] - 1) < 1e-14
        assert all(abs(h[n] - 2) < 1e-14 for n in range(1, 9))

    def test_addition_keeps_denominator(self):
        h = RationalFunction([1, 1], [1, -1]) + FourierSeries({4: 0.25})
        assert h.den.coefficients() == {0: 1, 1: -1}
        assert abs(h.num[4] - 0.25) < 1e-15 and abs(h.num[5] + 0.25) < 1e-15

    def test_zero_scalar_collapses(self):
        h = RationalFunction([1, 1], [1, -1]) * 0
        assert h.num.is_zero

    def test_radial_samples_match_series(self):
        h = RationalFunction([1, 2], [4, 1])
        direct = h.radial_samples(0.5, 256)
        via_series = h.to_series(64).radial_samples(0.5, 256)
        assert np.max(np.abs(direct - via_series)) < 1e-12


class TestSeriesHelpers:
    def test_series_divide_roundtrip(self, rng):
        den = np.array([2.0, 0.3, -0.1], dtype=complex)
        num = rng.standard_normal(12) + 1j * rng.standard_normal(12)
        quot = series_divide(num, den, 32)
        back = np.convolve(quot, den)[:12]
        assert np.max(np.abs(back - num)) < 1e-12

    def test_series_exp_matches_scalar(self):
        out = series_exp(np.array([0.7]), 4)
        assert np.allclose(out, [np.exp(0.7), 0, 0, 0])

    def test_series_exp_of_log_geometric(self):
        # exp(log(1/(1-z))) = sum z^n
        length = 30
        lam = np.zeros(length)
        lam[1:] = 1.0 / np.arange(1, length)
        assert np.max(np.abs(series_exp(lam, length) - 1.0)) < 1e-12

    def test_derivative(self):
        f = FourierSeries({0: 1, 1: 2, 3: 1})
        assert f.derivative().coefficients() == {0: 2, 2: 3}
