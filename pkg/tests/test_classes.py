import numpy as np
import pytest

from hardylab import DiskGrid, ExpRational, FourierSeries, RationalFunction, \
    outer_power
from hardylab.classes import (FINITE_SUPPORT, MARGINAL, MEMBER, NON_MEMBER,
                              coefficient_growth_margin, gevrey_fit,
                              gevrey_membership, lipschitz_radial_profile,
                              lipschitz_seminorm, privalov_membership)


@pytest.fixture(scope="module")
def ladder_grid():
    # radius ladder matched to the resolution of working-order series
    return DiskGrid(tuple(1.0 - 2.0 ** -j for j in range(1, 11)), 1 << 12)


class TestLipschitzSeminorm:
    def test_constant_vanishes(self, ladder_grid):
        for alpha in (0.3, 1.0, 2.5):
            assert lipschitz_seminorm(FourierSeries.constant(4.0), alpha,
                                      ladder_grid) == 0.0

    def test_linear_is_finite_at_half(self, ladder_grid):
        val = lipschitz_seminorm(FourierSeries({1: 1}), 0.5, ladder_grid)
        assert 0 < val <= 1.0

    def test_sqrt_zero_threshold(self, ladder_grid):
        f = outer_power(FourierSeries({0: 1, 1: -1}), 0.5, order=2048)
        prof_at = lipschitz_radial_profile(f, 0.5, ladder_grid)
        prof_above = lipschitz_radial_profile(f, 0.7, ladder_grid)
        # at the exact exponent the ladder stays level ...
        assert max(prof_at) / min(prof_at) < 1.2
        # ... above it the ladder climbs steadily
        assert prof_above[-1] / prof_above[0] > 2.5
        assert all(b > a for a, b in zip(prof_above, prof_above[1:]))

    def test_homogeneity(self, ladder_grid):
        f = FourierSeries({0: 1.0, 2: -0.5, 5: 0.125})
        base = lipschitz_seminorm(f, 0.5, ladder_grid)
        assert abs(lipschitz_seminorm(f * 3.0, 0.5, ladder_grid) - 3 * base) \
            < 1e-12 * max(base, 1)

    def test_monotone_under_grid_coarsening(self, ladder_grid):
        f = FourierSeries({1: 1.0, 3: 2.0})
        coarse = DiskGrid(ladder_grid.radii[:5],
                          ladder_grid.angular_resolution)
        assert lipschitz_seminorm(f, 0.5, coarse) <= \
            lipschitz_seminorm(f, 0.5, ladder_grid) + 1e-15

    def test_rejects_nonpositive_alpha(self, ladder_grid):
        with pytest.raises(ValueError):
            lipschitz_seminorm(FourierSeries({1: 1}), 0.0, ladder_grid)


class TestGevreyFit:
    @pytest.mark.parametrize("c0", [1.0, 2.0])
    @pytest.mark.parametrize("alpha0", [0.25, 1.0 / 3.0, 0.5])
    def test_exact_recovery(self, c0, alpha0):
        n = np.arange(2049, dtype=float)
        f = FourierSeries.from_analytic(np.exp(-c0 * n ** alpha0))
        fit = gevrey_fit(f)
        assert fit.residual < 1e-6
        assert abs(fit.alpha - alpha0) < 1e-3
        assert abs(fit.c - c0) < 1e-3

    def test_polynomial_finite_support(self):
        fit = gevrey_fit(FourierSeries({0: 1, 3: 2}))
        assert fit.kind == "finite-support"
        assert fit.membership(0.5) == FINITE_SUPPORT

    def test_powerlaw_not_gevrey(self):
        n = np.arange(2049, dtype=float)
        f = FourierSeries.from_analytic((n + 1.0) ** -2.0)
        fit = gevrey_fit(f)
        assert fit.alpha < 0.2
        assert fit.membership(1.0 / 3.0) == NON_MEMBER

    def test_non_decaying(self):
        f = FourierSeries.from_analytic(np.full(128, 2.0))
        fit = gevrey_fit(f)
        assert fit.kind == "non-decaying" and fit.alpha == 0.0

    def test_class_inclusion_on_samples(self):
        # membership at exponent 1/2 implies membership at 1/3
        n = np.arange(2049, dtype=float)
        for c0 in (1.0, 2.0):
            f = FourierSeries.from_analytic(np.exp(-c0 * np.sqrt(n)))
            assert gevrey_membership(f, 0.5).verdict == MEMBER
            assert gevrey_membership(f, 1.0 / 3.0).verdict == MEMBER


class TestPrivalovMembership:
    def test_bounded_function(self, grid):
        f = FourierSeries({0: 1.0, 1: 2.0})
        sup = float(np.max(np.abs(f.boundary_samples(1 << 12))))
        for q in (1.0, 2.0):
            rep = privalov_membership(f, q, grid)
            assert rep.verdict == MEMBER
            assert rep.details["ladder"][-1] <= np.log1p(sup) ** q + 1e-9

    def test_rational_boundary_pole_is_member(self, grid):
        h = RationalFunction([1, 1], [1, -1])
        rep = privalov_membership(h, 2.0, grid)
        assert rep.verdict == MEMBER

    def test_exponential_pole_is_not(self, grid):
        f = ExpRational(RationalFunction([1, 1], [1, -1]))
        rep = privalov_membership(f, 2.0, grid)
        assert rep.verdict == NON_MEMBER

    def test_monotone_in_q_on_samples(self, grid):
        f = ExpRational(RationalFunction([1, 1], [1, -1]))
        verdicts = [privalov_membership(f, q, grid).verdict
                    for q in (1.5, 2.0, 3.0)]
        # NonMember at a smaller class index forces NonMember above it
        assert verdicts[0] == NON_MEMBER
        assert all(v == NON_MEMBER for v in verdicts)


class TestCoefficientGrowthMargin:
    def test_polynomial(self):
        assert coefficient_growth_margin(FourierSeries({0: 1, 1: 1}), 2.0) \
            == float("-inf")

    def test_exactly_critical(self):
        n = np.arange(1025, dtype=float)
        f = FourierSeries.from_analytic(np.exp(n ** (1.0 / 3.0)))
        margin = coefficient_growth_margin(f, 2.0)
        assert abs(margin - 1.0) < 1e-12

    def test_violating_growth(self):
        n = np.arange(1025, dtype=float)
        f = FourierSeries.from_analytic(np.exp(np.minimum(n ** 0.6, 700.0)))
        assert coefficient_growth_margin(f, 2.0) > 5.0
        # margin keeps growing with a longer tail
        short = FourierSeries.from_analytic(
            np.exp(np.minimum(n[:257] ** 0.6, 700.0)))
        assert coefficient_growth_margin(f, 2.0) \
            > coefficient_growth_margin(short, 2.0)

    def test_smirnov_sentinel_exponent(self):
        n = np.arange(1025, dtype=float)
        f = FourierSeries.from_analytic(np.exp(-2.0 * np.sqrt(n)))
        assert abs(coefficient_growth_margin(f) + 2.0) < 1e-12
