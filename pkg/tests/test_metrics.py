import numpy as np
import pytest

from hardylab import (DiskGrid, ExpRational, FourierSeries, RationalFunction,
                      duality_pairing, garsia_bmoa_norm, hp_quasinorm,
                      multiply, privalov_distance)


class TestHpQuasinorm:
    def test_constant(self, grid):
        f = FourierSeries.constant(3 - 4j)
        for p in (0.5, 1.0, 2.0, 4.0):
            assert abs(hp_quasinorm(f, p, grid) - 5.0) < 1e-12

    def test_parseval_at_p2(self, grid):
        f = FourierSeries({0: 1, 1: 1})
        assert abs(hp_quasinorm(f, 2.0, grid) - np.sqrt(2)) < 1e-12

    def test_unimodular_mode(self, grid):
        f = FourierSeries({7: 1})
        for p in (0.5, 1.0, 3.0):
            assert abs(hp_quasinorm(f, p, grid) - 1.0) < 1e-12

    def test_matches_l2_for_polynomials(self, grid, rng):
        for _ in range(4):
            c = rng.standard_normal(9) + 1j * rng.standard_normal(9)
            f = FourierSeries.from_analytic(c)
            assert abs(hp_quasinorm(f, 2.0, grid) - f.l2_norm()) \
                <= 1e-6 * f.l2_norm()

    def test_hoelder_factorization(self, grid, rng):
        for s, p in ((2.0, 2.0), (4.0, 4.0), (1.0, 2.0), (3.0, 1.5)):
            q = 1.0 / (1.0 / s + 1.0 / p)
            g = FourierSeries.from_analytic(
                rng.standard_normal(7) + 1j * rng.standard_normal(7))
            h = FourierSeries.from_analytic(
                rng.standard_normal(7) + 1j * rng.standard_normal(7))
            lhs = hp_quasinorm(multiply(g, h, 0), q, grid)
            rhs = hp_quasinorm(g, s, grid) * hp_quasinorm(h, p, grid)
            assert lhs <= rhs * (1 + 1e-6)

    def test_rejects_bad_input(self, grid):
        with pytest.raises(ValueError):
            hp_quasinorm(FourierSeries({0: 1}), 0.0, grid)
        with pytest.raises(ValueError):
            hp_quasinorm(FourierSeries({-1: 1}), 2.0, grid)

    def test_empty_radius_list_rejected(self):
        with pytest.raises(ValueError):
            DiskGrid((), 16)


class TestPrivalovDistance:
    def test_identical(self, grid):
        f = FourierSeries({0: 1, 2: 3})
        assert privalov_distance(f, f, 1.0, grid) == 0.0

    def test_log_calibration(self, grid):
        # |f - g| = e - 1 everywhere, so log(1 + |f-g|) = 1
        f = FourierSeries.constant(np.e - 1.0)
        zero = FourierSeries.zero()
        assert abs(privalov_distance(f, zero, 1.0, grid) - 1.0) < 1e-12
        assert abs(privalov_distance(f, zero, 2.0, grid) - 1.0) < 1e-12

    def test_requires_q_at_least_one(self, grid):
        with pytest.raises(ValueError):
            privalov_distance(FourierSeries({0: 1}), FourierSeries.zero(),
                              0.5, grid)

    def test_rational_pole_is_finite_at_grid_radius(self, grid):
        h = RationalFunction([1, 1], [1, -1])
        val = privalov_distance(h, FourierSeries.zero(), 1.0, grid)
        assert np.isfinite(val) and val > 0

    def test_exp_rational_stable_path(self, grid):
        f = ExpRational(RationalFunction([1, 1], [1, -1]))
        val = privalov_distance(f, FourierSeries.zero(), 2.0, grid)
        # integrand peaks near (2/(1-r))^2 but the mean stays finite
        assert np.isfinite(val) and val > 100


class TestGarsiaNorm:
    def test_constant_is_flat(self, grid):
        assert garsia_bmoa_norm(FourierSeries.constant(5 + 2j), grid) == 0.0

    def test_single_mode_hand_poisson(self, grid):
        # P[|zeta|^2](0) = 1 while |u(0)|^2 = 0: supremum 1 at the center
        assert abs(garsia_bmoa_norm(FourierSeries({1: 1}), grid) - 1.0) \
            < 1e-12

    def test_variance_below_sup(self, grid, rng):
        for _ in range(5):
            c = rng.standard_normal(17) + 1j * rng.standard_normal(17)
            u = FourierSeries.from_analytic(c)
            sup = float(np.max(np.abs(u.boundary_samples(
                grid.angular_resolution))))
            assert garsia_bmoa_norm(u, grid) <= sup * (1 + 1e-4)

    def test_zero(self, grid):
        assert garsia_bmoa_norm(FourierSeries.zero(), grid) == 0.0


class TestDualityPairing:
    def test_matched_single_modes(self, grid):
        val = duality_pairing(FourierSeries({1: 1}), FourierSeries({1: 1}),
                              grid)
        assert abs(val - 1.0) < 1e-3          # radial damping tolerance
        assert abs(val - grid.top_radius ** 2) < 1e-15

    def test_orthogonal_modes(self, grid):
        assert duality_pairing(FourierSeries({0: 1}),
                               FourierSeries({1: 1}), grid) == 0

    def test_single_term_against_power_sequence(self, grid):
        n = np.arange(64)
        f = FourierSeries.from_analytic(1.0 / (n + 1.0) ** 2)
        m = FourierSeries({2: 3.0})
        assert abs(duality_pairing(f, m, grid) - 1.0 / 3.0) < 1e-3

    def test_conjugates_second_argument(self, grid):
        f = FourierSeries({1: 2.0})
        m = FourierSeries({1: 1j})
        val = duality_pairing(f, m, grid)
        assert abs(val - 2.0 * (-1j) * grid.top_radius ** 2) < 1e-15
