import numpy as np
import pytest

from hardylab import DiskGrid, FourierSeries, PythagoreanPair


@pytest.fixture(scope="session")
def grid():
    """Full-resolution default grid (shared; grids are immutable)."""
    return DiskGrid.default()


@pytest.fixture(scope="session")
def small_grid():
    """Cheap grid for tests that only need qualitative resolution."""
    return DiskGrid(tuple(1.0 - 2.0 ** -j for j in range(1, 11)), 1 << 12)


@pytest.fixture(scope="session")
def rational_pair():
    """The pair ((1+z)/2, (1-z)/2) of the quotient (1+z)/(1-z)."""
    return PythagoreanPair(FourierSeries({0: 0.5, 1: 0.5}),
                           FourierSeries({0: 0.5, 1: -0.5}), 1e-9)


@pytest.fixture(scope="session")
def constant_pair():
    return PythagoreanPair(FourierSeries.constant(0.6),
                           FourierSeries.constant(0.8), 1e-12)


def series_allclose(f, g, tol=1e-12):
    return (f - g).l2_norm() <= tol


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(1138)
