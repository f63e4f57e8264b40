"""Outer functions, Pythagorean mates and factorizations.

Outer functions are rebuilt from boundary log-modulus data through the
Herglotz completion  log a = g^(0) + 2 sum_{n>=1} g^(n) z^n  followed by
a power-series exponential (whose leading coefficients are exact under
truncation of the exponent).  The delicate step is the quadrature of a
log-modulus with zeros sitting exactly on grid points: those samples
are repaired by fitting and subtracting a multiple of
log|2 sin((theta - theta0)/2)|, whose Fourier coefficients are known in
closed form, leaving a smooth remainder that the plain DFT integrates
spectrally.  Polynomial data therefore factorizes to near machine
precision.

Inner factors are never extracted numerically; callers supply finite
Blaschke data explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .series import (DiskGrid, FourierSeries, RationalFunction,
                     series_divide, series_exp)
from .metrics import privalov_distance


class ExtremePointError(ArithmeticError):
    """log(1 - |b|^2) is not integrable at grid resolution: b is extreme."""


class InnerSpecError(ValueError):
    """Supplied Blaschke data is inconsistent with the function."""


class IllConditionedError(ArithmeticError):
    """Requested factorization is numerically meaningless."""


# -- repaired quadrature of log-modulus data ---------------------------


def _log_kernel(t):
    """log|2 sin(t/2)|, the log-modulus of a boundary zero."""
    with np.errstate(divide="ignore"):
        return np.log(np.abs(2.0 * np.sin(0.5 * t)))


def _fit_singularity(values, k0, M):
    """Model values near grid point k0 as B*log|2 sin(t/2)| + s0 + s2 t^2.

    Uses symmetric neighbor averages at one, two and three grid steps;
    returns (B, s0) or None when a neighbor is itself unusable.
    """
    h = 2.0 * np.pi / M
    rows, rhs = [], []
    for i in (1, 2, 3):
        left, right = values[(k0 - i) % M], values[(k0 + i) % M]
        if not (np.isfinite(left) and np.isfinite(right)):
            return None
        rows.append([_log_kernel(i * h), 1.0, (i * h) ** 2])
        rhs.append(0.5 * (left + right))
    sol = np.linalg.solve(np.array(rows), np.array(rhs))
    return float(sol[0]), float(sol[1])


def repaired_log_coefficients(values, order, *,
                              floor=None, singular_limit=None):
    """Fourier coefficients 0..order of a log-integrand sample array.

    Non-finite samples are treated as logarithmic boundary zeros and
    repaired; finite samples are clamped below at ``floor``.  Returns
    ``(ghat, n_singular)`` with ``ghat[n]`` the coefficient at index n,
    or raises :class:`ExtremePointError` when the sample array is
    divergent (too many singular points, or mean below the configured
    extremality threshold).
    """
    floor = config.LOG_CLAMP_FLOOR if floor is None else floor
    singular_limit = (config.SINGULAR_FRACTION_LIMIT
                      if singular_limit is None else singular_limit)
    vals = np.array(values, dtype=float)
    M = len(vals)
    bad = np.nonzero(~np.isfinite(vals))[0]
    if len(bad) > singular_limit * M:
        raise ExtremePointError(
            f"{len(bad)} of {M} log samples are singular")
    np.clip(vals, floor, None, out=vals)

    thetas = 2.0 * np.pi * np.arange(M) / M
    fits = {}
    for k0 in bad:
        fit = _fit_singularity(vals, k0, M)
        if fit is None:
            # clustered singular points: crude one-cell estimate
            ring = [vals[(k0 + d) % M] for d in (-2, -1, 1, 2)
                    if np.isfinite(vals[(k0 + d) % M])]
            if not ring:
                raise ExtremePointError("singular samples form a cluster")
            fits[k0] = (1.0, float(np.mean(ring)) - 1.0)
        else:
            fits[k0] = fit

    adjusted = vals.copy()
    for k0, (B, s0) in fits.items():
        adjusted -= B * _log_kernel(thetas - thetas[k0])
        correction = sum(Bj * _log_kernel(thetas[k0] - thetas[kj])
                         for kj, (Bj, _) in fits.items() if kj != k0)
        adjusted[k0] = s0 - correction

    hat = np.fft.fft(adjusted) / M
    ghat = hat[:order + 1].astype(complex)
    # add back the exact kernel coefficients: -B/(2n) at index n != 0
    if fits:
        n = np.arange(1, order + 1)
        for k0, (B, _) in fits.items():
            ghat[1:] += (-B / (2.0 * n)) * np.exp(-1j * n * thetas[k0])
    return ghat, len(bad)


def _herglotz_exp(ghat, order):
    """Outer series exp(ghat[0] + 2 sum_{n>=1} ghat[n] z^n)."""
    lam = np.array(ghat[:order + 1], dtype=complex)
    lam[1:] *= 2.0
    return FourierSeries.from_analytic(series_exp(lam, order + 1))


def outer_from_log_modulus(grid, order=None):
    """Outer function a with |a| = exp(g) on the circle and a(0) > 0.

    Parameters
    ----------
    grid : BoundaryGrid
        Real samples of g; -inf entries mark boundary zeros of the
        target and are repaired as logarithmic singularities.
    """
    order = order or config.WORKING_ORDER
    vals = np.asarray(grid.values)
    if np.any(np.isposinf(vals.real)) or np.any(np.isnan(vals.real)):
        raise ValueError("log-modulus samples must be bounded above")
    if np.max(np.abs(vals.imag)) > 1e-9:
        raise ValueError("log-modulus samples must be real")
    ghat, _ = repaired_log_coefficients(vals.real, order)
    return _herglotz_exp(ghat, order)


def outer_power(f, theta, order=None, grid_size=None):
    """Outer function with boundary modulus |f|**theta, positive at 0."""
    if theta <= 0:
        raise ValueError("theta must be positive")
    order = order or config.WORKING_ORDER
    M = grid_size or config.GRID_SIZE
    mod = np.abs(f.boundary_samples(M))
    with np.errstate(divide="ignore"):
        logs = theta * np.log(mod)
    try:
        ghat, n_sing = repaired_log_coefficients(logs, order)
    except ExtremePointError as exc:
        raise IllConditionedError(
            f"|f| vanishes on too much of the grid: {exc}") from exc
    return _herglotz_exp(ghat, order)


# -- Pythagorean pairs --------------------------------------------------


@dataclass(frozen=True)
class PythagoreanPair:
    """(b, a) with |a|^2 + |b|^2 = 1 on the circle, a outer, a(0) > 0."""

    b: FourierSeries
    a: FourierSeries
    tol: float = 1e-9

    def __post_init__(self):
        a0 = self.a[0]
        if not (abs(a0.imag) <= self.tol and a0.real > 0):
            raise ValueError(f"a(0) = {a0:.3g} is not positive")

    def max_identity_deviation(self, grid_size=None):
        M = grid_size or config.GRID_SIZE
        total = (np.abs(self.a.boundary_samples(M)) ** 2
                 + np.abs(self.b.boundary_samples(M)) ** 2)
        return float(np.max(np.abs(total - 1.0)))

    def verify(self, grid_size=None):
        dev = self.max_identity_deviation(grid_size)
        if dev > self.tol:
            raise ValueError(
                f"pair identity violated: deviation {dev:.3g} > tol {self.tol:.3g}")
        return self


@dataclass(frozen=True)
class BlaschkeSpec:
    """Finite Blaschke product: zeros in the open disk plus a rotation."""

    zeros: tuple = ()
    rotation: complex = 1.0

    def __post_init__(self):
        zeros = tuple(complex(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "rotation", complex(self.rotation))
        if any(abs(z) >= 1.0 for z in zeros):
            raise ValueError("Blaschke zeros must lie inside the open disk")
        if abs(abs(self.rotation) - 1.0) > 1e-12:
            raise ValueError("rotation must be unimodular")

    @property
    def is_trivial(self):
        return not self.zeros and self.rotation == 1.0

    def samples(self, points):
        out = np.full(len(points), self.rotation, dtype=complex)
        for z in self.zeros:
            out *= (points - z) / (1.0 - np.conj(z) * points)
        return out


def non_extremality_margin(b, grid_size=None, *, tol=1e-6):
    """Normalized quadrature of log(1 - |b|^2); -inf when divergent.

    Samples where |b| reaches one are repaired as boundary log-zeros;
    the verdict "extreme" (the -inf sentinel) is a threshold on the
    repaired mean and on the fraction of singular samples.
    """
    M = grid_size or config.GRID_SIZE
    w = 1.0 - np.abs(b.boundary_samples(M)) ** 2
    if np.min(w) < -tol:
        raise ValueError("symbol exceeds the unit ball on the grid")
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log(np.clip(w, 0.0, None))
    try:
        ghat, _ = repaired_log_coefficients(logs, 0)
    except ExtremePointError:
        return float("-inf")
    mean = float(ghat[0].real)
    if mean < config.EXTREME_MEAN_FLOOR:
        return float("-inf")
    return mean


def pythagorean_mate(b, tol=1e-9, order=None, grid_size=None):
    """Pythagorean pair (b, a) for a non-extreme symbol b.

    Raises :class:`ExtremePointError` when the non-extremality integral
    diverges at grid resolution (inner-like b).
    """
    order = order or config.WORKING_ORDER
    M = grid_size or config.GRID_SIZE
    w = 1.0 - np.abs(b.boundary_samples(M)) ** 2
    if np.min(w) < -max(tol, 1e-12):
        raise ValueError("max-grid |b| exceeds 1 beyond tolerance")
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = 0.5 * np.log(np.clip(w, 0.0, None))
    ghat, _ = repaired_log_coefficients(logs, order)
    if 2.0 * ghat[0].real < config.EXTREME_MEAN_FLOOR:
        raise ExtremePointError(
            f"mean log(1-|b|^2) = {2 * ghat[0].real:.3g} below the floor")
    a = _herglotz_exp(ghat, order)
    return PythagoreanPair(b, a, tol).verify(M)


def pair_from_outer(a, tol=1e-9, order=None, grid_size=None):
    """Pair (b, a) built from a given outer a with |a| <= 1: b is the
    outer function with |b|^2 = 1 - |a|^2."""
    order = order or config.WORKING_ORDER
    M = grid_size or config.GRID_SIZE
    w = 1.0 - np.abs(a.boundary_samples(M)) ** 2
    if np.min(w) < -max(tol, 1e-12):
        raise ValueError("|a| exceeds 1 on the grid")
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = 0.5 * np.log(np.clip(w, 0.0, None))
    ghat, _ = repaired_log_coefficients(logs, order)
    b = _herglotz_exp(ghat, order)
    return PythagoreanPair(b, a, tol).verify(M)


# -- Fejer-Riesz spectral factorization --------------------------------


def _trig_samples(num, den, M):
    """Samples of |num|^2 + |den|^2 on the boundary grid."""
    return (np.abs(num.boundary_samples(M)) ** 2
            + np.abs(den.boundary_samples(M)) ** 2)


def spectral_factor(num, den, order=None, grid_size=None):
    """Outer Q, positive at 0, with |Q|^2 = |num|^2 + |den|^2 on the circle.

    The sum of squared moduli of two polynomials with no common
    boundary zero is a strictly positive trigonometric polynomial, so
    its logarithm is analytic in an annulus and the exp-of-completion
    route converges spectrally.  (Companion-matrix root extraction is
    avoided: rebuilding a polynomial from dozens of near-circle roots
    is unstable.)
    """
    order = order or config.WORKING_ORDER
    M = grid_size or config.GRID_SIZE
    w = _trig_samples(num, den, M)
    if np.min(w) <= 0.0:
        raise IllConditionedError(
            "spectral factorization requires strict positivity on the grid")
    ghat = np.fft.fft(0.5 * np.log(w))[:order + 1] / M
    return _herglotz_exp(ghat, order)


# -- full Pythagorean factorization -------------------------------------


def _as_rational(h):
    if isinstance(h, RationalFunction):
        return h
    return RationalFunction(h)


def _deflate(num, zeros):
    """Divide out Blaschke zeros: num / prod(z - z_i) * prod(1 - conj(z_i) z)."""
    c = num.analytic_coefficients(num.max_index + 1)
    scale = float(np.max(np.abs(c)))
    for z in zeros:
        d = len(c) - 1
        if d < 1:
            raise InnerSpecError(
                f"declared zero {z:.6g} exceeds the numerator degree")
        # synthetic division by (z - z_i); remainder must vanish
        quot = np.zeros(d, dtype=complex)
        quot[d - 1] = c[d]
        for k in range(d - 1, 0, -1):
            quot[k - 1] = c[k] + z * quot[k]
        remainder = c[0] + z * quot[0]
        if abs(remainder) > 1e-8 * scale:
            raise InnerSpecError(
                f"declared zero {z:.6g} is not a root "
                f"(remainder {abs(remainder):.2g})")
        c = np.convolve(quot, np.array([1.0, -np.conj(z)]))
    return FourierSeries.from_analytic(c)


def jensen_defect(f, grid_size=None):
    """mean log|f| minus log|f(0)|; vanishes exactly when f is outer.

    Diagnostic only; factorization never extracts inner factors.
    """
    M = grid_size or config.GRID_SIZE
    mod = np.abs(f.boundary_samples(M))
    with np.errstate(divide="ignore"):
        logs = np.log(mod)
    ghat, _ = repaired_log_coefficients(logs, 0)
    f0 = abs(f[0])
    if f0 == 0.0:
        return float("inf")
    return float(ghat[0].real - np.log(f0))


def pythagorean_factorize(h, inner=None, tol=1e-8,
                          order=None, grid_size=None):
    """Pythagorean factorization h = c I b_o / a = b / a.

    Parameters
    ----------
    h : FourierSeries or RationalFunction
        The quotient to factor; its inner factor, if any, must be
        supplied through ``inner`` (an empty spec asserts h is outer
        up to the constant's phase).
    inner : BlaschkeSpec, optional

    Returns
    -------
    (PythagoreanPair, complex)
        The pair (b, a) with b = c I b_o, plus the unimodular c.
    """
    order = order or config.WORKING_ORDER
    M = grid_size or config.GRID_SIZE
    inner = inner or BlaschkeSpec()
    rat = _as_rational(h)
    num, den = rat.num, rat.den

    if num.is_zero:
        one = FourierSeries.constant(1.0)
        return PythagoreanPair(FourierSeries.zero(), one, tol), 1.0 + 0j

    # Undeclared zeros away from the origin are not detected (inner
    # factors are never extracted); they stay inside the returned b.
    num_o = _deflate(num, inner.zeros) if inner.zeros else num
    if abs(num_o[0]) == 0.0:
        raise InnerSpecError("numerator vanishes at 0 after deflation; "
                             "declare the zero in the Blaschke data")

    w = _trig_samples(num_o, den, M)
    if np.min(w) <= 0.0:
        raise IllConditionedError(
            "numerator and denominator share a boundary zero")

    Q = spectral_factor(num_o, den, order, M)
    q = Q.analytic_coefficients(Q.max_index + 1)
    phase = abs(den[0]) / den[0]
    a = FourierSeries.from_analytic(
        series_divide(phase * den.analytic_coefficients(den.max_index + 1),
                      q, order + 1))
    b = FourierSeries.from_analytic(
        series_divide(phase * num.analytic_coefficients(num.max_index + 1),
                      q, order + 1))
    phase_o = abs(num_o[0]) / num_o[0]
    b_outer = FourierSeries.from_analytic(
        series_divide(phase_o * num_o.analytic_coefficients(num_o.max_index + 1),
                      q, order + 1))

    points = np.exp(2j * np.pi * np.arange(M) / M)
    inner_vals = inner.samples(points)
    bo_vals = b_outer.boundary_samples(M)
    b_vals = b.boundary_samples(M)
    k_star = int(np.argmax(np.abs(bo_vals)))
    c_raw = b_vals[k_star] / (inner_vals[k_star] * bo_vals[k_star])
    c = c_raw / abs(c_raw)

    recombined = c * inner_vals * bo_vals
    residual = float(np.max(np.abs(recombined - b_vals)))
    if residual > max(tol, 1e-7) * max(1.0, float(np.max(np.abs(b_vals)))):
        raise InnerSpecError(
            f"inner data inconsistent: recombination residual {residual:.3g}")

    pair = PythagoreanPair(b, a, tol).verify(M)
    return pair, complex(c)


def factorization_residual(pair, c, h, grid_size=None, floor=1e-6):
    """max-grid |c b/a ... - h| away from points where |a| < floor.

    The pair's b already includes the inner factor and the constant, so
    the check is |b/a - h| masked near boundary zeros of a (and poles
    of a rational h's denominator).
    """
    M = grid_size or config.GRID_SIZE
    rat = _as_rational(h)
    a_vals = pair.a.boundary_samples(M)
    b_vals = pair.b.boundary_samples(M)
    den_vals = rat.den.boundary_samples(M)
    num_vals = rat.num.boundary_samples(M)
    mask = (np.abs(a_vals) >= floor) & (np.abs(den_vals) >= floor)
    diff = b_vals[mask] / a_vals[mask] - num_vals[mask] / den_vals[mask]
    return float(np.max(np.abs(diff))) if mask.any() else 0.0


# -- stability of the factorization -------------------------------------


@dataclass(frozen=True)
class StabilityRow:
    label: str
    metric: float
    a_error: float
    b_error: float


@dataclass(frozen=True)
class StabilityTable:
    rows: tuple

    @property
    def monotone(self):
        """True when every column strictly decreases down the table."""
        cols = [[r.metric for r in self.rows],
                [r.a_error for r in self.rows],
                [r.b_error for r in self.rows]]
        return all(all(c[i] > c[i + 1] for i in range(len(c) - 1))
                   for c in cols)

    @property
    def non_monotone_rows(self):
        flagged = set()
        for attr in ("metric", "a_error", "b_error"):
            vals = [getattr(r, attr) for r in self.rows]
            for i in range(1, len(vals)):
                if vals[i] >= vals[i - 1]:
                    flagged.add(self.rows[i].label)
        return sorted(flagged)


def stability_experiment(h, perturbations, labels=None,
                         tol=1e-8, order=None, grid=None):
    """Convergence of Pythagorean factorizations under perturbation.

    For each perturbation p the quotient h + p is factored and the row
    (Privalov distance of h+p to h, max-grid |a_p - a|, max-grid
    |b_p - b|) is recorded.  When the first column tends to zero the
    others must follow.
    """
    grid = grid if grid is not None else DiskGrid.default()
    M = grid.angular_resolution
    base_pair, _ = pythagorean_factorize(h, tol=tol, order=order, grid_size=M)
    a_vals = base_pair.a.boundary_samples(M)
    b_vals = base_pair.b.boundary_samples(M)
    rows = []
    for i, p in enumerate(perturbations):
        label = labels[i] if labels else f"p{i}"
        hp = _as_rational(h) + p
        pair, _ = pythagorean_factorize(hp, tol=tol, order=order, grid_size=M)
        metric = privalov_distance(hp, _as_rational(h), 1, grid)
        a_err = float(np.max(np.abs(pair.a.boundary_samples(M) - a_vals)))
        b_err = float(np.max(np.abs(pair.b.boundary_samples(M) - b_vals)))
        rows.append(StabilityRow(label, metric, a_err, b_err))
    return StabilityTable(tuple(rows))
