"""Detectors for the smoothness and size classes behind the experiments.

Verdicts are finite-resolution evidence: a Lipschitz seminorm is a
supremum over a radius ladder, a Gevrey exponent is a regression on
coefficient decay, and Privalov membership is stabilization of a
radial integral ladder.  Nothing here proves membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .metrics import privalov_radial_ladder
from .series import DiskGrid

MEMBER = "Member"
NON_MEMBER = "NonMember"
MARGINAL = "Marginal"
FINITE_SUPPORT = "FiniteSupport"


@dataclass(frozen=True)
class ClassReport:
    class_name: str
    exponents: dict
    margin: float
    verdict: str
    fit_residual: float | None = None
    details: dict = field(default_factory=dict)


def lipschitz_seminorm(f, alpha, grid=None):
    """Derivative-growth seminorm for the analytic Lipschitz scale.

    For n < alpha <= n+1 the class is tested through the (n+1)-st
    derivative: the seminorm is sup over grid radii r of
    (1-r)^(1-beta) * max_theta |f^(n+1)(r e^(i theta))| with
    beta = alpha - n, and for beta = 1 (the Zygmund case) of
    (1-r) * max |f^(n+2)|.  Pointwise modulus-of-continuity testing on
    grid pairs is deliberately avoided: the derivative-growth form is
    the standard equivalent and conditions far better.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    grid = grid if grid is not None else DiskGrid.default()
    f.require_analytic()
    n = math.ceil(alpha) - 1
    beta = alpha - n
    if beta == 1.0:
        deriv = f.derivative(n + 2)
        exponent = 1.0
    else:
        deriv = f.derivative(n + 1)
        exponent = 1.0 - beta
    if deriv.is_zero:
        return 0.0
    M = grid.angular_resolution
    best = 0.0
    for r in grid.radii:
        peak = float(np.max(np.abs(deriv.radial_samples(r, M))))
        best = max(best, (1.0 - r) ** exponent * peak)
    return best


def lipschitz_radial_profile(f, alpha, grid=None):
    """Per-radius values behind :func:`lipschitz_seminorm` (divergence
    shows up as growth through the ladder)."""
    grid = grid if grid is not None else DiskGrid.default()
    out = []
    for r in grid.radii:
        sub = DiskGrid((r,), grid.angular_resolution)
        out.append(lipschitz_seminorm(f, alpha, sub))
    return out


@dataclass(frozen=True)
class GevreyFit:
    c: float
    alpha: float
    residual: float
    n_points: int
    kind: str  # "fit", "finite-support" or "non-decaying"

    def membership(self, alpha0, slack=0.05):
        """Verdict against the target coefficient-decay exponent."""
        if self.kind == "finite-support":
            return FINITE_SUPPORT
        if self.kind == "non-decaying":
            return NON_MEMBER
        if self.alpha >= alpha0 - slack and self.residual < 0.1:
            return MEMBER
        if self.alpha < alpha0 - 2 * slack:
            return NON_MEMBER
        return MARGINAL


TAIL_START = 16
"""Leading coefficients excluded from decay fits (transient)."""


def gevrey_fit(f, tail_start=TAIL_START):
    """Fit |f^(n)| = exp(-c n^alpha) on the coefficient tail.

    Regresses log(-log |f^(n)|) on log n; the slope is the exponent
    alpha and the intercept recovers c.  Needs a genuinely decaying
    tail of at least 32 usable coefficients.
    """
    f.require_analytic()
    hi = f.max_index
    ns, ys = [], []
    for n in range(tail_start, hi + 1):
        mod = abs(f[n])
        if 0.0 < mod < 1.0:
            ns.append(n)
            ys.append(math.log(-math.log(mod)))
    if hi - tail_start < 32 or len(ns) < 32:
        kind = "finite-support" if hi - tail_start < 32 else "non-decaying"
        return GevreyFit(0.0, 0.0, float("inf"), len(ns), kind)
    x = np.log(np.array(ns, dtype=float))
    y = np.array(ys)
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    if slope <= 0.01:
        return GevreyFit(0.0, max(float(slope), 0.0), residual,
                         len(ns), "non-decaying")
    return GevreyFit(float(np.exp(intercept)), float(slope), residual,
                     len(ns), "fit")


def gevrey_membership(f, alpha0, slack=0.05):
    """ClassReport wrapper around :func:`gevrey_fit`."""
    fit = gevrey_fit(f)
    verdict = fit.membership(alpha0, slack)
    return ClassReport(
        class_name=f"Gevrey({alpha0:g})",
        exponents={"alpha": fit.alpha, "c": fit.c},
        margin=fit.alpha - alpha0,
        verdict=verdict,
        fit_residual=fit.residual,
        details={"n_points": fit.n_points, "kind": fit.kind},
    )


def privalov_membership(f, q, grid=None, *, stabilization_tol=1e-2,
                        divergence_factor=10.0):
    """Radial-ladder stabilization test for the Privalov class.

    Member when the ladder of (log(1+|f|))^q integrals settles at the
    last two radii; NonMember when it keeps growing by more than the
    divergence factor across the ladder (or leaves floating point).
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    grid = grid if grid is not None else DiskGrid.default()
    ladder = privalov_radial_ladder(f, q, grid)
    last, first = ladder[-1], ladder[0]
    if not np.isfinite(last) or (first > 0 and last / first > divergence_factor):
        verdict = NON_MEMBER
    elif abs(ladder[-1] - ladder[-2]) <= stabilization_tol * max(last, 1e-300):
        verdict = MEMBER
    else:
        verdict = MARGINAL
    return ClassReport(
        class_name=f"Privalov({q:g})",
        exponents={"q": q},
        margin=float(last / first) if first > 0 else float("inf"),
        verdict=verdict,
        details={"ladder": tuple(ladder)},
    )


def coefficient_growth_margin(f, q=None, tail_start=TAIL_START):
    """Worst tail ratio log|f^(n)| / n^e with e = 1/(1+q).

    ``q=None`` selects the Smirnov exponent e = 1/2.  Small or negative
    margins are consistent with membership; a large positive margin
    certifies violation of the necessary coefficient bound.  Returns
    -inf when the tail is empty.
    """
    f.require_analytic()
    e = 0.5 if q is None else 1.0 / (1.0 + q)
    worst = float("-inf")
    for n in range(tail_start, f.max_index + 1):
        mod = abs(f[n])
        if mod > 0.0:
            worst = max(worst, math.log(mod) / n ** e)
    return worst
