"""The mate equation, membership diagnostics and multiplier checks.

A function f lies in the space attached to a Pythagorean pair (b, a)
exactly when the mate equation T_conj(b) f = T_conj(a) f_plus has a
solution f_plus, and then the squared norm is |f|_2^2 + |f_plus|_2^2.
Finite truncations cannot decide membership, only exhibit
stabilization or blow-up of the solve along a dimension ladder, so
every verdict here is three-valued and annotated with the ladder it
came from.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .factorization import pythagorean_factorize
from .metrics import garsia_bmoa_norm
from .operators import apply, toeplitz_matrix
from .series import DiskGrid, FourierSeries, RationalFunction

IN_SPACE = "InSpace"
OUT_OF_SPACE = "OutOfSpace"
INCONCLUSIVE = "Inconclusive"
MULTIPLIER = "Multiplier"
NOT_CERTIFIED = "NotCertified"

CONDITION_CAP = 1.0e12


@dataclass(frozen=True)
class MateSolution:
    f: FourierSeries
    f_plus: FourierSeries
    residual: float
    hb_norm: float
    dim: int
    ill_conditioned: bool = False


def _triangular_solve(a, rhs, dim):
    """Solve the upper-triangular Toeplitz system of an analytic symbol.

    Returns the solution and a reciprocal condition estimate.
    """
    T = toeplitz_matrix(a, dim).entries
    x = scipy.linalg.solve_triangular(T, rhs, lower=False,
                                      check_finite=False)
    # cheap condition estimate: 1-norm of T times norm growth of x
    norm_T = float(np.max(np.sum(np.abs(T), axis=0)))
    rhs_norm = float(np.linalg.norm(rhs))
    growth = float(np.linalg.norm(x)) / rhs_norm if rhs_norm > 0 else 0.0
    cond_est = norm_T * growth
    return T, x, cond_est


def solve_mate(pair, f, dim):
    """Least-squares mate solve at one truncation size.

    The system matrix of the outer symbol a is upper triangular with
    positive diagonal, hence injective; the truncated minimizer is the
    exact solution of the windowed system.
    """
    f.require_analytic()
    if not f.is_zero and f.max_index >= dim:
        raise ValueError(f"degree {f.max_index} does not fit below dim {dim}")
    fvec = f.analytic_coefficients(dim)
    rhs = apply(toeplitz_matrix(pair.b, dim), fvec)
    T, x, cond = _triangular_solve(pair.a, rhs, dim)
    residual = float(np.linalg.norm(T @ x - rhs))
    hb_norm = float(np.sqrt(f.l2_norm() ** 2 + np.linalg.norm(x) ** 2))
    return MateSolution(f, FourierSeries.from_analytic(x), residual,
                        hb_norm, dim, bool(cond > CONDITION_CAP))


def _window(f, dim):
    if f.max_index < dim:
        return f
    return FourierSeries.from_analytic(f.analytic_coefficients(dim))


@dataclass(frozen=True)
class MembershipReport:
    f: FourierSeries
    dims: tuple
    hb_norms: tuple
    residuals: tuple
    verdict: str


def membership_diagnostic(pair, f, dims, *, stabilization_tol=1e-3,
                          divergence_factor=10.0):
    """Stabilization-or-blow-up verdict for the mate solve ladder.

    f is windowed to each truncation size, so high-order coefficient
    data (expanded non-polynomial objects) exhibits norm growth along
    the ladder instead of violating the solve precondition.
    """
    if list(dims) != sorted(dims) or len(dims) < 2:
        raise ValueError("dims must be an increasing ladder")
    sols = [solve_mate(pair, _window(f, d), d) for d in dims]
    norms = [s.hb_norm for s in sols]
    residuals = [s.residual for s in sols]
    verdict = INCONCLUSIVE
    tail_ok = residuals[-1] <= 1e-8 * max(1.0, norms[-1])
    if norms[-1] > 0 and norms[0] > 0 and \
            norms[-1] / norms[0] > divergence_factor:
        verdict = OUT_OF_SPACE
    elif tail_ok and (norms[-1] == 0.0 or
                      abs(norms[-1] - norms[-2]) <=
                      stabilization_tol * max(norms[-1], 1e-300)):
        verdict = IN_SPACE
    return MembershipReport(f, tuple(dims), tuple(norms),
                            tuple(residuals), verdict)


def toeplitz_preimage(m, a, dim):
    """Solve T_conj(a) u = m on the leading window; unique since a is outer.

    Returns (u, residual, ill_conditioned).
    """
    m.require_analytic()
    mvec = m.analytic_coefficients(dim)
    T, x, cond = _triangular_solve(a, mvec, dim)
    residual = float(np.linalg.norm(T @ x - mvec))
    return (FourierSeries.from_analytic(x), residual,
            bool(cond > CONDITION_CAP))


@dataclass(frozen=True)
class MultiplierReport:
    m: FourierSeries
    u: FourierSeries
    u_garsia: float
    mate_of_m: FourierSeries
    mate_garsia: float
    verdict: str
    dims: tuple
    garsia_ladder: tuple
    threshold: float


def lotto_sarason_check(pair, m, dims, *, garsia_threshold=50.0,
                        stabilization_tol=0.05, grid=None):
    """Certify m as a multiplier through its Toeplitz preimage.

    Sufficient condition only: when u solving m = T_conj(a) u has a
    Garsia norm that stabilizes below the threshold along the ladder,
    m multiplies the space; the mate of m (T_conj(b) u) and its Garsia
    norm are reported alongside.  Anything else is NotCertified.
    """
    if list(dims) != sorted(dims) or len(dims) < 2:
        raise ValueError("dims must be an increasing ladder")
    grid = grid if grid is not None else DiskGrid.default()
    m.require_analytic()
    ladder = []
    u = None
    for dim in dims:
        u, _, _ = toeplitz_preimage(m, pair.a, dim)
        ladder.append(garsia_bmoa_norm(u, grid))
    last = ladder[-1]
    stable = abs(ladder[-1] - ladder[-2]) <= stabilization_tol * max(last, 1e-300)
    verdict = MULTIPLIER if (stable and last < garsia_threshold) \
        else NOT_CERTIFIED
    dim = dims[-1]
    mate = FourierSeries.from_analytic(
        apply(toeplitz_matrix(pair.b, dim), u.analytic_coefficients(dim)))
    mate_garsia = garsia_bmoa_norm(mate, grid)
    return MultiplierReport(m, u, last, mate, mate_garsia, verdict,
                            tuple(dims), tuple(ladder), garsia_threshold)


def mate_linearity_residual(h1, h2, lam, m, dim, tol=1e-8):
    """Conjugate-linearity defect of the mate map h -> m_plus(h).

    Solves the mate equation for m against the pairs of h1, h2 and
    lam*h1 + h2 and returns the l2 distance between the combined mate
    and conj(lam) * mate(h1) + mate(h2) on the common window.
    """
    def as_rational(h):
        return h if isinstance(h, RationalFunction) else RationalFunction(h)

    combined = as_rational(h1) * lam + as_rational(h2)

    def mate_vec(h):
        pair, _ = pythagorean_factorize(h, tol=tol)
        sol = solve_mate(pair, m, dim)
        return sol.f_plus.analytic_coefficients(dim)

    v_comb = mate_vec(combined)
    v1 = mate_vec(h1)
    v2 = mate_vec(h2)
    return float(np.linalg.norm(v_comb - np.conj(lam) * v1 - v2))
