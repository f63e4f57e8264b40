"""Two-sided trigonometric series and the grids they are sampled on.

The universal currency of the package is :class:`FourierSeries`, a
finitely supported coefficient array c[n] for n in [-N, N] representing
the boundary function sum_n c[n] zeta^n on the unit circle.  Analytic
series (no negative-index mass) double as polynomials in z and are
evaluated exactly; quotients of such polynomials are carried by
:class:`RationalFunction` so that boundary behaviour near poles is not
destroyed by truncation.

Conventions:

* analysis/synthesis use arclength normalized to total mass one, so
  coefficients are plain DFT output divided by the sample count;
* the working truncation order for products defaults to
  ``config.WORKING_ORDER``;
* all objects are immutable value types and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config


class GridTooSmallError(ValueError):
    """Sampling grid cannot resolve the requested coefficient window."""


def _ascomplex(a):
    return np.ascontiguousarray(np.asarray(a, dtype=complex))


class FourierSeries:
    """Finitely supported two-sided coefficient array.

    Parameters
    ----------
    coeffs : mapping of int -> complex
        Indices may be negative; missing indices are zero.
    """

    __slots__ = ("_lo", "_data")

    def __init__(self, coeffs=None):
        if coeffs:
            idx = sorted(coeffs)
            lo, hi = idx[0], idx[-1]
            data = np.zeros(hi - lo + 1, dtype=complex)
            for n, c in coeffs.items():
                data[n - lo] = c
        else:
            lo, data = 0, np.zeros(1, dtype=complex)
        self._init(lo, data)

    def _init(self, lo, data):
        data = _ascomplex(data)
        nz = np.nonzero(data)[0]
        if nz.size:
            data = data[nz[0]:nz[-1] + 1].copy()
            lo += nz[0]
        else:
            lo, data = 0, np.zeros(1, dtype=complex)
        data.setflags(write=False)
        self._lo = int(lo)
        self._data = data

    @classmethod
    def _raw(cls, lo, data):
        f = cls.__new__(cls)
        f._init(lo, data)
        return f

    @classmethod
    def from_analytic(cls, coeffs):
        """Series with ``coeffs[n]`` at index n >= 0."""
        return cls._raw(0, coeffs)

    @classmethod
    def zero(cls):
        return cls._raw(0, [0.0])

    @classmethod
    def constant(cls, c):
        return cls._raw(0, [c])

    # -- structure ----------------------------------------------------

    @property
    def min_index(self):
        return self._lo

    @property
    def max_index(self):
        return self._lo + len(self._data) - 1

    @property
    def order(self):
        """Smallest N with support contained in [-N, N]."""
        return max(abs(self.min_index), abs(self.max_index))

    @property
    def is_zero(self):
        return len(self._data) == 1 and self._data[0] == 0

    @property
    def is_analytic(self):
        return self.min_index >= 0 or self.is_zero

    @property
    def is_coanalytic(self):
        return self.max_index < 0 or self.is_zero

    def __getitem__(self, n):
        if self._lo <= n <= self.max_index:
            return complex(self._data[n - self._lo])
        return 0j

    def coefficients(self):
        """Nonzero coefficients as a plain dict."""
        return {self._lo + i: complex(c)
                for i, c in enumerate(self._data) if c != 0}

    def analytic_coefficients(self, length):
        """Coefficients 0..length-1 as a vector (requires analyticity)."""
        self.require_analytic()
        out = np.zeros(length, dtype=complex)
        hi = min(self.max_index, length - 1)
        if hi >= 0 and not self.is_zero:
            out[self._lo:hi + 1] = self._data[:hi + 1 - self._lo]
        return out

    def require_analytic(self):
        if not self.is_analytic:
            raise ValueError("series has negative-index coefficients")
        return self

    # -- algebra ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = FourierSeries.constant(other)
        if not isinstance(other, FourierSeries):
            return NotImplemented
        lo = min(self._lo, other._lo)
        hi = max(self.max_index, other.max_index)
        data = np.zeros(hi - lo + 1, dtype=complex)
        data[self._lo - lo:self.max_index - lo + 1] += self._data
        data[other._lo - lo:other.max_index - lo + 1] += other._data
        return FourierSeries._raw(lo, data)

    __radd__ = __add__

    def __neg__(self):
        return FourierSeries._raw(self._lo, -self._data)

    def __sub__(self, other):
        return self + (-other if isinstance(other, FourierSeries)
                       else FourierSeries.constant(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return FourierSeries._raw(self._lo, self._data * other)
        if isinstance(other, FourierSeries):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return FourierSeries._raw(self._lo, self._data / other)
        return NotImplemented

    def conjugate(self):
        """Series of the conjugated boundary function (index reflection)."""
        return FourierSeries._raw(-self.max_index, np.conj(self._data[::-1]))

    def derivative(self, k=1):
        """k-th complex derivative of an analytic series."""
        self.require_analytic()
        c = self.analytic_coefficients(self.max_index + 1)
        for _ in range(k):
            n = np.arange(1, len(c), dtype=float)
            c = c[1:] * n
            if len(c) == 0:
                return FourierSeries.zero()
        return FourierSeries.from_analytic(c)

    def l2_norm(self):
        return float(np.linalg.norm(self._data))

    # -- sampling -----------------------------------------------------

    def _placed(self, M, damping=None):
        if 2 * self.order + 1 > M:
            raise GridTooSmallError(
                f"grid of {M} points cannot hold order {self.order}")
        buf = np.zeros(M, dtype=complex)
        idx = np.arange(self._lo, self.max_index + 1)
        vals = self._data if damping is None else self._data * damping
        buf[np.mod(idx, M)] = vals
        return buf

    def radial_samples(self, r, M):
        """Values at r*exp(2*pi*i*k/M); two-sided series are extended
        harmonically (damping r**|n|)."""
        idx = np.arange(self._lo, self.max_index + 1)
        damping = np.power(float(r), np.abs(idx)) if r != 1.0 else None
        return M * np.fft.ifft(self._placed(M, damping))

    def boundary_samples(self, M):
        return self.radial_samples(1.0, M)

    def __repr__(self):
        c = self.coefficients()
        if len(c) > 6:
            shown = dict(list(c.items())[:6])
            return f"FourierSeries({shown}... {len(c)} terms)"
        return f"FourierSeries({c})"


def multiply(f, g, order=None):
    """Coefficient convolution, truncated back to the working order.

    ``order=None`` uses ``config.WORKING_ORDER``; pass ``order=0`` or a
    large explicit order to keep the full product.
    """
    if order is None:
        order = config.WORKING_ORDER
    data = np.convolve(f._data, g._data)
    lo = f.min_index + g.min_index
    out = FourierSeries._raw(lo, data)
    if order and out.order > order:
        kept = {n: c for n, c in out.coefficients().items() if abs(n) <= order}
        return FourierSeries(kept)
    return out


@dataclass(frozen=True)
class BoundaryGrid:
    """Equispaced samples on the unit circle at exp(2*pi*i*k/M)."""

    values: np.ndarray

    def __post_init__(self):
        vals = _ascomplex(self.values)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        if self.M < 2 or self.M & (self.M - 1):
            raise ValueError("sample count must be a power of two")

    @property
    def M(self):
        return len(self.values)

    def thetas(self):
        return 2.0 * np.pi * np.arange(self.M) / self.M

    def points(self):
        return np.exp(1j * self.thetas())

    @classmethod
    def sample(cls, fn, M=None):
        """Grid from a callable of theta (vectorized)."""
        M = M or config.GRID_SIZE
        return cls(fn(2.0 * np.pi * np.arange(M) / M))


@dataclass(frozen=True)
class DiskGrid:
    """Dyadic radius ladder with a fixed angular resolution.

    Scans that need a supremum over the disk also probe the center
    w = 0 (the ladder itself stays inside (0, 1)).
    """

    radii: tuple
    angular_resolution: int

    def __post_init__(self):
        r = tuple(float(x) for x in self.radii)
        if not r:
            raise ValueError("radius list is empty")
        if any(not 0.0 < x < 1.0 for x in r) or list(r) != sorted(r):
            raise ValueError("radii must be increasing and inside (0, 1)")
        object.__setattr__(self, "radii", r)

    @property
    def top_radius(self):
        return self.radii[-1]

    @classmethod
    def default(cls, count=None, M=None):
        count = count or config.RADII_COUNT
        return cls(tuple(1.0 - 2.0 ** -j for j in range(1, count + 1)),
                   M or config.GRID_SIZE)


# -- spectral-core operations -----------------------------------------


def analyze(grid, order=None):
    """Discrete Fourier coefficients of boundary samples.

    Coefficients are taken against normalized arclength, so a constant
    sample array c maps to {0: c}.  ``order`` defaults to the largest
    window the grid can resolve; a grid with M points resolves orders
    up to (M - 1) // 2.
    """
    M = grid.M
    max_order = (M - 1) // 2
    if order is None:
        order = max_order
    elif 2 * order + 1 > M:
        raise GridTooSmallError(
            f"grid of {M} points holds order {max_order}, requested {order}")
    hat = np.fft.fft(grid.values) / M
    coeffs = {}
    for n in range(-order, order + 1):
        c = hat[n % M]
        if c != 0:
            coeffs[n] = complex(c)
    return FourierSeries(coeffs)


def synthesize(f, M=None):
    """Exact inverse of :func:`analyze` on band-limited data."""
    M = M or config.GRID_SIZE
    return BoundaryGrid(f.boundary_samples(M))


def project_plus(f):
    """Riesz projection onto non-negative frequencies."""
    kept = {n: c for n, c in f.coefficients().items() if n >= 0}
    return FourierSeries(kept)


def project_minus(f):
    """Complementary projection onto strictly negative frequencies."""
    kept = {n: c for n, c in f.coefficients().items() if n < 0}
    return FourierSeries(kept)


def conj_series(f):
    """Series of the complex-conjugate boundary function.

    Output index n carries conj(f[-n]); together with the projections
    this gives the exact coefficient identity
    conj(P_minus f) = P_plus conj(f) - conj(f[0]).
    """
    return f.conjugate()


def evaluate(f, z):
    """Power-series value of an analytic series at |z| < 1."""
    f.require_analytic()
    if abs(z) >= 1.0:
        raise ValueError(f"|z| = {abs(z)} is outside the open disk")
    c = f.analytic_coefficients(f.max_index + 1 if not f.is_zero else 1)
    return complex(np.polynomial.polynomial.polyval(z, c))


class RationalFunction:
    """Quotient num/den of analytic polynomials.

    The denominator must be zero-free in the open disk; zeros on the
    circle itself are allowed (poles on the boundary), which is what
    truncated power series cannot represent faithfully.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, FourierSeries) else \
            FourierSeries.from_analytic(num)
        if den is None:
            den = FourierSeries.constant(1.0)
        den = den if isinstance(den, FourierSeries) else \
            FourierSeries.from_analytic(den)
        num.require_analytic()
        den.require_analytic()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        for root in polynomial_roots(den):
            if abs(root) < 1.0 - 1e-9:
                raise ValueError(
                    f"denominator vanishes inside the disk at {root:.6g}")
        self.num, self.den = num, den

    def radial_samples(self, r, M):
        if not 0.0 <= r < 1.0:
            raise ValueError("rational sampling requires 0 <= r < 1")
        return self.num.radial_samples(r, M) / self.den.radial_samples(r, M)

    def boundary_samples(self, M):
        """Circle samples; infinite at grid points hit by a pole."""
        den = self.den.boundary_samples(M)
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.num.boundary_samples(M) / den

    def to_series(self, order=None):
        """Long division to the working order (den(0) != 0 required)."""
        order = order or config.WORKING_ORDER
        if abs(self.den[0]) < 1e-300:
            raise ZeroDivisionError("denominator vanishes at the origin")
        num = self.num.analytic_coefficients(order + 1)
        den = self.den.analytic_coefficients(
            min(self.den.max_index, order) + 1)
        return FourierSeries.from_analytic(series_divide(num, den, order + 1))

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = RationalFunction(FourierSeries.constant(other))
        elif isinstance(other, FourierSeries):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        full = 0  # keep exact degrees; rational data stays small
        num = (multiply(self.num, other.den, full)
               + multiply(other.num, self.den, full))
        return RationalFunction(num, multiply(self.den, other.den, full))

    __radd__ = __add__

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float, complex)):
            if scalar == 0:
                return RationalFunction(FourierSeries.zero())
            return RationalFunction(self.num * scalar, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"


class ExpRational:
    """exp(h) for rational h, kept in log form.

    Boundary moduli of such functions overflow floating point near a
    pole of h, so metric computations use ``log_abs_radial_samples``.
    """

    __slots__ = ("exponent",)

    def __init__(self, exponent):
        if isinstance(exponent, FourierSeries):
            exponent = RationalFunction(exponent)
        self.exponent = exponent

    def log_abs_radial_samples(self, r, M):
        return self.exponent.radial_samples(r, M).real

    def radial_samples(self, r, M):
        with np.errstate(over="ignore"):
            return np.exp(self.exponent.radial_samples(r, M))


def series_divide(num, den, length):
    """Leading ``length`` coefficients of the power series num/den.

    Stable when den is outer-like (all roots on or outside the unit
    circle with den[0] dominant).
    """
    num = _ascomplex(num)
    den = _ascomplex(den)
    out = np.zeros(length, dtype=complex)
    d0 = den[0]
    bw = len(den) - 1
    for k in range(length):
        acc = num[k] if k < len(num) else 0.0
        hi = min(bw, k)
        if hi >= 1:
            acc = acc - np.dot(den[1:hi + 1], out[k - hi:k][::-1])
        out[k] = acc / d0
    return out


def series_exp(log_coeffs, length):
    """Power-series exponential of an analytic series.

    The leading ``length`` output coefficients depend only on the
    leading ``length`` input coefficients, so truncating the exponent
    first loses nothing.
    """
    lam = _ascomplex(log_coeffs)[:length]
    lam = np.pad(lam, (0, max(0, length - len(lam))))
    out = np.zeros(length, dtype=complex)
    out[0] = np.exp(lam[0])
    weighted = lam * np.arange(length)
    for k in range(1, length):
        out[k] = np.dot(weighted[1:k + 1], out[k - 1::-1][:k]) / k
    return out


def polynomial_roots(f):
    """Roots of an analytic polynomial series (empty for constants)."""
    f.require_analytic()
    c = f.analytic_coefficients(f.max_index + 1)
    if len(c) < 2:
        return np.array([], dtype=complex)
    return np.roots(c[::-1])
