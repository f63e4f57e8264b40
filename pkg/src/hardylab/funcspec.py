"""Parsing of the small function-spec DSL used by scenario configs.

A spec is one line of structured text:

    rational: num=[1,1] den=[2]
    coefficients: [1, 0, 0.5]
    generator: gevrey c=2 alpha=0.5
    generator: powerlaw s=2.2
    generator: outerpower base=[1,-1] theta=3
    blaschke: zeros=[0, 0.3+0.2j] rotation=1

Rational specs keep their numerator/denominator structure (the library
carries quotients exactly); expansion to a plain coefficient series by
long division is available for specs whose denominator is zero-free on
the closed-disk grid.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

import numpy as np

from . import config
from .factorization import BlaschkeSpec, outer_power
from .series import FourierSeries, RationalFunction


class FunctionSpecError(ValueError):
    """Malformed function spec; carries a 1-based column offset."""

    def __init__(self, message, column=1):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class RationalSpec:
    num: tuple
    den: tuple


@dataclass(frozen=True)
class CoefficientsSpec:
    values: tuple


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BlaschkeInnerSpec:
    zeros: tuple
    rotation: complex = 1.0


_TOKEN = re.compile(r"(\w+)\s*=\s*(\[[^\]]*\]|\S+)")


def _literal(text, column):
    try:
        value = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise FunctionSpecError(f"cannot parse value {text!r}: {exc}", column)
    return value

def _numbers(value, column):
    if not isinstance(value, (list, tuple)):
        raise FunctionSpecError("expected a list of numbers", column)
    try:
        return tuple(complex(v) for v in value)
    except TypeError:
        raise FunctionSpecError("list entries must be numbers", column)


def _fields(body, offset):
    out = {}
    for match in _TOKEN.finditer(body):
        out[match.group(1)] = _literal(match.group(2),
                                       offset + match.start(2) + 1)
    return out


def parse_function_spec(text):
    """Parse one DSL line into a typed spec."""
    if ":" not in text:
        raise FunctionSpecError("expected '<kind>: ...'")
    head, _, body = text.partition(":")
    kind = head.strip().lower()
    offset = len(head) + 1
    if kind == "rational":
        fields = _fields(body, offset)
        if "num" not in fields or "den" not in fields:
            raise FunctionSpecError("rational spec needs num=[...] den=[...]",
                                    offset + 1)
        return RationalSpec(_numbers(fields["num"], offset),
                            _numbers(fields["den"], offset))
    if kind == "coefficients":
        return CoefficientsSpec(_numbers(_literal(body.strip(), offset + 1),
                                         offset + 1))
    if kind == "generator":
        parts = body.strip().split(None, 1)
        if not parts:
            raise FunctionSpecError("generator spec needs a name", offset + 1)
        name = parts[0].lower()
        params = _fields(parts[1], offset + len(parts[0]) + 1) \
            if len(parts) > 1 else {}
        if name not in ("gevrey", "powerlaw", "outerpower"):
            raise FunctionSpecError(f"unknown generator {name!r}", offset + 1)
        return GeneratorSpec(name, params)
    if kind == "blaschke":
        fields = _fields(body, offset)
        zeros = _numbers(fields.get("zeros", []), offset)
        return BlaschkeInnerSpec(zeros, complex(fields.get("rotation", 1.0)))
    raise FunctionSpecError(f"unknown spec kind {head.strip()!r}")


def _check_denominator(den, grid_size):
    """Reject denominators that vanish anywhere on the closed-disk grid."""
    series = FourierSeries.from_analytic(den)
    if series.is_zero:
        raise FunctionSpecError("zero denominator")
    coeffs = series.analytic_coefficients(series.max_index + 1)
    if len(coeffs) > 1:
        roots = np.roots(coeffs[::-1])
        if np.any(np.abs(roots) <= 1.0 + 1e-12):
            bad = roots[np.abs(roots) <= 1.0 + 1e-12][0]
            raise FunctionSpecError(
                f"denominator vanishes on the closed disk at {bad:.6g}")
    vals = np.abs(series.boundary_samples(grid_size))
    if np.min(vals) < 1e-12:
        raise FunctionSpecError("denominator vanishes on the boundary grid")


def realize(spec, order=None, grid_size=None):
    """Materialize a spec as the object the library computes with.

    Rational specs become :class:`RationalFunction` (kept exact),
    coefficient and generator specs become series, and Blaschke specs
    become :class:`BlaschkeSpec`.
    """
    order = order or config.WORKING_ORDER
    grid_size = grid_size or config.GRID_SIZE
    if isinstance(spec, RationalSpec):
        try:
            return RationalFunction(FourierSeries.from_analytic(spec.num),
                                    FourierSeries.from_analytic(spec.den))
        except ValueError as exc:
            raise FunctionSpecError(str(exc))
    if isinstance(spec, CoefficientsSpec):
        return FourierSeries.from_analytic(spec.values)
    if isinstance(spec, BlaschkeInnerSpec):
        return BlaschkeSpec(spec.zeros, spec.rotation)
    if isinstance(spec, GeneratorSpec):
        n = np.arange(order + 1, dtype=float)
        p = spec.params
        if spec.name == "gevrey":
            return FourierSeries.from_analytic(
                np.exp(-float(p.get("c", 1.0)) *
                       n ** float(p.get("alpha", 0.5))))
        if spec.name == "powerlaw":
            return FourierSeries.from_analytic(
                (n + 1.0) ** -float(p.get("s", 1.0)))
        if spec.name == "outerpower":
            base = FourierSeries.from_analytic(
                _numbers(p.get("base", (1.0,)), 1))
            return outer_power(base, float(p.get("theta", 1.0)),
                               order, grid_size)
    raise FunctionSpecError(f"cannot realize {spec!r}")


def expand_to_series(spec, order=None, grid_size=None):
    """Spec as a plain series; rationals go through validated long division.

    Rational specs are expanded by long division at the working order,
    after checking the denominator is zero-free on the closed-disk
    grid (a pole on the grid cannot be represented by a truncation).
    """
    order = order or config.WORKING_ORDER
    grid_size = grid_size or config.GRID_SIZE
    obj = realize(spec, order, grid_size)
    if isinstance(obj, RationalFunction):
        _check_denominator([obj.den[k] for k in
                            range(obj.den.max_index + 1)], grid_size)
        return obj.to_series(order)
    if isinstance(obj, FourierSeries):
        return obj
    raise FunctionSpecError("spec does not describe a boundary function")
