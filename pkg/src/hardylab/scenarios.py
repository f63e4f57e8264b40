"""Named desk-scale experiments and their configuration.

Each scenario cross-checks one characterization: ``theorem-a`` pits
Hankel-continuity verdicts over a Hardy-space probe against multiplier
certification on a pair panel, ``theorem-b`` and ``davis-mccarthy`` do
the same with Privalov and Smirnov probes, ``stability`` exercises the
convergence of Pythagorean factorizations, ``mate-linearity`` measures
the conjugate-linearity defect of the mate map, and ``sanity`` runs
the projection/factorization invariant battery.

Configs are flat INI files; every threshold that influences a verdict
is echoed into the report.  Scenario-level assertion failures are
recorded as failed checks, never raised.
"""

from __future__ import annotations

import configparser
import time
from dataclasses import dataclass, field

import numpy as np

from . import config as defaults
from .factorization import (pair_from_outer, pythagorean_factorize,
                            pythagorean_mate, stability_experiment)
from .funcspec import parse_function_spec, realize
from .hb_space import MULTIPLIER, NOT_CERTIFIED, lotto_sarason_check
from .metrics import (duality_pairing, garsia_bmoa_norm, hp_quasinorm)
from .operators import (BOUNDED, INCONCLUSIVE, Hp, Privalov, Smirnov, apply,
                        hankel_continuity_probe, toeplitz_matrix)
from .report import Report
from .series import (DiskGrid, FourierSeries, RationalFunction, conj_series,
                     multiply, project_minus, project_plus)

SCENARIOS = ("sanity", "theorem-a", "theorem-b", "davis-mccarthy",
             "stability", "mate-linearity")


class ConfigError(ValueError):
    """Invalid scenario configuration."""


@dataclass
class ScenarioConfig:
    name: str
    working_order: int = defaults.WORKING_ORDER
    grid_size: int = defaults.GRID_SIZE
    dims: tuple = (64, 256, 1024)
    seed: int = 20240801
    thresholds: dict = field(default_factory=dict)
    symbols: list = field(default_factory=list)   # (name, spec text)
    pairs: list = field(default_factory=list)     # (name, mode, spec text)
    stability: dict = field(default_factory=dict)
    mate: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.name!r}; "
                              f"choose from {', '.join(SCENARIOS)}")
        if self.grid_size < 2 * self.working_order + 1:
            raise ConfigError("grid_size must be at least 2*working_order+1")
        if self.grid_size & (self.grid_size - 1):
            raise ConfigError("grid_size must be a power of two")
        if list(self.dims) != sorted(self.dims) or len(self.dims) < 2:
            raise ConfigError("dims must be an increasing ladder")
        base = dict(DEFAULT_THRESHOLDS)
        base.update(self.thresholds)
        self.thresholds = base

    def grid(self):
        return DiskGrid(tuple(1.0 - 2.0 ** -j
                              for j in range(1, defaults.RADII_COUNT + 1)),
                        self.grid_size)


DEFAULT_THRESHOLDS = {
    "bounded": 1.5,
    "divergent": 4.0,
    "garsia": 50.0,
    "stabilization": 0.05,
    "divergence_factor": 10.0,
    "probe_samples": 64,
    "p": 1.0,
    "q": 2.0,
}

DEFAULT_SYMBOLS = {
    "theorem-a": [("powerlaw22", "generator: powerlaw s=2.2"),
                  ("powerlaw11", "generator: powerlaw s=1.1")],
    "theorem-b": [("gevrey205", "generator: gevrey c=2 alpha=0.5"),
                  ("powerlaw2", "generator: powerlaw s=2")],
}
DEFAULT_SYMBOLS["davis-mccarthy"] = DEFAULT_SYMBOLS["theorem-b"]

DEFAULT_PAIRS = {
    "theorem-a": [("halfsum", "quotient", "rational: num=[1,1] den=[1,-1]"),
                  ("constant", "quotient", "rational: num=[3] den=[4]")],
    "theorem-b": [("halfsum", "quotient", "rational: num=[1,1] den=[1,-1]"),
                  ("deepzero", "outer_a",
                   "generator: outerpower base=[0.5,-0.5] theta=3")],
}
DEFAULT_PAIRS["davis-mccarthy"] = DEFAULT_PAIRS["theorem-b"]

DEFAULT_STABILITY = {
    "quotient": "rational: num=[1,1] den=[1,-1]",
    "exponents": (4, 16, 64, 256, 512),
    "max_final_a_error": 1e-2,
}

DEFAULT_MATE = {
    "h1": "rational: num=[1,1] den=[1,-1]",
    "h2": "coefficients: [1]",
    "lam": 2.0,
    "probe": "coefficients: [0, 1]",
    "dim": 256,
    "max_residual": 1e-6,
}


def default_config(name):
    cfg = ScenarioConfig(name)
    cfg.symbols = list(DEFAULT_SYMBOLS.get(name, []))
    cfg.pairs = list(DEFAULT_PAIRS.get(name, []))
    cfg.stability = dict(DEFAULT_STABILITY)
    cfg.mate = dict(DEFAULT_MATE)
    return cfg


def load_config(path, scenario=None):
    """Read a flat INI config; missing keys fall back to defaults."""
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        read = parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    if not read:
        raise ConfigError(f"config file {path} not found")
    name = scenario or parser.get("scenario", "name", fallback=None)
    if name is None:
        raise ConfigError("config has no [scenario] name and no --scenario "
                          "override was given")
    cfg = default_config(name)
    try:
        if parser.has_section("scenario"):
            sec = parser["scenario"]
            cfg.working_order = sec.getint("working_order",
                                           cfg.working_order)
            cfg.grid_size = sec.getint("grid_size", cfg.grid_size)
            if "dims" in sec:
                cfg.dims = tuple(int(x) for x in sec["dims"].split(","))
            cfg.seed = sec.getint("seed", cfg.seed)
        if parser.has_section("thresholds"):
            for key, raw in parser["thresholds"].items():
                cfg.thresholds[key] = float(raw)
        if parser.has_section("symbols"):
            cfg.symbols = list(parser["symbols"].items())
        if parser.has_section("pairs"):
            cfg.pairs = [(k,) + _split_pair_spec(v)
                         for k, v in parser["pairs"].items()]
        if parser.has_section("stability"):
            sec = parser["stability"]
            cfg.stability["quotient"] = sec.get(
                "quotient", cfg.stability["quotient"])
            if "exponents" in sec:
                cfg.stability["exponents"] = tuple(
                    int(x) for x in sec["exponents"].split(","))
            cfg.stability["max_final_a_error"] = sec.getfloat(
                "max_final_a_error", cfg.stability["max_final_a_error"])
        if parser.has_section("mate_linearity"):
            sec = parser["mate_linearity"]
            for key in ("h1", "h2", "probe"):
                cfg.mate[key] = sec.get(key, cfg.mate[key])
            cfg.mate["lam"] = sec.getfloat("lam", cfg.mate["lam"])
            cfg.mate["dim"] = sec.getint("dim", cfg.mate["dim"])
            cfg.mate["max_residual"] = sec.getfloat(
                "max_residual", cfg.mate["max_residual"])
    except ValueError as exc:
        raise ConfigError(f"bad value in {path}: {exc}") from exc
    # re-validate after overrides
    return ScenarioConfig(cfg.name, cfg.working_order, cfg.grid_size,
                          cfg.dims, cfg.seed, cfg.thresholds, cfg.symbols,
                          cfg.pairs, cfg.stability, cfg.mate)


def _split_pair_spec(text):
    mode, _, spec = text.partition(":")
    mode = mode.strip().lower()
    if mode not in ("quotient", "symbol", "outer_a"):
        raise ConfigError(f"pair spec must start with quotient:/symbol:/"
                          f"outer_a:, got {text!r}")
    return mode, spec.strip()


def _resolve_pair(mode, text, cfg):
    obj = realize(parse_function_spec(text), cfg.working_order,
                  cfg.grid_size)
    if mode == "quotient":
        pair, _ = pythagorean_factorize(obj, tol=1e-8,
                                        order=cfg.working_order,
                                        grid_size=cfg.grid_size)
        return pair
    if mode == "symbol":
        series = obj.to_series(cfg.working_order) \
            if isinstance(obj, RationalFunction) else obj
        return pythagorean_mate(series, tol=1e-8, order=cfg.working_order,
                                grid_size=cfg.grid_size)
    series = obj.to_series(cfg.working_order) \
        if isinstance(obj, RationalFunction) else obj
    return pair_from_outer(series, tol=1e-8, order=cfg.working_order,
                           grid_size=cfg.grid_size)


def _echo(cfg, extra=None):
    echo = {
        "scenario": cfg.name,
        "working_order": cfg.working_order,
        "grid_size": cfg.grid_size,
        "dims": list(cfg.dims),
        "seed": cfg.seed,
        "thresholds": dict(cfg.thresholds),
        "symbols": {k: v for k, v in cfg.symbols},
        "pairs": {k: f"{mode}: {text}" for k, mode, text in cfg.pairs},
    }
    if extra:
        echo.update(extra)
    return echo


def run_scenario(cfg):
    """Dispatch one configured scenario and return its report."""
    start = time.perf_counter()
    runner = {
        "sanity": _run_sanity,
        "theorem-a": _run_panel,
        "theorem-b": _run_panel,
        "davis-mccarthy": _run_panel,
        "stability": _run_stability,
        "mate-linearity": _run_mate_linearity,
    }[cfg.name]
    report = runner(cfg)
    report.wall_time = time.perf_counter() - start
    return report


# -- panel scenarios ----------------------------------------------------


def _probe_space(cfg):
    if cfg.name == "theorem-a":
        return Hp(cfg.thresholds["p"])
    if cfg.name == "theorem-b":
        return Privalov(cfg.thresholds["q"])
    return Smirnov()


def _run_panel(cfg):
    space = _probe_space(cfg)
    report = Report(cfg.name, _echo(cfg, {"probe_space": repr(space)}))
    grid = cfg.grid()
    symbols = [(name, realize(parse_function_spec(text), cfg.working_order,
                              cfg.grid_size))
               for name, text in cfg.symbols]
    pairs = [(name, _resolve_pair(mode, text, cfg))
             for name, mode, text in cfg.pairs]

    probe_rows, cert_rows, matrix_rows = [], [], []
    inconclusive = []
    pattern_ok = True
    for sname, m in symbols:
        probe = hankel_continuity_probe(
            m, space, cfg.dims,
            samples_per_dim=int(cfg.thresholds["probe_samples"]),
            grid=grid,
            bounded_threshold=cfg.thresholds["bounded"],
            divergent_threshold=cfg.thresholds["divergent"])
        for dim, norm in zip(probe.dims, probe.probe_norms):
            probe_rows.append((sname, dim, norm))
        if probe.verdict == INCONCLUSIVE:
            inconclusive.append(f"probe:{sname}")
        cell_verdicts = []
        for pname, pair in pairs:
            cert = lotto_sarason_check(
                pair, m, cfg.dims,
                garsia_threshold=cfg.thresholds["garsia"],
                stabilization_tol=cfg.thresholds["stabilization"],
                grid=grid)
            cell_verdicts.append(cert.verdict)
            cert_rows.append((sname, pname, cert.u_garsia,
                              cert.mate_garsia, cert.verdict))
        universal = MULTIPLIER if all(v == MULTIPLIER
                                      for v in cell_verdicts) \
            else NOT_CERTIFIED
        agrees = (probe.verdict == BOUNDED) == (universal == MULTIPLIER)
        if probe.verdict == INCONCLUSIVE:
            agrees = False
        pattern_ok = pattern_ok and agrees
        matrix_rows.append((sname, probe.verdict, universal,
                            "yes" if agrees else "no"))

    report.add_table("probe_norms", ("symbol", "dim", "probe_norm"),
                     probe_rows)
    report.add_table("certification",
                     ("symbol", "pair", "u_garsia", "mate_garsia", "verdict"),
                     cert_rows)
    report.add_table("verdict_matrix",
                     ("symbol", "hankel_verdict", "universal_verdict",
                      "equivalent"), matrix_rows)
    report.add_check("no_inconclusive_cells", not inconclusive,
                     ", ".join(inconclusive) if inconclusive else
                     "all probe and certification verdicts decisive")
    report.add_check(
        "continuity_matches_certification", pattern_ok,
        "Hankel-continuity verdict agrees with universal-multiplier "
        "certification for every panel symbol")
    return report


# -- stability ----------------------------------------------------------


def _run_stability(cfg):
    st = cfg.stability
    report = Report(cfg.name, _echo(cfg, {"stability": {
        "quotient": st["quotient"],
        "exponents": list(st["exponents"]),
        "max_final_a_error": st["max_final_a_error"]}}))
    h = realize(parse_function_spec(st["quotient"]), cfg.working_order,
                cfg.grid_size)
    exponents = st["exponents"]
    perts = [FourierSeries({n: 1.0 / n}) for n in exponents]
    table = stability_experiment(h, perts,
                                 labels=[str(n) for n in exponents],
                                 order=cfg.working_order, grid=cfg.grid())
    report.add_table("convergence",
                     ("exponent", "metric", "a_error", "b_error"),
                     [(r.label, r.metric, r.a_error, r.b_error)
                      for r in table.rows])
    flagged = table.non_monotone_rows
    report.add_check("columns_strictly_decrease", table.monotone,
                     "non-monotone rows: " + ", ".join(flagged)
                     if flagged else "metric, a and b errors all decrease")
    final = table.rows[-1]
    report.add_check("final_a_error_small",
                     final.a_error < st["max_final_a_error"],
                     f"|a_n - a| = {final.a_error:.3e} at n={final.label}")
    return report


# -- mate linearity -----------------------------------------------------


def _run_mate_linearity(cfg):
    from .hb_space import mate_linearity_residual
    mt = cfg.mate
    report = Report(cfg.name, _echo(cfg, {"mate_linearity": {
        k: (list(v) if isinstance(v, tuple) else v) for k, v in mt.items()}}))
    h1 = realize(parse_function_spec(mt["h1"]), cfg.working_order,
                 cfg.grid_size)
    h2 = realize(parse_function_spec(mt["h2"]), cfg.working_order,
                 cfg.grid_size)
    m = realize(parse_function_spec(mt["probe"]), cfg.working_order,
                cfg.grid_size)
    residual = mate_linearity_residual(h1, h2, mt["lam"], m, int(mt["dim"]))
    report.add_table("residual", ("lam", "dim", "residual"),
                     [(mt["lam"], int(mt["dim"]), residual)])
    report.add_check("conjugate_linearity", residual < mt["max_residual"],
                     f"residual {residual:.3e} < {mt['max_residual']:g}")
    return report


# -- sanity battery ------------------------------------------------------


def _random_series(rng, order, two_sided=True):
    lo = -order if two_sided else 0
    coeffs = {}
    for n in range(lo, order + 1):
        coeffs[n] = complex(rng.standard_normal(), rng.standard_normal())
    return FourierSeries(coeffs)


def _run_sanity(cfg):
    report = Report(cfg.name, _echo(cfg))
    rng = np.random.default_rng(cfg.seed)
    grid = cfg.grid()

    worst_split = worst_idem = worst_conj = 0.0
    for _ in range(8):
        f = _random_series(rng, 12)
        split = project_plus(f) + project_minus(f) - f
        worst_split = max(worst_split, split.l2_norm())
        pp = project_plus(project_plus(f)) - project_plus(f)
        mm = project_minus(project_minus(f)) - project_minus(f)
        worst_idem = max(worst_idem, pp.l2_norm(), mm.l2_norm())
        lhs = conj_series(project_minus(f))
        rhs = (project_plus(conj_series(f))
               - FourierSeries.constant(np.conj(f[0])))
        worst_conj = max(worst_conj, (lhs - rhs).l2_norm())
    report.add_check("projection_complementarity", worst_split == 0.0,
                     f"max |P+ f + P- f - f| = {worst_split:g}")
    report.add_check("projection_idempotence", worst_idem == 0.0,
                     f"max defect {worst_idem:g}")
    report.add_check("conjugation_identity", worst_conj == 0.0,
                     f"max coefficient defect {worst_conj:g}")

    worst_holder = 0.0
    for s, p in ((2.0, 2.0), (4.0, 4.0), (1.0, 2.0)):
        q = 1.0 / (1.0 / s + 1.0 / p)
        g = _random_series(rng, 6, two_sided=False)
        h = _random_series(rng, 6, two_sided=False)
        lhs = hp_quasinorm(multiply(g, h, 0), q, grid)
        rhs = hp_quasinorm(g, s, grid) * hp_quasinorm(h, p, grid)
        worst_holder = max(worst_holder, lhs / rhs)
    report.add_check("hoelder_factorization", worst_holder <= 1.0 + 1e-6,
                     f"max ratio |gh|_q / (|g|_s |h|_p) = {worst_holder:.9f}")

    worst_garsia = 0.0
    for _ in range(4):
        u = _random_series(rng, 16, two_sided=False)
        sup = float(np.max(np.abs(u.boundary_samples(cfg.grid_size))))
        worst_garsia = max(worst_garsia, garsia_bmoa_norm(u, grid) / sup)
    report.add_check("garsia_below_sup", worst_garsia <= 1.0 + 1e-4,
                     f"max Garsia/sup ratio = {worst_garsia:.9f}")

    g = FourierSeries({0: 0.5, 1: -0.25, 2: 0.125})
    f = _random_series(rng, 20, two_sided=False)
    dim = 64
    T = toeplitz_matrix(g, dim)
    direct = apply(T, f.analytic_coefficients(dim))
    via_proj = project_plus(multiply(conj_series(g), f, 0))
    defect = float(np.linalg.norm(
        direct - via_proj.analytic_coefficients(dim)))
    report.add_check("matrix_matches_projection", defect < 1e-12,
                     f"Toeplitz window defect {defect:g}")

    pairing = duality_pairing(FourierSeries({1: 1.0}),
                              FourierSeries({1: 1.0}), grid)
    report.add_check("pairing_normalization",
                     abs(pairing - grid.top_radius ** 2) < 1e-12,
                     "single-mode pairing matches radial damping")
    return report
