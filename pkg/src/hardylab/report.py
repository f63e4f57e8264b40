"""Scenario reports and their deterministic serialization.

Reports are bit-stable: keys are emitted sorted, floats are rendered
with a fixed 17-significant-digit format, and nothing time-dependent
goes into the files (wall time lives on the Report object only, for
console output).  Re-running an identical configuration therefore
produces byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class Table:
    name: str
    columns: tuple
    rows: tuple  # tuples of str | int | float


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    values: dict = field(default_factory=dict)


@dataclass
class Report:
    scenario: str
    config_echo: dict
    tables: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def verdict(self):
        return "PASS" if all(c.passed for c in self.checks) else "FAIL"

    def add_table(self, name, columns, rows):
        self.tables.append(Table(name, tuple(columns),
                                 tuple(tuple(r) for r in rows)))

    def add_check(self, name, passed, detail="", **values):
        self.checks.append(CheckResult(name, bool(passed), detail, values))

    def summary_lines(self):
        out = [f"scenario {self.scenario}: {self.verdict} "
               f"({self.wall_time:.2f}s)"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail
                                                 else ""))
        return out


def _fmt(value):
    """Deterministic JSON fragment for one scalar."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value != value:
            return '"nan"'
        if value == float("inf"):
            return '"inf"'
        if value == float("-inf"):
            return '"-inf"'
        return format(value, ".17g")
    if isinstance(value, complex):
        return json.dumps(f"{value.real:.17g}{value.imag:+.17g}j")
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _render(obj, indent=0):
    pad, pad1 = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f'{pad1}{json.dumps(str(k))}: {_render(obj[k], indent + 1)}'
                 for k in sorted(obj, key=str))
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = (f"{pad1}{_render(v, indent + 1)}" for v in obj)
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return _fmt(obj)


def report_payload(report):
    """Serializable view of a report (wall time deliberately excluded:
    the emission contract is byte-stability under identical config)."""
    return {
        "scenario": report.scenario,
        "verdict": report.verdict,
        "config": report.config_echo,
        "tables": [{"name": t.name,
                    "columns": list(t.columns),
                    "rows": [list(r) for r in t.rows]} for t in report.tables],
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail,
                    "values": c.values} for c in report.checks],
    }


def render_json(report):
    return _render(report_payload(report)) + "\n"


def _csv_cell(value):
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        if any(ch in value for ch in ",\"\n"):
            return '"' + value.replace('"', '""') + '"'
        return value
    return str(value)


def emit_report(report, fmt, path):
    """Write a report under ``path``; returns the files written.

    ``fmt='json'`` writes a single ``<scenario>.json``.  ``fmt='csv'``
    writes one CSV per table plus a JSON manifest carrying the checks,
    verdict and config echo.
    """
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt == "json":
        target = path / f"{report.scenario}.json"
        target.write_text(render_json(report))
        written.append(target)
    elif fmt == "csv":
        for t in report.tables:
            target = path / f"{report.scenario}__{t.name}.csv"
            lines = [",".join(t.columns)]
            lines += [",".join(_csv_cell(v) for v in row) for row in t.rows]
            target.write_text("\n".join(lines) + "\n")
            written.append(target)
        manifest = {
            "scenario": report.scenario,
            "verdict": report.verdict,
            "config": report.config_echo,
            "tables": [f"{report.scenario}__{t.name}.csv"
                       for t in report.tables],
            "checks": [{"name": c.name, "passed": c.passed,
                        "detail": c.detail, "values": c.values}
                       for c in report.checks],
        }
        target = path / f"{report.scenario}__manifest.json"
        target.write_text(_render(manifest) + "\n")
        written.append(target)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return written
