"""Command-line entry point.

    hardylab run <config> [--scenario NAME] [--out DIR]
                          [--format json|csv] [--no-figures]
    hardylab check [--out DIR] [--format json|csv] [--no-figures]

Exit codes: 0 when every verdict passes, 1 when any check fails,
2 on configuration errors.
"""

from __future__ import annotations

import argparse
import sys

from .funcspec import FunctionSpecError
from .report import emit_report
from .scenarios import (ConfigError, SCENARIOS, default_config, load_config,
                        run_scenario)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hardylab",
        description="desk-scale experiments on sub-Hardy Hilbert spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a configured scenario")
    run.add_argument("config", help="path to a flat INI scenario config")
    run.add_argument("--scenario", choices=SCENARIOS,
                     help="override the scenario named in the config")
    _output_options(run)

    check = sub.add_parser("check", help="run the sanity invariant suite")
    _output_options(check)
    return parser


def _output_options(cmd):
    cmd.add_argument("--out", default="hardylab-out",
                     help="output directory (default: ./hardylab-out)")
    cmd.add_argument("--format", choices=("json", "csv"), default="json",
                     help="report format (default: json)")
    cmd.add_argument("--no-figures", action="store_true",
                     help="skip rendering PNG figures next to the report")


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            cfg = load_config(args.config, args.scenario)
        else:
            cfg = default_config("sanity")
    except (ConfigError, FunctionSpecError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    try:
        report = run_scenario(cfg)
    except (ConfigError, FunctionSpecError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    written = emit_report(report, args.format, args.out)
    if not args.no_figures:
        from .figures import render_report_figures
        written += render_report_figures(report, args.out)

    for line in report.summary_lines():
        print(line)
    for path in written:
        print(f"wrote {path}")
    return 0 if report.verdict == "PASS" else 1


if __name__ == "__main__":
    sys.exit(main())
