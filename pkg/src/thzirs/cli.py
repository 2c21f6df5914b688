"""Command-line front end for the scenario runner.

Exit codes: 0 success, 2 usage error, 3 configuration error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, ThzirsError
from .runner import SCENARIOS, load_config, run_scenario, validate_config


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thzirs",
        description="Wideband THz beam-split / TD-precoding / IRS-deployment simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario and write its CSV")
    run_p.add_argument("scenario", choices=SCENARIOS)
    run_p.add_argument("--config", help="YAML config file")
    run_p.add_argument("--out", default=".", help="output directory (must exist)")
    run_p.add_argument("--override", action="append", default=[], metavar="KEY=VALUE",
                       help="override a config field, e.g. grid.n_subcarriers=32")

    sub.add_parser("list-scenarios", help="print available scenario names")

    val_p = sub.add_parser("validate", help="check a config file without running")
    val_p.add_argument("--config", required=True, help="YAML config file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "list-scenarios":
            for name in SCENARIOS:
                print(name)
            return 0
        if args.command == "validate":
            config = load_config(args.config)
            scenario = config.get("scenario")
            if scenario is None:
                raise ConfigError("field 'scenario' is required to validate a config file")
            validate_config(scenario, config)
            print("config ok: %s" % scenario)
            return 0
        config = load_config(args.config) if args.config else None
        paths = run_scenario(args.scenario, config, args.out, args.override)
        for path in paths:
            print(path)
        return 0
    except ThzirsError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
