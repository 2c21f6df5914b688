"""Batch scenarios: run them from Python, read the CSVs back.

Every study in this package is also packaged as a named scenario that
writes one deterministic CSV; the command-line equivalent is e.g.

    thzirs run fig4-deployment --out results/
    thzirs run fig5-convergence --override pattern.angle_points=721 --out results/

Here the same calls are made through run_scenario, with reduced grids so
the files stay small.
"""

from __future__ import annotations

import csv
import os

from thzirs import run_scenario


def main() -> None:
    out = os.path.join(os.path.dirname(__file__), "out")
    os.makedirs(out, exist_ok=True)

    for scenario, overrides in [
        ("power-table", None),
        ("fig4-deployment", None),
        ("fig5-convergence", ["pattern.angle_points=721", "grid.n_subcarriers=16"]),
        ("fig6-broadening", ["pattern.angle_points=721", "grid.n_subcarriers=16"]),
        ("sweep", ["grid.n_subcarriers=16"]),
    ]:
        paths = run_scenario(scenario, out_dir=out, overrides=overrides)
        size = os.path.getsize(paths[0])
        print("%-16s -> %s (%.0f kB)" % (scenario, paths[0], size / 1e3))

    with open(os.path.join(out, "power-table.csv"), newline="") as fh:
        for row in csv.DictReader(fh):
            print("  %(structure)s: %(power_mw)s mW with %(n_td)s TDs" % row)

    with open(os.path.join(out, "fig4-deployment.csv"), newline="") as fh:
        edge = {r["scheme"]: r["rel_gain"] for r in csv.DictReader(fh)
                if r["subcarrier_index"] == "1"}
    print("  band-edge relative gains by scheme:", edge)


if __name__ == "__main__":
    main()
