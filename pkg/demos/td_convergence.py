"""True-time-delay beam convergence on a sparse subarray.

Sixteen delayers (one per group of four antennas) cancel the group-level
part of the PS frequency ramp, so every subcarrier's beam lands back on
the 45 deg target that PS-only steering loses at the band edges.
"""

from __future__ import annotations

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from thzirs import (ArrayGeometry, TdStructure, analog_weights_at, beam_pattern,
                    convergence_delays, default_angle_grid, ps_only_precoder,
                    subcarrier_frequencies)


def main() -> None:
    fc = 200e9
    bw = 20e9
    theta0 = math.radians(45.0)
    geom = ArrayGeometry.ula(64, f_c=fc)
    freqs = subcarrier_frequencies(fc, bw, 64)
    angles = default_angle_grid()

    ps = ps_only_precoder(geom, theta0, fc)
    td = convergence_delays(TdStructure.sparse_subarray(64, 4), geom, theta0, fc)
    print("delay ladder (ps):", np.round(td.delays * 1e12, 2))

    target = int(round((45.0 - angles[0]) / (angles[1] - angles[0])))
    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 4), constrained_layout=True)
    for prec, label in [(ps, "PS only"), (td, "16 TDs")]:
        peaks, at_target = [], []
        for f in freqs:
            pattern = beam_pattern(geom, analog_weights_at(prec, f), f, angles)
            peaks.append(pattern.argmax_deg())
            at_target.append(pattern.gains[target])
        ax0.plot(freqs / 1e9, peaks, ".", ms=3, label=label)
        ax1.plot(freqs / 1e9, at_target, lw=1, label=label)
        print("%-8s worst gain toward 45 deg: %.2e" % (label, min(at_target)))
    ax0.axhline(45.0, color="k", lw=0.5)
    ax0.set_xlabel("Frequency (GHz)")
    ax0.set_ylabel("Beam direction (deg)")
    ax0.legend()
    ax0.grid(True, ls=":")
    ax1.set_xlabel("Frequency (GHz)")
    ax1.set_ylabel("Gain toward 45 deg")
    ax1.legend()
    ax1.grid(True, ls=":")

    out = os.path.join(os.path.dirname(__file__), "out")
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, "td_convergence.png")
    fig.savefig(path, dpi=120)
    print("wrote", path)


if __name__ == "__main__":
    main()
