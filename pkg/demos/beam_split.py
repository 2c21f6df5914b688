"""Beam split with frequency-flat phase shifters.

A 64-element ULA steered at 45 deg with PS-only weights: each subcarrier's
beam drifts to sin(theta) = (f_c/f_m) sin(theta0), about 2.3 deg of skew
across a 20 GHz band at 200 GHz.
"""

from __future__ import annotations

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from thzirs import (ArrayGeometry, analog_weights_at, beam_pattern,
                    default_angle_grid, ps_only_precoder, subcarrier_frequencies)


def main() -> None:
    fc = 200e9
    bw = 20e9
    theta0 = math.radians(45.0)
    geom = ArrayGeometry.ula(64, f_c=fc)
    prec = ps_only_precoder(geom, theta0, fc)
    freqs = subcarrier_frequencies(fc, bw, 64)
    angles = default_angle_grid()

    peaks = []
    for f in freqs:
        pattern = beam_pattern(geom, analog_weights_at(prec, f), f, angles)
        peaks.append(pattern.argmax_deg())
    predicted = np.degrees(np.arcsin((fc / freqs) * math.sin(theta0)))

    print("subcarrier 1  (%.0f GHz): beam at %.3f deg, law says %.3f"
          % (freqs[0] / 1e9, peaks[0], predicted[0]))
    print("subcarrier 64 (%.0f GHz): beam at %.3f deg, law says %.3f"
          % (freqs[-1] / 1e9, peaks[-1], predicted[-1]))

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 4), constrained_layout=True)
    ax0.plot(freqs / 1e9, peaks, ".", label="grid argmax")
    ax0.plot(freqs / 1e9, predicted, "-", lw=1, label="(f_c/f) sin rule")
    ax0.set_xlabel("Frequency (GHz)")
    ax0.set_ylabel("Beam direction (deg)")
    ax0.legend()
    ax0.grid(True, ls=":")

    for f, label in [(freqs[0], "edge low"), (fc, "center"), (freqs[-1], "edge high")]:
        pattern = beam_pattern(geom, analog_weights_at(prec, f), f, angles)
        ax1.plot(angles, 10 * np.log10(pattern.gains + 1e-12), lw=0.8, label=label)
    ax1.set_xlim(40, 52)
    ax1.set_ylim(-40, 2)
    ax1.set_xlabel("Angle (deg)")
    ax1.set_ylabel("Gain (dB)")
    ax1.legend()
    ax1.grid(True, ls=":")

    out = os.path.join(os.path.dirname(__file__), "out")
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, "beam_split.png")
    fig.savefig(path, dpi=120)
    print("wrote", path)


if __name__ == "__main__":
    main()
