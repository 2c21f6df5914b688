"""Discrete reflecting phases: how few bits are enough.

The 16x16 surface is configured for the scene, then its phases are
snapped to 2^b uniform levels. One bit costs about 4 dB at the band
edge; three bits are already close to the continuous optimum.
"""

from __future__ import annotations

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from thzirs import (ArrayGeometry, FrequencyGrid, Scene, configure_for_scene,
                    deployment_scheme, gain_profile, quantize_phases)


def fig_scene() -> Scene:
    def position(range_m, az_deg, el_deg):
        az, el = math.radians(az_deg), math.radians(el_deg)
        u = np.array([math.cos(el) * math.cos(az),
                      math.cos(el) * math.sin(az), math.sin(el)])
        return range_m * u

    bs = position(5.0, 30.0, 35.0)
    return Scene(bs_position=bs, bs_boresight=-bs,
                 user_positions=[position(3.0, -40.0, -10.0)])


def main() -> None:
    fc = 200e9
    grid = FrequencyGrid(fc, 20e9, 64)
    scene = fig_scene()
    bs = ArrayGeometry.ula(1, f_c=fc)
    weights = np.ones(1, dtype=complex)

    ideal = deployment_scheme(1, f_c=fc)
    configure_for_scene(ideal, scene, fc)
    reference = abs(gain_profile(bs, lambda f: weights, ideal, scene, grid).reference)

    fig, ax = plt.subplots(figsize=(7, 4), constrained_layout=True)
    for bits in (1, 2, 3, 4, None):
        dep = deployment_scheme(1, f_c=fc)
        configure_for_scene(dep, scene, fc)
        if bits is not None:
            for panel in dep.panels:
                panel.phases = quantize_phases(panel.phases, bits)
        profile = gain_profile(bs, lambda f: weights, dep, scene, grid)
        rel = np.abs(profile.gains) / reference
        label = "ideal" if bits is None else "b = %d" % bits
        ax.plot(grid.frequencies / 1e9, rel, lw=1, label=label)
        print("%-6s min rel gain %.4f" % (label, rel.min()))
    ax.set_xlabel("Frequency (GHz)")
    ax.set_ylabel("Gain relative to ideal at f_c")
    ax.legend()
    ax.grid(True, ls=":")

    out = os.path.join(os.path.dirname(__file__), "out")
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, "quantization.png")
    fig.savefig(path, dpi=120)
    print("wrote", path)


if __name__ == "__main__":
    main()
