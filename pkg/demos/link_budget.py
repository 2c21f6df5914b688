"""Hardware power, leakage metrics, and spectral efficiency in one pass.

Counts components per analog structure at the constant prices (250 mW
per RF chain, 80 per delayer, 30 per shifter), then shows the two
leakage figures: how much of a converged beam misses the surface, and
how many surface elements a narrow beam leaves dark.
"""

from __future__ import annotations

import math

import numpy as np

from thzirs import (ArrayGeometry, Scene, TdStructure, analog_weights_at,
                    beam_pattern, default_angle_grid, deployment_scheme,
                    hardware_power, incident_element_powers, link_angles,
                    beam_leakage, ps_only_precoder, reflecting_leakage,
                    spectral_efficiency, convergence_delays,
                    subcarrier_frequencies)


def main() -> None:
    fc = 200e9

    print("analog structure power at N = 64, one RF chain")
    rows = [("PS only", TdStructure.ps_only(64)),
            ("sparse, 16 TDs", TdStructure.sparse_subarray(64, 4)),
            ("fully connected, 16 TDs", TdStructure.fully_connected(64, 16)),
            ("per-antenna TDs", TdStructure.per_antenna(64))]
    for label, structure in rows:
        print("  %-24s %2d TD %3d PS  %6.0f mW"
              % (label, structure.n_td, structure.n_ps, hardware_power(structure)))

    # beam leakage: band-edge beam of a 45-deg steer vs a 2-deg aperture
    geom = ArrayGeometry.ula(64, f_c=fc)
    prec = ps_only_precoder(geom, math.radians(45.0), fc)
    angles = default_angle_grid()
    for f, label in [(fc, "center"), (190e9, "edge")]:
        pattern = beam_pattern(geom, analog_weights_at(prec, f), f, angles)
        frac = beam_leakage(pattern, (44.0, 46.0))
        print("beam leakage outside [44, 46] deg at %-6s: %.3f" % (label, frac))

    # reflecting leakage: a converged beam lights one of four 8x8 panels
    dep = deployment_scheme(3, f_c=fc)
    scene = Scene(bs_position=[1.2, 0.0, 0.0], bs_boresight=[-1.0, 0.0, 0.0],
                  user_positions=[[1.0, 1.0, -0.3]])
    bs = ArrayGeometry.ula(64, f_c=fc)
    toward = link_angles(scene.bs_position, dep.panels[0].center, scene.bs_boresight)
    w = analog_weights_at(ps_only_precoder(bs, toward, fc), fc)
    powers = incident_element_powers(bs, w, dep, scene, fc)
    print("reflecting leakage, beam on panel 1 of 4: %.2f" % reflecting_leakage(powers))

    # spectral efficiency with and without delayers, flat 10 dB SNR
    freqs = subcarrier_frequencies(fc, 20e9, 64)
    snrs = np.full(64, 10.0)

    def band_gains(precoder):
        target = int(round((45.0 + 90.0) / (angles[1] - angles[0])))
        return np.array([math.sqrt(beam_pattern(geom, analog_weights_at(precoder, f),
                                                f, angles).gains[target])
                         for f in freqs])

    td = convergence_delays(TdStructure.sparse_subarray(64, 4), geom,
                            math.radians(45.0), fc)
    print("spectral efficiency, PS only: %.2f bit/s/Hz"
          % spectral_efficiency(snrs, band_gains(prec)))
    print("spectral efficiency, 16 TDs: %.2f bit/s/Hz"
          % spectral_efficiency(snrs, band_gains(td)))


if __name__ == "__main__":
    main()
