"""Link-quality and hardware-cost metrics.

Covers the quantities the simulator exists to compare: per-subcarrier gain
relative to the center frequency, the two leakage effects of a narrow beam
meeting a distributed reflecting surface, front-end power draw, and
spectral efficiency over the subcarrier grid.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError
from .grid_geom import ArrayGeometry, Scene, link_angles_many
from .irs import IrsDeployment
from .precoder import TdStructure
from .wavefield import BeamPattern, GainProfile, array_response_many

P_RF_MW = 250.0
P_TD_MW = 80.0
P_PS_MW = 30.0


def relative_subcarrier_gain(profile: GainProfile, m: int | None = None):
    """|g_m| / |g(f_c)| for subcarrier m (1-based), or the whole profile.

    Normalization is against the same configuration's own center-frequency
    gain, evaluated at f = f_c directly.
    """
    rel = profile.relative()
    if m is None:
        return rel
    if not 1 <= m <= rel.size:
        raise InvalidParameterError("subcarrier index m must lie in 1..%d" % rel.size)
    return float(rel[m - 1])


def beam_leakage(pattern: BeamPattern, aperture_deg: tuple[float, float]) -> float:
    """Fraction of pattern power falling outside an angular aperture.

    Power is the trapezoid integral of the sampled gain over the angle
    grid; the aperture boundaries are added by interpolation so the inside
    and outside fractions sum to one exactly.
    """
    lo, hi = float(aperture_deg[0]), float(aperture_deg[1])
    if hi < lo:
        raise InvalidParameterError("aperture interval must be ordered")
    angles = pattern.angles_deg
    gains = pattern.gains
    total = float(np.trapezoid(gains, angles))
    if total <= 0.0:
        raise InvalidParameterError("pattern carries no power to partition")
    lo_c = max(lo, float(angles[0]))
    hi_c = min(hi, float(angles[-1]))
    if hi_c <= lo_c:
        return 1.0
    mask = (angles > lo_c) & (angles < hi_c)
    xs = np.concatenate([[lo_c], angles[mask], [hi_c]])
    ys = np.concatenate([[np.interp(lo_c, angles, gains)], gains[mask],
                         [np.interp(hi_c, angles, gains)]])
    inside = float(np.trapezoid(ys, xs))
    return float(min(max(1.0 - inside / total, 0.0), 1.0))


def incident_element_powers(bs_geometry: ArrayGeometry, bs_weights: np.ndarray,
                            deployment: IrsDeployment, scene: Scene, f: float) -> np.ndarray:
    """BS beam power arriving at each reflecting element, panel order."""
    positions = np.vstack([p.element_positions() for p in deployment.panels])
    az, el = link_angles_many(scene.bs_position, positions, scene.bs_boresight)
    resp = array_response_many(bs_geometry, bs_weights, az, el, f)
    return np.abs(resp) ** 2


def reflecting_leakage(incident_powers: np.ndarray, threshold: float = 0.01) -> float:
    """Fraction of elements whose incident power is below threshold x max."""
    if not 0.0 < threshold < 1.0:
        raise InvalidParameterError("threshold must lie in (0, 1)")
    powers = np.asarray(incident_powers, dtype=float)
    if powers.size == 0:
        raise InvalidParameterError("no elements to assess")
    peak = float(powers.max())
    if peak <= 0.0:
        raise InvalidParameterError("no incident power anywhere on the surface")
    return float(np.mean(powers < threshold * peak))


def hardware_power(structure: TdStructure, p_rf_mw: float = P_RF_MW,
                   p_td_mw: float = P_TD_MW, p_ps_mw: float = P_PS_MW) -> float:
    """Front-end power draw in mW: n_rf*P_RF + n_td*P_TD + n_ps*P_PS."""
    if min(p_rf_mw, p_td_mw, p_ps_mw) < 0.0:
        raise InvalidParameterError("component powers must be nonnegative")
    return structure.n_rf * p_rf_mw + structure.n_td * p_td_mw + structure.n_ps * p_ps_mw


def spectral_efficiency(snrs, gains) -> float:
    """(1/M) * sum_m log2(1 + snr_m * |g_m|^2), bits/s/Hz."""
    g = np.abs(np.asarray(gains, dtype=complex))
    s = np.broadcast_to(np.asarray(snrs, dtype=float), g.shape)
    if g.size == 0:
        raise InvalidParameterError("need at least one subcarrier")
    if np.any(s < 0.0):
        raise InvalidParameterError("SNR values must be nonnegative")
    return float(np.mean(np.log2(1.0 + s * g ** 2)))
