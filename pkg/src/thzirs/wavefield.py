"""Steering vectors, far-field beam patterns, and cascaded link gains.

The far-field response of an array with weights w toward angles (az, el) at
frequency f is sum_n w_n * exp(-j*2*pi*f*(p_n . u)/c): the unconjugated dot
product of the weights with the steering vector.  Matched transmit weights
are therefore the conjugate of the steering vector, and frequency-flat
phase-shifter weights configured at f_c drift off target at f != f_c, the
beam-split effect this package exists to study.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

import numpy as np

from .errors import InvalidParameterError, NotConfiguredError
from .grid_geom import (SPEED_OF_LIGHT, ArrayGeometry, FrequencyGrid, LinkAngles,
                        Scene, far_field_check, link_angles)

if TYPE_CHECKING:
    from .irs import IrsDeployment


def steering_vector(geometry: ArrayGeometry, angles: LinkAngles, f: float) -> np.ndarray:
    """Unit-modulus steering vector; the first element is the phase reference.

    Entry n is exp(-j*2*pi*f*(p_n . u(angles))/c) with p_n the element
    position relative to element 0.
    """
    if f <= 0:
        raise InvalidParameterError("frequency must be positive")
    lat, vert = angles.direction_cosines()
    offsets = geometry.element_offsets()
    path = offsets[:, 0] * lat + offsets[:, 1] * vert
    return np.exp(-2j * np.pi * f * path / SPEED_OF_LIGHT)


def array_response(geometry: ArrayGeometry, weights: np.ndarray, angles: LinkAngles, f: float) -> complex:
    """Far-field response sum_n w_n * sv_n(angles, f)."""
    w = np.asarray(weights)
    if w.shape != (geometry.n_elements,):
        raise InvalidParameterError("weights length does not match the array")
    return complex(np.dot(w, steering_vector(geometry, angles, f)))


def array_response_many(geometry: ArrayGeometry, weights: np.ndarray,
                        azimuths: np.ndarray, elevations: np.ndarray, f: float) -> np.ndarray:
    """Vectorized array_response over paired (azimuth, elevation) arrays."""
    w = np.asarray(weights)
    if w.shape != (geometry.n_elements,):
        raise InvalidParameterError("weights length does not match the array")
    az = np.asarray(azimuths, dtype=float)
    el = np.asarray(elevations, dtype=float)
    lat = np.cos(el) * np.sin(az)
    vert = np.sin(el)
    offsets = geometry.element_offsets()
    path = np.outer(lat, offsets[:, 0]) + np.outer(vert, offsets[:, 1])
    return np.exp(-2j * np.pi * f * path / SPEED_OF_LIGHT) @ w


def default_angle_grid(n_points: int = 10001) -> np.ndarray:
    """Azimuth grid in degrees spanning [-90, 90].

    The default odd count gives a 0.018 deg step and puts the canonical
    steering angle (45 deg) exactly on the grid.
    """
    if n_points < 2:
        raise InvalidParameterError("angle grid needs at least 2 points")
    return np.linspace(-90.0, 90.0, n_points)


@dataclass(frozen=True)
class BeamPattern:
    """Pattern gain sampled on an azimuth grid at one frequency.

    gain(theta) = |sum_n w_n sv_n(theta)|^2 / N, so unit-power matched
    weights give exactly 1 at the steered angle and never exceed 1 anywhere.
    """

    frequency: float
    angles_deg: np.ndarray
    gains: np.ndarray

    def argmax_deg(self) -> float:
        return float(self.angles_deg[int(np.argmax(self.gains))])

    def gain_at(self, angle_deg: float) -> float:
        """Gain at a grid angle (nearest-sample lookup)."""
        idx = int(np.argmin(np.abs(self.angles_deg - angle_deg)))
        return float(self.gains[idx])


def beam_pattern(geometry: ArrayGeometry, weights: np.ndarray, f: float,
                 angles_deg: np.ndarray | None = None, elevation: float = 0.0) -> BeamPattern:
    """Sample |response|^2 / N over an azimuth grid at fixed elevation."""
    if angles_deg is None:
        angles_deg = default_angle_grid()
    az = np.deg2rad(np.asarray(angles_deg, dtype=float))
    el = np.full_like(az, elevation)
    resp = array_response_many(geometry, weights, az, el, f)
    gains = np.abs(resp) ** 2 / geometry.n_elements
    return BeamPattern(frequency=f, angles_deg=np.asarray(angles_deg, dtype=float), gains=gains)


@dataclass(frozen=True)
class GainProfile:
    """Per-subcarrier complex link gains plus the center-frequency reference."""

    frequencies: np.ndarray
    gains: np.ndarray
    reference: complex
    f_c: float

    def relative(self) -> np.ndarray:
        """|g_m| / |g(f_c)| for every subcarrier."""
        ref = abs(self.reference)
        if ref == 0.0:
            raise InvalidParameterError("center-frequency reference gain is zero")
        return np.abs(self.gains) / ref


def cascaded_gain(bs_geometry: ArrayGeometry, bs_weights: np.ndarray,
                  deployment: "IrsDeployment", scene: Scene, f: float,
                  user_index: int = 0) -> complex:
    """Cascaded BS -> IRS -> user gain at one frequency, pure line of sight.

    Per panel: (BS far-field response toward the panel) x (sum over elements
    of the configured reflect phase times the incident-plus-departure
    propagation phase), all evaluated at f.  Path-loss amplitudes are set
    to 1; element offsets are referenced to each panel's center.
    """
    if not deployment.is_configured:
        raise NotConfiguredError("IRS phases not configured; call configure_phases first")
    user = scene.user_positions[user_index]
    bs_ap = scene.bs_aperture or bs_geometry.aperture()
    total = 0.0 + 0.0j
    for panel in deployment.panels:
        # plane-wave bound applies per propagation hop, not between panels
        far_field_check([scene.bs_position, panel.center], [bs_ap, panel.aperture()])
        far_field_check([panel.center, user], [panel.aperture(), 0.0])
        toward_panel = link_angles(scene.bs_position, panel.center, scene.bs_boresight)
        incident = array_response(bs_geometry, bs_weights, toward_panel, f)
        in_angles = link_angles(panel.center, scene.bs_position, panel.normal)
        out_angles = link_angles(panel.center, user, panel.normal)
        total += incident * panel.reflection_sum(in_angles, out_angles, f)
    return total


def gain_profile(bs_geometry: ArrayGeometry, weights_at: Callable[[float], np.ndarray],
                 deployment: "IrsDeployment", scene: Scene, grid: FrequencyGrid,
                 user_index: int = 0) -> GainProfile:
    """Cascaded gains across a frequency grid, referenced to the gain at f_c.

    `weights_at` maps a frequency to the BS weights there (frequency-flat
    for PS-only precoding, frequency-scaling when TDs are present).  The
    reference is evaluated directly at f = f_c, which for an even number of
    subcarriers is not itself a subcarrier.
    """
    gains = np.array([
        cascaded_gain(bs_geometry, weights_at(f), deployment, scene, f, user_index)
        for f in grid.frequencies])
    reference = cascaded_gain(bs_geometry, weights_at(grid.f_c), deployment, scene,
                              grid.f_c, user_index)
    return GainProfile(frequencies=grid.frequencies.copy(), gains=gains,
                       reference=reference, f_c=grid.f_c)
