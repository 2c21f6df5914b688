"""Passive reflecting surface panels: layout schemes and phase control.

Each panel is a planar grid of unit-amplitude elements whose reflect phase
is frequency flat.  Phases are configured once, at the center frequency,
to cancel that element's incident-plus-departure propagation phase; away
from f_c the cancellation drifts, which is the reflecting counterpart of
the beam-split effect and scales with the panel's aperture per dimension.

Element offsets are referenced to the panel center, so a symmetric panel's
reflection sum stays real positive across frequency and distributed panels
combine without artificial placement phases (shape and count effects are
isolated from absolute path-length effects).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError, NotConfiguredError
from .grid_geom import (SPEED_OF_LIGHT, LinkAngles, Scene, half_wavelength,
                        link_angles, local_frame)


@dataclass
class IrsPanel:
    """rows x cols reflecting elements around `center`, facing `normal`."""

    rows: int
    cols: int
    spacing: float
    center: np.ndarray
    normal: np.ndarray
    phases: np.ndarray | None = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidParameterError("panel needs at least one element per dimension")
        if self.spacing <= 0:
            raise InvalidParameterError("element spacing must be positive")
        self.center = np.asarray(self.center, dtype=float)
        self.normal = np.asarray(self.normal, dtype=float)
        local_frame(self.normal)  # validates orientation
        if self.phases is not None:
            self.phases = self._check_phases(self.phases)

    def _check_phases(self, phases) -> np.ndarray:
        ph = np.asarray(phases, dtype=float)
        if ph.shape != (self.n_elements,):
            raise InvalidParameterError("phase vector length does not match the panel")
        if ph.min() < 0.0 or ph.max() >= 2.0 * np.pi:
            raise InvalidParameterError("phases must lie in [0, 2*pi)")
        return ph

    @property
    def n_elements(self) -> int:
        return self.rows * self.cols

    def local_offsets(self) -> np.ndarray:
        """(E, 2) center-referenced (lateral, vertical) offsets in meters."""
        r, c = np.divmod(np.arange(self.n_elements), self.cols)
        lat = (c - (self.cols - 1) / 2.0) * self.spacing
        vert = (r - (self.rows - 1) / 2.0) * self.spacing
        return np.column_stack([lat, vert])

    def element_positions(self) -> np.ndarray:
        """(E, 3) global element positions."""
        _, h, v = local_frame(self.normal)
        off = self.local_offsets()
        return self.center + np.outer(off[:, 0], h) + np.outer(off[:, 1], v)

    def aperture(self) -> float:
        return self.spacing * np.hypot(self.cols - 1, self.rows - 1)

    def footprint(self) -> tuple[float, float]:
        """(width, height) of the panel including half-cell margins."""
        return self.cols * self.spacing, self.rows * self.spacing

    def propagation_path(self, angles: LinkAngles) -> np.ndarray:
        """Per-element path offset (delta_p . u) toward `angles`, meters."""
        lat, vert = angles.direction_cosines()
        off = self.local_offsets()
        return off[:, 0] * lat + off[:, 1] * vert

    def reflection_sum(self, in_angles: LinkAngles, out_angles: LinkAngles, f: float) -> complex:
        """Sum over elements of reflect phase times both hop propagation phases."""
        if self.phases is None:
            raise NotConfiguredError("panel phases not configured")
        path = self.propagation_path(in_angles) + self.propagation_path(out_angles)
        return complex(np.sum(np.exp(1j * self.phases - 2j * np.pi * f * path / SPEED_OF_LIGHT)))


@dataclass
class IrsDeployment:
    """A set of co-oriented panels acting as one reflecting surface."""

    panels: list[IrsPanel]
    scheme: int = 0

    def __post_init__(self):
        if not self.panels:
            raise InvalidParameterError("deployment needs at least one panel")
        self._check_overlap()

    def _check_overlap(self):
        # panels share a wall plane; compare center offsets against footprints
        _, h, v = local_frame(self.panels[0].normal)
        for i in range(len(self.panels)):
            for j in range(i + 1, len(self.panels)):
                a, b = self.panels[i], self.panels[j]
                delta = b.center - a.center
                wa, ha = a.footprint()
                wb, hb = b.footprint()
                if (abs(float(delta @ h)) < (wa + wb) / 2.0
                        and abs(float(delta @ v)) < (ha + hb) / 2.0):
                    raise InvalidParameterError("panels %d and %d overlap" % (i, j))

    @property
    def total_elements(self) -> int:
        return sum(p.n_elements for p in self.panels)

    @property
    def is_configured(self) -> bool:
        return all(p.phases is not None for p in self.panels)


_SCHEME_LAYOUTS = {
    1: {"panels": 1, "shape": lambda r, c: (r, c)},
    2: {"panels": 4, "shape": lambda r, c: (r, c // 4)},
    3: {"panels": 4, "shape": lambda r, c: (r // 2, c // 2)},
    4: {"panels": 4, "shape": lambda r, c: (r, c)},
}


def deployment_scheme(scheme: int, f_c: float | None = None,
                      wall_center=(0.0, 0.0, 0.0), normal=(1.0, 0.0, 0.0),
                      panel_spacing: float = 0.2,
                      element_spacing: float | None = None,
                      base_rows: int = 16, base_cols: int = 16) -> IrsDeployment:
    """Build one of the four canonical deployments from a base element budget.

    1: one base_rows x base_cols panel at the wall center.
    2: four tall strips (base_rows x base_cols/4), same total element count.
    3: four squares (base_rows/2 x base_cols/2), same total element count.
    4: four full-size base_rows x base_cols panels (4x the elements).

    Distributed panels sit on a horizontal wall line at equal spacing,
    symmetric about the scheme-1 position.
    """
    if scheme not in _SCHEME_LAYOUTS:
        raise InvalidParameterError("scheme must be one of 1..4")
    if element_spacing is None:
        if f_c is None:
            raise InvalidParameterError("give element_spacing or f_c for the default d = c/(2 f_c)")
        element_spacing = half_wavelength(f_c)
    if scheme == 2 and base_cols % 4 != 0:
        raise InvalidParameterError("scheme 2 needs base_cols divisible by 4")
    if scheme == 3 and (base_rows % 2 != 0 or base_cols % 2 != 0):
        raise InvalidParameterError("scheme 3 needs even base dimensions")
    layout = _SCHEME_LAYOUTS[scheme]
    rows, cols = layout["shape"](base_rows, base_cols)
    center = np.asarray(wall_center, dtype=float)
    _, h, _ = local_frame(np.asarray(normal, dtype=float))
    n_panels = layout["panels"]
    panels = []
    for i in range(n_panels):
        offset = (i - (n_panels - 1) / 2.0) * panel_spacing
        panels.append(IrsPanel(rows=rows, cols=cols, spacing=element_spacing,
                               center=center + offset * h, normal=np.asarray(normal, dtype=float)))
    return IrsDeployment(panels=panels, scheme=scheme)


def configure_phases(deployment: IrsDeployment,
                     in_angles: "list[LinkAngles] | LinkAngles",
                     out_angles: "list[LinkAngles] | LinkAngles",
                     f_c: float) -> None:
    """Set every element's phase to cancel, at f_c, its incident plus
    departure propagation phase for the given per-panel link angles."""
    if f_c <= 0:
        raise InvalidParameterError("f_c must be positive")
    n = len(deployment.panels)
    ins = in_angles if isinstance(in_angles, list) else [in_angles] * n
    outs = out_angles if isinstance(out_angles, list) else [out_angles] * n
    if len(ins) != n or len(outs) != n:
        raise InvalidParameterError("need one angle pair per panel")
    for panel, ang_in, ang_out in zip(deployment.panels, ins, outs):
        path = panel.propagation_path(ang_in) + panel.propagation_path(ang_out)
        panel.phases = np.mod(2.0 * np.pi * f_c * path / SPEED_OF_LIGHT, 2.0 * np.pi)


def configure_for_scene(deployment: IrsDeployment, scene: Scene, f_c: float,
                        user_index: int = 0) -> None:
    """Configure phases from scene positions (per-panel angles to BS and user)."""
    ins, outs = [], []
    for panel in deployment.panels:
        ins.append(link_angles(panel.center, scene.bs_position, panel.normal))
        outs.append(link_angles(panel.center, scene.user_positions[user_index], panel.normal))
    configure_phases(deployment, ins, outs, f_c)


def quantize_phases(phases: np.ndarray, bits: int) -> np.ndarray:
    """Snap phases to the nearest of 2^bits uniform levels {2*pi*k/2^bits}.

    Exact midpoints round down to the lower level.
    """
    if int(bits) != bits or bits < 1:
        raise InvalidParameterError("bits must be a positive integer")
    levels = 2 ** int(bits)
    step = 2.0 * np.pi / levels
    ph = np.mod(np.asarray(phases, dtype=float), 2.0 * np.pi)
    k = np.ceil(ph / step - 0.5).astype(int) % levels
    return k * step
