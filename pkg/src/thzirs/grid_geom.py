"""Frequency grids, array geometries, link angles and scene layout.

Conventions used throughout the package:

- Global frame: x, y, z right-handed, z is "up".  Walls holding reflecting
  panels live in the y-z plane and face +x.
- A local array frame is (boresight n, lateral h, vertical v) where h is the
  global +y axis projected orthogonal to the boresight and v = n x h.  Tying
  h to a fixed global axis (instead of z x n) makes angle signs consistent
  between the two ends of a link: swapping endpoints while flipping the
  boresight negates the azimuth.
- Propagation phase of an element at position p toward direction u at
  frequency f is -2*pi*f*(p . u)/c, i.e. phase = -2*pi*f*delay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateGeometryError, InvalidParameterError

SPEED_OF_LIGHT = 299792458.0

# global reference axes for local frames
_UP = np.array([0.0, 0.0, 1.0])
_LATERAL_REF = np.array([0.0, 1.0, 0.0])


def half_wavelength(f_c: float) -> float:
    """Default element spacing d = c / (2 f_c)."""
    if f_c <= 0:
        raise InvalidParameterError("f_c must be positive")
    return SPEED_OF_LIGHT / (2.0 * f_c)


def subcarrier_frequencies(f_c: float, bandwidth: float, n_subcarriers: int) -> np.ndarray:
    """Endpoint-inclusive OFDM subcarrier frequencies.

    For M >= 2 the m-th subcarrier (1-indexed) sits at
    f_m = f_c - B/2 + (m - 1) * B / (M - 1); M = 1 gives just {f_c}.

    Built as f_c + k_m * (B/2)/(M-1) with integer k_m = 2(m-1)-(M-1) so that
    the mirror sums f_m + f_{M+1-m} = 2 f_c and the band edges f_c -+ B/2
    are exact in floating point, not just to rounding.
    """
    if n_subcarriers < 1:
        raise InvalidParameterError("n_subcarriers must be >= 1")
    if bandwidth <= 0:
        raise InvalidParameterError("bandwidth must be positive")
    if f_c <= bandwidth / 2.0:
        raise InvalidParameterError("f_c must exceed bandwidth/2 so all frequencies stay positive")
    if n_subcarriers == 1:
        return np.array([float(f_c)])
    m = np.arange(n_subcarriers)
    k = 2 * m - (n_subcarriers - 1)
    return f_c + (k / float(n_subcarriers - 1)) * (bandwidth / 2.0)


@dataclass(frozen=True)
class FrequencyGrid:
    """OFDM grid with center frequency f_c, total bandwidth, and M subcarriers."""

    f_c: float
    bandwidth: float
    n_subcarriers: int
    frequencies: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        freqs = subcarrier_frequencies(self.f_c, self.bandwidth, self.n_subcarriers)
        object.__setattr__(self, "frequencies", freqs)

    def __len__(self) -> int:
        return self.n_subcarriers


@dataclass(frozen=True)
class ArrayGeometry:
    """Uniform linear or planar array of isotropic elements.

    ULA elements run along the local lateral axis; UPA elements fill a
    rows x cols grid (rows along vertical, cols along lateral).  Element
    index is row-major: e = r * cols + c.  The first element is the phase
    reference of steering vectors; planar phase terms for reflecting
    panels use center-referenced offsets instead (see irs module).
    """

    rows: int
    cols: int
    spacing: float

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidParameterError("array must have at least one element per dimension")
        if self.spacing <= 0:
            raise InvalidParameterError("element spacing must be positive")

    @classmethod
    def ula(cls, n_elements: int, spacing: float | None = None, f_c: float | None = None) -> "ArrayGeometry":
        if spacing is None:
            if f_c is None:
                raise InvalidParameterError("give either spacing or f_c for the default d = c/(2 f_c)")
            spacing = half_wavelength(f_c)
        return cls(rows=1, cols=n_elements, spacing=spacing)

    @classmethod
    def upa(cls, rows: int, cols: int, spacing: float | None = None, f_c: float | None = None) -> "ArrayGeometry":
        if spacing is None:
            if f_c is None:
                raise InvalidParameterError("give either spacing or f_c for the default d = c/(2 f_c)")
            spacing = half_wavelength(f_c)
        return cls(rows=rows, cols=cols, spacing=spacing)

    @property
    def n_elements(self) -> int:
        return self.rows * self.cols

    def element_offsets(self) -> np.ndarray:
        """(N, 2) offsets (lateral, vertical) in meters, first element at (0, 0)."""
        r, c = np.divmod(np.arange(self.n_elements), self.cols)
        return np.column_stack([c * self.spacing, r * self.spacing])

    def aperture(self) -> float:
        """Largest extent of the array (grid diagonal)."""
        return self.spacing * math.hypot(self.cols - 1, self.rows - 1)


@dataclass(frozen=True)
class LinkAngles:
    """Azimuth/elevation of a link direction in an array's local frame, radians.

    Both angles must lie in the open interval (-pi/2, pi/2): the target is in
    front of the array, never in its plane or behind it.
    """

    azimuth: float
    elevation: float

    def __post_init__(self):
        half_pi = math.pi / 2.0
        if not (-half_pi < self.azimuth < half_pi):
            raise InvalidParameterError("azimuth must lie in (-pi/2, pi/2)")
        if not (-half_pi < self.elevation < half_pi):
            raise InvalidParameterError("elevation must lie in (-pi/2, pi/2)")

    def direction_cosines(self) -> tuple[float, float]:
        """(lateral, vertical) direction cosines: (cos el sin az, sin el)."""
        return (math.cos(self.elevation) * math.sin(self.azimuth), math.sin(self.elevation))

    def unit_vector(self) -> np.ndarray:
        """Unit direction (boresight, lateral, vertical) components."""
        ce = math.cos(self.elevation)
        return np.array([ce * math.cos(self.azimuth),
                         ce * math.sin(self.azimuth),
                         math.sin(self.elevation)])


def local_frame(boresight: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Orthonormal (boresight, lateral, vertical) axes for an array.

    Lateral is global +y projected orthogonal to the boresight, so antiparallel
    boresights share the same lateral axis (mirror-consistent azimuth signs).
    """
    n = np.asarray(boresight, dtype=float)
    norm = np.linalg.norm(n)
    if norm == 0.0:
        raise DegenerateGeometryError("boresight vector must be nonzero")
    n = n / norm
    h = _LATERAL_REF - np.dot(_LATERAL_REF, n) * n
    h_norm = np.linalg.norm(h)
    if h_norm < 1e-12:
        raise DegenerateGeometryError("boresight parallel to the global lateral axis; frame undefined")
    h = h / h_norm
    v = np.cross(n, h)
    return n, h, v


def link_angles(from_position: np.ndarray, to_position: np.ndarray, boresight: np.ndarray) -> LinkAngles:
    """Angles of `to_position` as seen from an array at `from_position`."""
    d = np.asarray(to_position, dtype=float) - np.asarray(from_position, dtype=float)
    dist = np.linalg.norm(d)
    if dist == 0.0:
        raise DegenerateGeometryError("link endpoints coincide")
    n, h, v = local_frame(boresight)
    x = float(np.dot(d, n))
    y = float(np.dot(d, h))
    z = float(np.dot(d, v))
    az = math.atan2(y, x)
    el = math.atan2(z, math.hypot(x, y))
    half_pi = math.pi / 2.0
    if not (-half_pi < az < half_pi):
        raise DegenerateGeometryError("target lies behind or beside the array face")
    return LinkAngles(azimuth=az, elevation=el)


def link_angles_many(from_position: np.ndarray, to_positions: np.ndarray,
                     boresight: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized link_angles: (az, el) arrays for many targets at once."""
    targets = np.asarray(to_positions, dtype=float)
    if targets.ndim != 2 or targets.shape[1] != 3:
        raise InvalidParameterError("to_positions must have shape (n, 3)")
    d = targets - np.asarray(from_position, dtype=float)
    if np.any(np.linalg.norm(d, axis=1) == 0.0):
        raise DegenerateGeometryError("link endpoints coincide")
    n, h, v = local_frame(boresight)
    x = d @ n
    y = d @ h
    z = d @ v
    az = np.arctan2(y, x)
    el = np.arctan2(z, np.hypot(x, y))
    if np.any(np.abs(az) >= math.pi / 2.0):
        raise DegenerateGeometryError("a target lies behind or beside the array face")
    return az, el


def far_field_check(positions: list[np.ndarray], apertures: list[float]) -> None:
    """Guard the plane-wave assumption: every pairwise node distance must
    exceed 10x the largest array aperture in the scene."""
    limit = 10.0 * max(apertures, default=0.0)
    pts = [np.asarray(p, dtype=float) for p in positions]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if np.linalg.norm(pts[i] - pts[j]) <= limit:
                raise DegenerateGeometryError(
                    "node spacing %.3g m violates the far-field bound %.3g m"
                    % (float(np.linalg.norm(pts[i] - pts[j])), limit))


@dataclass
class Scene:
    """Node positions for one link: a base station, one or more users.

    Reflecting panels are kept in their own deployment object; cascade
    evaluation combines both and runs the far-field guard over all nodes.
    """

    bs_position: np.ndarray
    bs_boresight: np.ndarray
    user_positions: list[np.ndarray]
    bs_aperture: float = 0.0

    def __post_init__(self):
        self.bs_position = np.asarray(self.bs_position, dtype=float)
        self.bs_boresight = np.asarray(self.bs_boresight, dtype=float)
        self.user_positions = [np.asarray(u, dtype=float) for u in self.user_positions]
        if not self.user_positions:
            raise InvalidParameterError("scene needs at least one user")
        local_frame(self.bs_boresight)  # validates orientation early
        far_field_check([self.bs_position] + self.user_positions,
                        [self.bs_aperture])
