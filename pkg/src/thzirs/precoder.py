"""Analog TD/PS precoding structures, steering laws, and digital weights.

Phase shifters are frequency flat; a time delayer multiplies the signal by
exp(-j*2*pi*f*t) so its phase contribution scales with frequency.  Grouping
a few antennas behind each TD lets the delays absorb the frequency-linear
part of the steering phase, pulling every subcarrier's beam back to the
target (convergence) or fanning subcarrier-stable sub-beams over a sector
(broadening).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (InvalidParameterError, SingularChannelError,
                     UnsupportedStructureError)
from .grid_geom import SPEED_OF_LIGHT, ArrayGeometry, LinkAngles


class TdStructureKind(Enum):
    PS_ONLY = "ps-only"
    FULLY_CONNECTED = "fully-td"
    PER_ANTENNA = "per-antenna-td"
    SPARSE_SUBARRAY = "sparse-td"


@dataclass(frozen=True)
class TdStructure:
    """Counts and wiring of one hybrid analog front end.

    group_size is the number of adjacent antennas sharing one TD (1 for the
    per-antenna structure, K for the sparse subarray, N/K_td for the
    fully-connected network); it is unused for PS-only.
    """

    kind: TdStructureKind
    n_antennas: int
    n_rf: int = 1
    group_size: int = 0

    def __post_init__(self):
        if self.n_antennas < 1:
            raise InvalidParameterError("n_antennas must be >= 1")
        if self.n_rf < 1:
            raise InvalidParameterError("n_rf must be >= 1")
        if self.kind is not TdStructureKind.PS_ONLY:
            if self.group_size < 1:
                raise InvalidParameterError("group_size must be >= 1 for TD structures")
            if self.n_antennas % self.group_size != 0:
                raise InvalidParameterError("group_size must divide n_antennas")

    @classmethod
    def ps_only(cls, n_antennas: int, n_rf: int = 1) -> "TdStructure":
        return cls(TdStructureKind.PS_ONLY, n_antennas, n_rf)

    @classmethod
    def per_antenna(cls, n_antennas: int, n_rf: int = 1) -> "TdStructure":
        return cls(TdStructureKind.PER_ANTENNA, n_antennas, n_rf, group_size=1)

    @classmethod
    def sparse_subarray(cls, n_antennas: int, group_size: int, n_rf: int = 1) -> "TdStructure":
        return cls(TdStructureKind.SPARSE_SUBARRAY, n_antennas, n_rf, group_size=group_size)

    @classmethod
    def fully_connected(cls, n_antennas: int, n_td_per_chain: int = 16, n_rf: int = 1) -> "TdStructure":
        if n_td_per_chain < 1 or n_antennas % n_td_per_chain != 0:
            raise InvalidParameterError("n_td_per_chain must divide n_antennas")
        return cls(TdStructureKind.FULLY_CONNECTED, n_antennas, n_rf,
                   group_size=n_antennas // n_td_per_chain)

    @property
    def n_groups(self) -> int:
        """Number of TDs fed by one RF chain's analog network."""
        if self.kind is TdStructureKind.PS_ONLY:
            return 0
        return self.n_antennas // self.group_size

    @property
    def n_td(self) -> int:
        """Total TD count across the front end."""
        if self.kind is TdStructureKind.PS_ONLY:
            return 0
        if self.kind is TdStructureKind.FULLY_CONNECTED:
            return self.n_rf * self.n_groups
        return self.n_groups

    @property
    def n_ps(self) -> int:
        """Total PS count across the front end."""
        if self.kind in (TdStructureKind.PS_ONLY, TdStructureKind.FULLY_CONNECTED):
            return self.n_rf * self.n_antennas
        return self.n_antennas


@dataclass(frozen=True)
class TdPrecoder:
    """One RF chain's analog weights: PS phases plus per-group delays."""

    structure: TdStructure
    ps_phases: np.ndarray
    delays: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        ps = np.asarray(self.ps_phases, dtype=float)
        t = np.asarray(self.delays, dtype=float)
        if ps.shape != (self.structure.n_antennas,):
            raise InvalidParameterError("ps_phases length does not match the structure")
        if t.shape != (self.structure.n_groups,):
            raise InvalidParameterError("delays length does not match the TD count")
        if t.size and t.min() < 0.0:
            raise InvalidParameterError("delays must be nonnegative")
        object.__setattr__(self, "ps_phases", ps)
        object.__setattr__(self, "delays", t)

    def group_of(self) -> np.ndarray:
        """TD index for each antenna (adjacent antennas share a TD)."""
        if self.structure.n_groups == 0:
            return np.zeros(self.structure.n_antennas, dtype=int)
        return np.arange(self.structure.n_antennas) // self.structure.group_size


def _effective_sine(angles: "LinkAngles | float") -> float:
    """Lateral direction cosine of the steering target (elevation 0 for floats)."""
    if isinstance(angles, LinkAngles):
        return angles.direction_cosines()[0]
    return math.sin(float(angles))


def _require_ula(structure: TdStructure, geometry: ArrayGeometry) -> None:
    if geometry.rows != 1:
        raise UnsupportedStructureError("TD steering laws are defined for linear arrays")
    if geometry.n_elements != structure.n_antennas:
        raise InvalidParameterError("geometry element count does not match the structure")


def ps_steering_phases(geometry: ArrayGeometry, angles: "LinkAngles | float", f_c: float) -> np.ndarray:
    """Frequency-flat PS phases that conjugate-match the steering vector at f_c.

    For a ULA with spacing d the phase of antenna n (0-indexed) is
    +2*pi*f_c*n*d*sin(theta0)/c.
    """
    if f_c <= 0:
        raise InvalidParameterError("f_c must be positive")
    s = _effective_sine(angles)
    offsets = geometry.element_offsets()
    vert = math.sin(angles.elevation) if isinstance(angles, LinkAngles) else 0.0
    path = offsets[:, 0] * s + offsets[:, 1] * vert
    return 2.0 * np.pi * f_c * path / SPEED_OF_LIGHT


def ps_only_precoder(geometry: ArrayGeometry, angles: "LinkAngles | float", f_c: float,
                     n_rf: int = 1) -> TdPrecoder:
    """Baseline precoder: pure PS steering at f_c, no delay network."""
    structure = TdStructure.ps_only(geometry.n_elements, n_rf)
    return TdPrecoder(structure, ps_steering_phases(geometry, angles, f_c))


def convergence_delays(structure: TdStructure, geometry: ArrayGeometry,
                       theta0: float, f_c: float) -> TdPrecoder:
    """TD configuration that realigns every subcarrier's beam onto theta0.

    TD p absorbs the group-level part of the steering ramp: the raw delay
    slope is -p*K*d*sin(theta0)/c per group, shifted by the smallest common
    offset that keeps all delays nonnegative (the offset only adds a
    per-subcarrier global phase).  PS phases are the f_c steering phases
    plus 2*pi*f_c*t_p, so at f = f_c the combined weights equal PS-only
    steering exactly.
    """
    _require_ula(structure, geometry)
    if structure.kind is TdStructureKind.PS_ONLY:
        raise UnsupportedStructureError("PS-only structure has no delays to configure")
    p = np.arange(structure.n_groups)
    step = structure.group_size * geometry.spacing * math.sin(theta0) / SPEED_OF_LIGHT
    raw = -p * step
    delays = raw + max(0.0, -float(raw.min()))
    base = ps_steering_phases(geometry, theta0, f_c)
    group = np.arange(structure.n_antennas) // structure.group_size
    phases = base + 2.0 * np.pi * f_c * delays[group]
    return TdPrecoder(structure, phases, delays)


def broadening_delays(structure: TdStructure, geometry: ArrayGeometry,
                      sector: tuple[float, float], f_c: float) -> TdPrecoder:
    """TD configuration that fans per-group sub-beams across a sector.

    Group p (of P) is steered toward theta_p = theta_a + (p + 1/2) *
    (theta_b - theta_a)/P via its delay plus within-group PS phases; the
    union of sub-beams covers [theta_a, theta_b].  A zero-width sector
    reduces exactly to convergence_delays at that angle.
    """
    _require_ula(structure, geometry)
    if structure.kind is TdStructureKind.PS_ONLY:
        raise UnsupportedStructureError("PS-only structure has no delays to configure")
    theta_a, theta_b = float(sector[0]), float(sector[1])
    if theta_b < theta_a:
        raise InvalidParameterError("sector must be ordered (theta_a <= theta_b)")
    P = structure.n_groups
    if P < 2 and theta_b > theta_a:
        raise UnsupportedStructureError("broadening over a sector needs at least 2 TDs")
    p = np.arange(P)
    targets = theta_a + (p + 0.5) * (theta_b - theta_a) / P
    d = geometry.spacing
    K = structure.group_size
    raw = -p * K * d * np.sin(targets) / SPEED_OF_LIGHT
    delays = raw + max(0.0, -float(raw.min()))
    n = np.arange(structure.n_antennas)
    group = n // K
    base = 2.0 * np.pi * f_c * n * d * np.sin(targets[group]) / SPEED_OF_LIGHT
    phases = base + 2.0 * np.pi * f_c * delays[group]
    return TdPrecoder(structure, phases, delays)


def analog_weights_at(precoder: TdPrecoder, f: float) -> np.ndarray:
    """Combined unit-power analog weights at frequency f.

    weight_n = (1/sqrt(N)) * exp(j*ps_n) * exp(-j*2*pi*f*t_group(n)).
    """
    if f <= 0:
        raise InvalidParameterError("frequency must be positive")
    n = precoder.structure.n_antennas
    w = np.exp(1j * precoder.ps_phases) / math.sqrt(n)
    if precoder.delays.size:
        w = w * np.exp(-2j * np.pi * f * precoder.delays[precoder.group_of()])
    return w


def digital_weights(channel) -> np.ndarray:
    """Per-subcarrier baseband weights for the effective channel.

    Scalar or 1-D input is treated as a single user's effective gains and
    returns the matched conjugate at unit power.  A 2-D (n_users, n_chains)
    matrix returns the zero-forcing precoder (n_chains, n_users) with each
    user's weight vector renormalized to unit power.
    """
    H = np.asarray(channel, dtype=complex)
    if H.ndim == 0:
        g = complex(H)
        if g == 0:
            raise SingularChannelError("zero single-user gain")
        return np.conj(g) / abs(g)
    if H.ndim == 1:
        norm = np.linalg.norm(H)
        if norm == 0.0:
            raise SingularChannelError("zero single-user channel")
        return np.conj(H) / norm
    if H.ndim != 2:
        raise InvalidParameterError("channel must be scalar, 1-D, or 2-D")
    users, chains = H.shape
    if chains < users:
        raise InvalidParameterError("zero forcing needs at least as many RF chains as users")
    gram = H @ H.conj().T
    if np.linalg.cond(gram) > 1e12:
        raise SingularChannelError("channel matrix is (near) rank deficient")
    try:
        W = H.conj().T @ np.linalg.inv(gram)
    except np.linalg.LinAlgError as exc:
        raise SingularChannelError("channel matrix is singular") from exc
    norms = np.linalg.norm(W, axis=0)
    if np.any(norms == 0.0):
        raise SingularChannelError("zero-forcing produced a null weight vector")
    return W / norms
