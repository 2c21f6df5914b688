"""Scenario runner: canonical experiments emitting deterministic CSV.

Built-in scenarios:

- fig4-deployment: cascaded relative gain per subcarrier for the four IRS
  deployment schemes (single-antenna BS, single user).  Gains are
  normalized by the first listed scheme's center-frequency gain so element
  count differences stay visible across schemes.
- fig5-convergence: BS beam pattern vs angle per subcarrier, PS-only
  against a sparse-subarray TD precoder steering the same target.
- fig6-broadening: patterns over a target sector for PS-only and two TD
  counts.
- power-table: front-end power draw per hardware structure.
- sweep: fig4-style relative gain for one scheme under quantized phases,
  one series per bit width plus the unquantized reference.

All output is byte-deterministic: no randomness anywhere, floats written
with shortest round-trip precision, \n line endings, UTF-8.
"""

from __future__ import annotations

import copy
import math
import os

import numpy as np
import yaml

from .errors import ConfigError
from .grid_geom import ArrayGeometry, FrequencyGrid, Scene
from .irs import configure_for_scene, deployment_scheme, quantize_phases
from .metrics import hardware_power
from .precoder import (TdStructure, analog_weights_at, broadening_delays,
                       convergence_delays, ps_only_precoder)
from .wavefield import beam_pattern, default_angle_grid, gain_profile

_GRID = {"f_c_hz": 200e9, "bandwidth_hz": 20e9, "n_subcarriers": 64}
_SCENE = {
    "bs_range_m": 5.0, "bs_azimuth_deg": 30.0, "bs_elevation_deg": 35.0,
    "user_range_m": 3.0, "user_azimuth_deg": -40.0, "user_elevation_deg": -10.0,
}
_IRS = {"base_rows": 16, "base_cols": 16, "panel_spacing_m": 0.2}

DEFAULTS = {
    "fig4-deployment": {
        "grid": dict(_GRID),
        "irs": {**_IRS, "schemes": [1, 2, 3, 4]},
        "scene": dict(_SCENE),
    },
    "fig5-convergence": {
        "grid": dict(_GRID),
        "bs": {"n_antennas": 64, "group_size": 4},
        "beam": {"target_deg": 45.0},
        "pattern": {"angle_points": 10001},
    },
    "fig6-broadening": {
        "grid": dict(_GRID),
        "bs": {"n_antennas": 64},
        "beam": {"sector_deg": [40.0, 50.0]},
        "td": {"counts": [0, 16, 32]},
        "pattern": {"angle_points": 10001},
    },
    "power-table": {
        "bs": {"n_antennas": 64, "group_size": 4, "n_rf": 1, "n_td_per_chain": 16},
        "power": {"p_rf_mw": 250.0, "p_td_mw": 80.0, "p_ps_mw": 30.0},
        "structures": ["ps-only", "sparse-td", "per-antenna-td"],
    },
    "sweep": {
        "grid": dict(_GRID),
        "irs": {**_IRS, "scheme": 1},
        "scene": dict(_SCENE),
        "quantization": {"bits": [1, 2, 3, 4]},
    },
}

SCENARIOS = sorted(DEFAULTS)


def load_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ConfigError("config file does not parse: %s" % exc) from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("config root must be a mapping")
    return data


def parse_overrides(pairs: list[str]) -> dict:
    """Turn --override key.path=value pairs into a nested dict."""
    tree: dict = {}
    for pair in pairs:
        if "=" not in pair:
            raise ConfigError("override %r is not of the form key=value" % pair)
        key, raw = pair.split("=", 1)
        key = key.strip()
        if not key:
            raise ConfigError("override %r has an empty key" % pair)
        try:
            value = yaml.safe_load(raw)
        except yaml.YAMLError:
            value = raw
        node = tree
        parts = key.split(".")
        for part in parts[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError("override key %r conflicts with an earlier value" % key)
        node[parts[-1]] = value
    return tree


def _merge_checked(defaults: dict, given: dict, path: str = "") -> dict:
    merged = copy.deepcopy(defaults)
    for key, value in given.items():
        here = "%s.%s" % (path, key) if path else str(key)
        if key not in defaults:
            raise ConfigError("unknown config field %r" % here)
        base = defaults[key]
        if isinstance(base, dict):
            if not isinstance(value, dict):
                raise ConfigError("field %r must be a mapping" % here)
            merged[key] = _merge_checked(base, value, here)
        elif isinstance(base, list):
            if not isinstance(value, list):
                raise ConfigError("field %r must be a list" % here)
            merged[key] = copy.deepcopy(value)
        elif isinstance(base, bool):
            if not isinstance(value, bool):
                raise ConfigError("field %r must be a boolean" % here)
            merged[key] = value
        elif isinstance(base, (int, float)):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError("field %r must be a number" % here)
            merged[key] = value
        else:
            if not isinstance(value, str):
                raise ConfigError("field %r must be a string" % here)
            merged[key] = value
    return merged


def _check_grid(cfg: dict) -> None:
    grid = cfg["grid"]
    if grid["n_subcarriers"] < 1:
        raise ConfigError("field 'grid.n_subcarriers' must be >= 1")
    if grid["bandwidth_hz"] <= 0:
        raise ConfigError("field 'grid.bandwidth_hz' must be positive")
    if grid["f_c_hz"] <= grid["bandwidth_hz"] / 2.0:
        raise ConfigError("field 'grid.f_c_hz' must exceed half the bandwidth")


def validate_config(scenario: str, config: dict | None = None,
                    overrides: list[str] | None = None) -> dict:
    """Merge defaults, file config, and overrides; raise ConfigError on any
    unknown field, type mismatch, or out-of-range value."""
    if scenario not in DEFAULTS:
        raise ConfigError("unknown scenario %r; choices: %s" % (scenario, ", ".join(SCENARIOS)))
    given = copy.deepcopy(config) if config else {}
    declared = given.pop("scenario", None)
    if declared is not None and declared != scenario:
        raise ConfigError("config file is for scenario %r, not %r" % (declared, scenario))
    merged = _merge_checked(DEFAULTS[scenario], given)
    if overrides:
        merged = _merge_checked(merged, parse_overrides(overrides))

    if "grid" in merged:
        _check_grid(merged)
    if "pattern" in merged and merged["pattern"]["angle_points"] < 2:
        raise ConfigError("field 'pattern.angle_points' must be >= 2")
    if scenario == "fig4-deployment":
        bad = [s for s in merged["irs"]["schemes"] if s not in (1, 2, 3, 4)]
        if bad:
            raise ConfigError("field 'irs.schemes' entries must be in 1..4")
        if not merged["irs"]["schemes"]:
            raise ConfigError("field 'irs.schemes' must not be empty")
    if scenario == "fig5-convergence":
        bs = merged["bs"]
        if bs["n_antennas"] < 1 or bs["group_size"] < 1 or bs["n_antennas"] % bs["group_size"]:
            raise ConfigError("field 'bs.group_size' must divide bs.n_antennas")
    if scenario == "fig6-broadening":
        lo, hi = merged["beam"]["sector_deg"]
        if hi < lo:
            raise ConfigError("field 'beam.sector_deg' must be ordered [low, high]")
        n = merged["bs"]["n_antennas"]
        for count in merged["td"]["counts"]:
            if count != 0 and (count < 2 or n % count):
                raise ConfigError("field 'td.counts' entries must be 0 or divisors >= 2 of bs.n_antennas")
    if scenario == "power-table":
        known = {"ps-only", "sparse-td", "per-antenna-td", "fully-td"}
        bad = [s for s in merged["structures"] if s not in known]
        if bad:
            raise ConfigError("field 'structures' has unknown entries: %s" % bad)
    if scenario == "sweep":
        if merged["irs"]["scheme"] not in (1, 2, 3, 4):
            raise ConfigError("field 'irs.scheme' must be in 1..4")
        if any(int(b) != b or b < 1 for b in merged["quantization"]["bits"]):
            raise ConfigError("field 'quantization.bits' entries must be positive integers")
    return merged


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _build_scene(scene_cfg: dict) -> Scene:
    def position(range_m, az_deg, el_deg):
        az = math.radians(az_deg)
        el = math.radians(el_deg)
        u = np.array([math.cos(el) * math.cos(az), math.cos(el) * math.sin(az), math.sin(el)])
        return range_m * u

    bs = position(scene_cfg["bs_range_m"], scene_cfg["bs_azimuth_deg"], scene_cfg["bs_elevation_deg"])
    user = position(scene_cfg["user_range_m"], scene_cfg["user_azimuth_deg"], scene_cfg["user_elevation_deg"])
    return Scene(bs_position=bs, bs_boresight=-bs, user_positions=[user])


def _cascade_profiles(cfg: dict, schemes: list[int]) -> tuple[FrequencyGrid, dict]:
    grid = FrequencyGrid(cfg["grid"]["f_c_hz"], cfg["grid"]["bandwidth_hz"],
                         cfg["grid"]["n_subcarriers"])
    scene = _build_scene(cfg["scene"])
    bs_geom = ArrayGeometry.ula(1, f_c=grid.f_c)
    weights = np.ones(1, dtype=complex)
    profiles = {}
    for scheme in schemes:
        dep = deployment_scheme(scheme, f_c=grid.f_c,
                                panel_spacing=cfg["irs"]["panel_spacing_m"],
                                base_rows=cfg["irs"]["base_rows"],
                                base_cols=cfg["irs"]["base_cols"])
        configure_for_scene(dep, scene, grid.f_c)
        profiles[scheme] = gain_profile(bs_geom, lambda f: weights, dep, scene, grid)
    return grid, profiles


def _run_fig4(cfg: dict, out_path: str) -> None:
    schemes = list(cfg["irs"]["schemes"])
    grid, profiles = _cascade_profiles(cfg, schemes)
    reference = abs(profiles[schemes[0]].reference)
    rows = []
    for scheme in schemes:
        gains = np.abs(profiles[scheme].gains) / reference
        for m, f in enumerate(grid.frequencies, start=1):
            rows.append((scheme, m, f, gains[m - 1]))
    _write_csv(out_path, ["scheme", "subcarrier_index", "freq_hz", "rel_gain"], rows)


def _pattern_rows(variant: str, precoder, geom, grid, angles) -> list:
    rows = []
    for m, f in enumerate(grid.frequencies, start=1):
        pattern = beam_pattern(geom, analog_weights_at(precoder, f), f, angles)
        for angle, gain in zip(pattern.angles_deg, pattern.gains):
            rows.append((variant, m, f, angle, gain))
    return rows


def _run_fig5(cfg: dict, out_path: str) -> None:
    grid = FrequencyGrid(cfg["grid"]["f_c_hz"], cfg["grid"]["bandwidth_hz"],
                         cfg["grid"]["n_subcarriers"])
    n = cfg["bs"]["n_antennas"]
    geom = ArrayGeometry.ula(n, f_c=grid.f_c)
    theta0 = math.radians(cfg["beam"]["target_deg"])
    angles = default_angle_grid(cfg["pattern"]["angle_points"])
    ps = ps_only_precoder(geom, theta0, grid.f_c)
    structure = TdStructure.sparse_subarray(n, cfg["bs"]["group_size"])
    td = convergence_delays(structure, geom, theta0, grid.f_c)
    rows = _pattern_rows("ps-only", ps, geom, grid, angles)
    rows += _pattern_rows("td%d" % structure.n_groups, td, geom, grid, angles)
    _write_csv(out_path, ["variant", "subcarrier_index", "freq_hz", "angle_deg", "gain"], rows)


def _run_fig6(cfg: dict, out_path: str) -> None:
    grid = FrequencyGrid(cfg["grid"]["f_c_hz"], cfg["grid"]["bandwidth_hz"],
                         cfg["grid"]["n_subcarriers"])
    n = cfg["bs"]["n_antennas"]
    geom = ArrayGeometry.ula(n, f_c=grid.f_c)
    lo, hi = (math.radians(a) for a in cfg["beam"]["sector_deg"])
    angles = default_angle_grid(cfg["pattern"]["angle_points"])
    rows = []
    for count in cfg["td"]["counts"]:
        if count == 0:
            prec = ps_only_precoder(geom, (lo + hi) / 2.0, grid.f_c)
            variant = "ps-only"
        else:
            structure = TdStructure.sparse_subarray(n, n // count)
            prec = broadening_delays(structure, geom, (lo, hi), grid.f_c)
            variant = "td%d" % count
        rows += _pattern_rows(variant, prec, geom, grid, angles)
    _write_csv(out_path, ["variant", "subcarrier_index", "freq_hz", "angle_deg", "gain"], rows)


_STRUCTURE_BUILDERS = {
    "ps-only": lambda bs: TdStructure.ps_only(bs["n_antennas"], bs["n_rf"]),
    "sparse-td": lambda bs: TdStructure.sparse_subarray(bs["n_antennas"], bs["group_size"], bs["n_rf"]),
    "per-antenna-td": lambda bs: TdStructure.per_antenna(bs["n_antennas"], bs["n_rf"]),
    "fully-td": lambda bs: TdStructure.fully_connected(bs["n_antennas"], bs["n_td_per_chain"], bs["n_rf"]),
}


def _run_power_table(cfg: dict, out_path: str) -> None:
    power = cfg["power"]
    rows = []
    for name in cfg["structures"]:
        structure = _STRUCTURE_BUILDERS[name](cfg["bs"])
        rows.append((name, structure.n_rf, structure.n_td, structure.n_ps,
                     hardware_power(structure, power["p_rf_mw"], power["p_td_mw"], power["p_ps_mw"])))
    _write_csv(out_path, ["structure", "n_rf", "n_td", "n_ps", "power_mw"], rows)


def _run_sweep(cfg: dict, out_path: str) -> None:
    scheme = cfg["irs"]["scheme"]
    grid, profiles = _cascade_profiles(cfg, [scheme])
    ideal_profile = profiles[scheme]
    reference = abs(ideal_profile.reference)

    scene = _build_scene(cfg["scene"])
    bs_geom = ArrayGeometry.ula(1, f_c=grid.f_c)
    weights = np.ones(1, dtype=complex)
    rows = []
    for m, f in enumerate(grid.frequencies, start=1):
        rows.append(("ideal", m, f, abs(ideal_profile.gains[m - 1]) / reference))
    for bits in cfg["quantization"]["bits"]:
        dep = deployment_scheme(scheme, f_c=grid.f_c,
                                panel_spacing=cfg["irs"]["panel_spacing_m"],
                                base_rows=cfg["irs"]["base_rows"],
                                base_cols=cfg["irs"]["base_cols"])
        configure_for_scene(dep, scene, grid.f_c)
        for panel in dep.panels:
            panel.phases = quantize_phases(panel.phases, int(bits))
        profile = gain_profile(bs_geom, lambda f: weights, dep, scene, grid)
        for m, f in enumerate(grid.frequencies, start=1):
            rows.append(("b%d" % bits, m, f, abs(profile.gains[m - 1]) / reference))
    _write_csv(out_path, ["scheme", "subcarrier_index", "freq_hz", "rel_gain"], rows)


_RUNNERS = {
    "fig4-deployment": _run_fig4,
    "fig5-convergence": _run_fig5,
    "fig6-broadening": _run_fig6,
    "power-table": _run_power_table,
    "sweep": _run_sweep,
}


def run_scenario(scenario: str, config: dict | None = None, out_dir: str = ".",
                 overrides: list[str] | None = None) -> list[str]:
    """Validate the configuration, run the scenario, return written paths.

    The output directory must already exist; missing directories surface
    as I/O errors rather than being created silently.
    """
    merged = validate_config(scenario, config, overrides)
    out_path = os.path.join(out_dir, scenario + ".csv")
    _RUNNERS[scenario](merged, out_path)
    return [out_path]
