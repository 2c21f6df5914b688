"""TD structures, steering laws, delay design, digital weights.

convergence_delays is checked against a brute-force delay grid search on a
small array: the closed form must reach the best edge-subcarrier gain the
search can find.
"""

import itertools
import math

import numpy as np
import pytest

from thzirs import (ArrayGeometry, InvalidParameterError, SingularChannelError,
                    SPEED_OF_LIGHT, TdPrecoder, TdStructure, TdStructureKind,
                    UnsupportedStructureError, analog_weights_at,
                    broadening_delays, convergence_delays, digital_weights,
                    ps_only_precoder, ps_steering_phases)
from thzirs.grid_geom import FrequencyGrid, LinkAngles
from thzirs.wavefield import beam_pattern, default_angle_grid

FC = 200e9
THETA30 = math.radians(30.0)
THETA45 = math.radians(45.0)


class TestTdStructure:
    def test_ps_only_counts(self):
        s = TdStructure.ps_only(64)
        assert (s.n_td, s.n_ps, s.n_groups) == (0, 64, 0)

    def test_sparse_subarray_counts(self):
        s = TdStructure.sparse_subarray(64, 4)
        assert (s.n_td, s.n_ps, s.n_groups, s.group_size) == (16, 64, 16, 4)

    def test_per_antenna_counts(self):
        s = TdStructure.per_antenna(64)
        assert (s.n_td, s.n_ps, s.group_size) == (64, 64, 1)

    def test_fully_connected_counts(self):
        s = TdStructure.fully_connected(64, n_td_per_chain=16)
        assert (s.n_td, s.n_ps, s.group_size) == (16, 64, 4)
        s2 = TdStructure.fully_connected(64, n_td_per_chain=16, n_rf=2)
        assert (s2.n_td, s2.n_ps) == (32, 128)

    def test_every_antenna_in_exactly_one_group(self):
        s = TdStructure.sparse_subarray(64, 4)
        prec = convergence_delays(s, ArrayGeometry.ula(64, f_c=FC), THETA30, FC)
        groups = prec.group_of()
        assert groups.shape == (64,)
        counts = np.bincount(groups, minlength=s.n_groups)
        assert np.all(counts == s.group_size)

    def test_rejects_bad_wiring(self):
        with pytest.raises(InvalidParameterError):
            TdStructure.sparse_subarray(64, 5)   # 5 does not divide 64
        with pytest.raises(InvalidParameterError):
            TdStructure.fully_connected(64, n_td_per_chain=5)
        with pytest.raises(InvalidParameterError):
            TdStructure(TdStructureKind.SPARSE_SUBARRAY, 64, group_size=0)
        with pytest.raises(InvalidParameterError):
            TdStructure.ps_only(0)


class TestTdPrecoder:
    def test_validates_lengths_and_sign(self):
        s = TdStructure.sparse_subarray(8, 2)
        with pytest.raises(InvalidParameterError):
            TdPrecoder(s, np.zeros(7), np.zeros(4))
        with pytest.raises(InvalidParameterError):
            TdPrecoder(s, np.zeros(8), np.zeros(3))
        with pytest.raises(InvalidParameterError):
            TdPrecoder(s, np.zeros(8), np.array([0.0, 1e-12, -1e-12, 0.0]))


class TestPsSteering:
    def test_broadside_phases_are_zero(self):
        geom = ArrayGeometry.ula(8, f_c=FC)
        assert np.all(ps_steering_phases(geom, 0.0, FC) == 0.0)

    def test_two_element_quarter_wave_case(self):
        geom = ArrayGeometry.ula(2, f_c=FC)
        ph = ps_steering_phases(geom, THETA30, FC)
        assert ph[0] == 0.0
        assert ph[1] == pytest.approx(math.pi / 2)

    def test_accepts_link_angles_with_elevation(self):
        geom = ArrayGeometry.upa(2, 2, f_c=FC)
        ang = LinkAngles(THETA30, math.radians(10.0))
        ph = ps_steering_phases(geom, ang, FC)
        d = geom.spacing
        lat, vert = ang.direction_cosines()
        expect = 2 * np.pi * FC * (geom.element_offsets() @ [lat, vert]) / SPEED_OF_LIGHT
        assert np.allclose(ph, expect)

    def test_ps_only_pattern_peaks_on_target(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        prec = ps_only_precoder(geom, THETA45, FC)
        pattern = beam_pattern(geom, analog_weights_at(prec, FC), FC)
        assert abs(pattern.argmax_deg() - 45.0) <= 0.018


class TestConvergenceDelays:
    def test_broadside_needs_no_compensation(self):
        s = TdStructure.sparse_subarray(64, 4)
        prec = convergence_delays(s, ArrayGeometry.ula(64, f_c=FC), 0.0, FC)
        assert np.all(prec.delays == 0.0)
        assert np.all(prec.ps_phases == 0.0)

    def test_five_picosecond_ladder(self):
        # K*d*sin(30)/c = 1/f_c = 5 ps per group at 200 GHz
        s = TdStructure.sparse_subarray(64, 4)
        prec = convergence_delays(s, ArrayGeometry.ula(64, f_c=FC), THETA30, FC)
        p = np.arange(16)
        assert np.allclose(prec.delays, (15 - p) * 5e-12, rtol=1e-12)
        assert prec.delays.min() == 0.0
        assert prec.delays.max() == pytest.approx(75e-12)

    def test_per_antenna_ladder_in_1p25_ps_steps(self):
        s = TdStructure.per_antenna(64)
        prec = convergence_delays(s, ArrayGeometry.ula(64, f_c=FC), THETA30, FC)
        n = np.arange(64)
        assert np.allclose(prec.delays, (63 - n) * 1.25e-12, rtol=1e-12)

    def test_weights_at_center_frequency_equal_ps_only(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        s = TdStructure.sparse_subarray(64, 4)
        conv = convergence_delays(s, geom, THETA45, FC)
        ps = ps_only_precoder(geom, THETA45, FC)
        assert np.allclose(analog_weights_at(conv, FC), analog_weights_at(ps, FC),
                           atol=1e-12)

    def test_closed_form_matches_brute_force_delay_search(self):
        # N=8, K=2: search per-TD delays on a half-step grid for the best
        # edge-subcarrier gain toward the target; the closed form must tie it
        n_ant, group = 8, 2
        geom = ArrayGeometry.ula(n_ant, f_c=FC)
        s = TdStructure.sparse_subarray(n_ant, group)
        f_edge = 190e9
        d = geom.spacing
        n = np.arange(n_ant)
        sv = np.exp(-2j * np.pi * f_edge * n * d * math.sin(THETA30) / SPEED_OF_LIGHT)
        steer = 2 * np.pi * FC * n * d * math.sin(THETA30) / SPEED_OF_LIGHT
        step = group * d * math.sin(THETA30) / SPEED_OF_LIGHT
        candidates = np.arange(-4, 5) * step / 2.0
        best = 0.0
        for delays in itertools.product(candidates, repeat=4):
            t = np.array(delays)[n // group]
            w = np.exp(1j * (steer + 2 * np.pi * FC * t)) * np.exp(-2j * np.pi * f_edge * t)
            best = max(best, abs(np.dot(w, sv)) / math.sqrt(n_ant))
        prec = convergence_delays(s, geom, THETA30, FC)
        got = abs(np.dot(analog_weights_at(prec, f_edge), sv))
        assert got >= best - 1e-9
        assert best == pytest.approx(2.8262465099372545, abs=1e-9)

    def test_argmax_pinned_to_target_across_the_band(self):
        geom = ArrayGeometry.ula(32, f_c=FC)
        s = TdStructure.sparse_subarray(32, 4)
        prec = convergence_delays(s, geom, THETA45, FC)
        grid = FrequencyGrid(FC, 20e9, 16)
        angles = default_angle_grid(2001)  # 0.09 deg step, 45 on grid
        step = angles[1] - angles[0]
        for f in grid.frequencies:
            pattern = beam_pattern(geom, analog_weights_at(prec, f), f, angles)
            assert abs(pattern.argmax_deg() - 45.0) <= step + 1e-9

    def test_delay_offset_invariance(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        s = TdStructure.sparse_subarray(64, 4)
        prec = convergence_delays(s, geom, THETA45, FC)
        shift = 3.7e-12
        shifted = TdPrecoder(s, prec.ps_phases + 2 * np.pi * FC * shift,
                             prec.delays + shift)
        grid = FrequencyGrid(FC, 20e9, 16)
        sv45 = np.exp(-2j * np.pi * np.arange(64) * geom.spacing
                      * math.sin(THETA45) / SPEED_OF_LIGHT * 1.0)
        for f in grid.frequencies:
            a = abs(np.dot(analog_weights_at(prec, f),
                           np.exp(-2j * np.pi * f * np.arange(64) * geom.spacing
                                  * math.sin(THETA45) / SPEED_OF_LIGHT)))
            b = abs(np.dot(analog_weights_at(shifted, f),
                           np.exp(-2j * np.pi * f * np.arange(64) * geom.spacing
                                  * math.sin(THETA45) / SPEED_OF_LIGHT)))
            assert abs(a - b) / a < 1e-9

    def test_rejects_structures_without_delays(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        with pytest.raises(UnsupportedStructureError):
            convergence_delays(TdStructure.ps_only(64), geom, THETA30, FC)

    def test_rejects_planar_geometry(self):
        geom = ArrayGeometry.upa(8, 8, f_c=FC)
        with pytest.raises(UnsupportedStructureError):
            convergence_delays(TdStructure.sparse_subarray(64, 4), geom, THETA30, FC)

    def test_rejects_mismatched_sizes(self):
        geom = ArrayGeometry.ula(32, f_c=FC)
        with pytest.raises(InvalidParameterError):
            convergence_delays(TdStructure.sparse_subarray(64, 4), geom, THETA30, FC)


class TestBroadeningDelays:
    def test_sixteen_groups_partition_the_sector(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        s = TdStructure.sparse_subarray(64, 4)
        sector = (math.radians(40.0), math.radians(50.0))
        prec = broadening_delays(s, geom, sector, FC)
        # recover each group's steering angle from its within-group PS slope
        d = geom.spacing
        slopes = prec.ps_phases[1::4] - prec.ps_phases[0::4]
        angles = np.degrees(np.arcsin(slopes * SPEED_OF_LIGHT / (2 * np.pi * FC * d)))
        expect = 40.0 + (np.arange(16) + 0.5) * 10.0 / 16.0
        assert angles[0] == pytest.approx(40.3125, abs=1e-9)
        assert angles[1] == pytest.approx(40.9375, abs=1e-9)
        assert np.allclose(angles, expect, atol=1e-9)

    def test_degenerate_sector_reduces_to_convergence(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        s = TdStructure.sparse_subarray(64, 4)
        broad = broadening_delays(s, geom, (THETA45, THETA45), FC)
        conv = convergence_delays(s, geom, THETA45, FC)
        assert np.allclose(broad.delays, conv.delays, atol=1e-18)
        assert np.allclose(broad.ps_phases, conv.ps_phases, atol=1e-9)

    def test_more_tds_cover_the_sector_better(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        sector = (math.radians(40.0), math.radians(50.0))
        angles = default_angle_grid(2001)
        mask = (angles >= 40.0) & (angles <= 50.0)

        def min_sector_gain(prec):
            pattern = beam_pattern(geom, analog_weights_at(prec, FC), FC, angles)
            return pattern.gains[mask].min()

        ps = ps_only_precoder(geom, (sector[0] + sector[1]) / 2.0, FC)
        g_ps = min_sector_gain(ps)
        g16 = min_sector_gain(broadening_delays(TdStructure.sparse_subarray(64, 4), geom, sector, FC))
        g32 = min_sector_gain(broadening_delays(TdStructure.sparse_subarray(64, 2), geom, sector, FC))
        assert g_ps < g16 < g32

    def test_rejects_bad_sectors_and_structures(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        s = TdStructure.sparse_subarray(64, 4)
        with pytest.raises(InvalidParameterError):
            broadening_delays(s, geom, (0.9, 0.7), FC)
        with pytest.raises(UnsupportedStructureError):
            broadening_delays(TdStructure.ps_only(64), geom, (0.7, 0.9), FC)
        one_group = TdStructure.sparse_subarray(64, 64)
        with pytest.raises(UnsupportedStructureError):
            broadening_delays(one_group, geom, (0.7, 0.9), FC)


class TestAnalogWeights:
    def test_zero_delays_reduce_to_pure_ps(self):
        s = TdStructure.sparse_subarray(8, 2)
        phases = np.linspace(0, 3, 8)
        prec = TdPrecoder(s, phases, np.zeros(4))
        for f in (190e9, FC, 210e9):
            assert np.allclose(analog_weights_at(prec, f),
                               np.exp(1j * phases) / math.sqrt(8))

    def test_unit_power(self):
        geom = ArrayGeometry.ula(64, f_c=FC)
        prec = convergence_delays(TdStructure.sparse_subarray(64, 4), geom, THETA45, FC)
        w = analog_weights_at(prec, 193e9)
        assert np.linalg.norm(w) == pytest.approx(1.0)

    def test_rejects_nonpositive_frequency(self):
        prec = ps_only_precoder(ArrayGeometry.ula(4, f_c=FC), 0.1, FC)
        with pytest.raises(InvalidParameterError):
            analog_weights_at(prec, -1.0)


class TestDigitalWeights:
    def test_unit_gain_passthrough(self):
        assert digital_weights(1.0 + 0j) == pytest.approx(1.0)

    def test_scalar_phase_conjugation(self):
        g = np.exp(1j * 0.7)
        assert digital_weights(g) == pytest.approx(np.exp(-1j * 0.7))

    def test_vector_matched_filter(self):
        rng = np.random.default_rng(23)
        h = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        w = digital_weights(h)
        assert np.linalg.norm(w) == pytest.approx(1.0)
        assert np.dot(w, h) == pytest.approx(np.linalg.norm(h))

    def test_diagonal_channel_gives_independent_matched_weights(self):
        H = np.diag([2.0 + 0j, 4.0 + 0j])
        W = digital_weights(H)
        assert np.allclose(H @ W, np.eye(2) * np.diag(H @ W).real, atol=1e-12)
        assert np.allclose(np.linalg.norm(W, axis=0), 1.0)

    def test_zero_forcing_cancels_cross_interference(self):
        rng = np.random.default_rng(29)
        H = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
        W = digital_weights(H)
        E = H @ W
        off = E - np.diag(np.diag(E))
        assert np.max(np.abs(off)) < 1e-10 * np.max(np.abs(np.diag(E)))
        assert np.allclose(np.linalg.norm(W, axis=0), 1.0)

    def test_rejects_degenerate_channels(self):
        with pytest.raises(SingularChannelError):
            digital_weights(0.0 + 0j)
        with pytest.raises(SingularChannelError):
            digital_weights(np.zeros(3, dtype=complex))
        rank1 = np.array([[1.0, 2.0], [2.0, 4.0]], dtype=complex)
        with pytest.raises(SingularChannelError):
            digital_weights(rank1)
        with pytest.raises(InvalidParameterError):
            digital_weights(np.ones((3, 2), dtype=complex))  # more users than chains
