"""Validation operators: residual, current, polar decomposition, moments,
ridge tracing, and their convergence rates.

Note on grids: every solution of the wave operator is f(u+v) + g(u-v), and
on grids with h_u = h_v the paired second-difference stencils annihilate
such fields exactly (to roundoff).  Convergence-rate measurements therefore
use h_v = h_u / 2, while the equal-spacing case is asserted as exact.
"""

import math

import numpy as np
import pytest

from uvpackets.boxpacket import BoxPacketParams, mode_coefficients, series_field
from uvpackets.fields import Field2D, Grid2D, PhysicalConstants, sample
from uvpackets.freepacket import FreePacketParams, packet_closed
from uvpackets.validate import (CurrentField, PotentialSpec, bohmian_momentum,
                                current_divergence, current_observable,
                                halfline_moments, pde_residual, polar_decompose,
                                probability_current, ridge_trace)

P12 = FreePacketParams(alpha=1.0, d=2.0)
FREE = PotentialSpec.free()


def free_field(grid, p=P12):
    return sample(grid, lambda U, V: packet_closed(U, V, p))


def square_grid(h, lim=6.0):
    n = int(round(2 * lim / h)) + 1
    return Grid2D(-lim, lim, -lim, lim, n, n)


def tall_grid(h_u, lim=6.0):
    """h_v = h_u / 2, for convergence-rate measurements."""
    n_u = int(round(2 * lim / h_u)) + 1
    return Grid2D(-lim, lim, -lim, lim, n_u, 2 * (n_u - 1) + 1)


def interior_sup(field):
    return float(np.abs(field.interior()).max())


class TestPotentialSpec:
    def test_kinds(self):
        assert PotentialSpec.free().kind == "free"
        assert PotentialSpec.box(4.0).L == 4.0
        with pytest.raises(ValueError):
            PotentialSpec(kind="harmonic")
        with pytest.raises(ValueError):
            PotentialSpec.box(0.0)

    def test_box_domain_enforced(self):
        grid = Grid2D(-3, 3, -3, 3, 11, 11)
        f = sample(grid, lambda U, V: np.cos(U) * np.cos(V))
        with pytest.raises(ValueError):
            pde_residual(f, PotentialSpec.box(4.0))


class TestPdeResidual:
    def test_trig_eigenfunction_annihilated(self):
        # cos(ku)cos(kv) solves the equation; on an equal-spacing grid the
        # discrete residual is pure roundoff
        k = 1.7
        grid = square_grid(0.05, lim=3.0)
        f = sample(grid, lambda U, V: np.cos(k * U) * np.cos(k * V))
        res = pde_residual(f, FREE)
        assert not res.edges_valid
        assert interior_sup(res) < 1e-10

    def test_packet_equal_spacing_exact(self):
        grid = square_grid(0.05)
        res = pde_residual(free_field(grid), FREE)
        assert interior_sup(res) < 1e-10

    def test_packet_second_order_rate(self):
        sups = []
        for h_u in (0.04, 0.02):
            res = pde_residual(free_field(tall_grid(h_u)), FREE)
            sups.append(interior_sup(res))
        ratio = sups[0] / sups[1]
        assert 3.5 <= ratio <= 4.5

    def test_gaussian_residual_value(self):
        # v-independent e^{-alpha u^2}: residual at u = 0 is +alpha
        grid = Grid2D(-2, 2, 0, 1, 401, 3)
        f = sample(grid, lambda U, V: np.exp(-U * U) + 0j)
        res = pde_residual(f, FREE)
        i0 = int(np.argmin(np.abs(grid.u)))
        assert grid.u[i0] == 0.0
        assert res.values[1, i0].real == pytest.approx(1.0, abs=1e-3)

    def test_linearity(self):
        grid = square_grid(0.1, lim=3.0)
        f = free_field(grid)
        c = 0.7 - 1.3j
        scaled = Field2D(grid, c * f.values)
        r1 = pde_residual(f, FREE).values
        r2 = pde_residual(scaled, FREE).values
        assert np.abs(r2 - c * r1).max() < 1e-12

    def test_box_series_second_order_rate(self):
        p = BoxPacketParams(L=6.0, alpha=5.0, d=1.5, n_max=120)
        coeffs = mode_coefficients(p)
        pot = PotentialSpec.box(p.L)
        sups = []
        for h_u in (0.04, 0.02):
            n_u = int(round(6.0 / h_u)) + 1
            grid = Grid2D(-3.0, 3.0, -3.0, 3.0, n_u, 2 * (n_u - 1) + 1)
            res = pde_residual(series_field(grid, p, coeffs), pot)
            sups.append(interior_sup(res))
        ratio = sups[0] / sups[1]
        assert 3.5 <= ratio <= 4.5


class TestProbabilityCurrent:
    def test_real_field_has_zero_current(self):
        grid = square_grid(0.1, lim=3.0)
        f = sample(grid, lambda U, V: np.exp(-(U - 2) ** 2) + np.exp(-(U + 2) ** 2) + 0j)
        j = probability_current(f)
        assert np.abs(j.j_u).max() == 0.0
        assert np.abs(j.j_v).max() == 0.0

    def test_plane_wave(self):
        # e^{iku}: j_u = i k |Psi|^2 up to the O(h^2) stencil factor
        k = 1.3
        grid = square_grid(0.02, lim=2.0)
        f = sample(grid, lambda U, V: np.exp(1j * k * U))
        j = probability_current(f)
        inner = j.j_u[1:-1, 1:-1]
        assert np.abs(inner.real).max() < 1e-14  # purely imaginary
        assert np.abs(inner - 1j * k).max() < 1e-3
        assert np.abs(j.j_v[1:-1, 1:-1]).max() < 1e-12

    def test_observable_is_minus_i_times_current(self):
        grid = square_grid(0.1, lim=3.0)
        f = free_field(grid)
        j = probability_current(f)
        obs = current_observable(f)
        assert np.abs(obs.j_u - (-1j * j.j_u)).max() < 1e-14
        assert np.abs(obs.j_v - (-1j * j.j_v)).max() < 1e-14

    def test_scale_covariance(self):
        # Psi -> c Psi multiplies the current by |c|^2
        grid = square_grid(0.1, lim=3.0)
        f = free_field(grid)
        c = 0.7 - 1.3j
        j1 = probability_current(f)
        j2 = probability_current(Field2D(grid, c * f.values))
        scale = abs(c) ** 2
        assert np.abs(j2.j_u - scale * j1.j_u).max() < 1e-12
        assert np.abs(j2.j_v - scale * j1.j_v).max() < 1e-12


class TestCurrentDivergence:
    def test_constant_current(self):
        grid = square_grid(0.25, lim=2.0)
        ones = np.ones((grid.n_v, grid.n_u), dtype=complex)
        j = CurrentField(grid, 1j * ones, -2j * ones)
        for sig in ("hyperbolic", "euclidean"):
            assert interior_sup(current_divergence(j, signature=sig)) == 0.0

    def test_diagonal_plane_wave(self):
        # measured two layers in: the outer ring differentiates the
        # one-sided edge values of j
        grid = square_grid(0.02, lim=2.0)
        f = sample(grid, lambda U, V: np.exp(1j * 1.1 * (U + V)))
        div = current_divergence(probability_current(f))
        assert np.abs(div.values[2:-2, 2:-2]).max() < 1e-10

    def test_packet_divergence_second_order(self):
        sups = []
        for h in (0.04, 0.02):
            f = free_field(square_grid(h))
            div = current_divergence(probability_current(f))
            sups.append(interior_sup(div))
        ratio = sups[0] / sups[1]
        assert 3.5 <= ratio <= 4.5

    def test_euclidean_sum_not_conserved(self):
        # the plain sum converges to a nonzero field: no O(h^2) decay
        sups = []
        for h in (0.04, 0.02):
            f = free_field(square_grid(h))
            div = current_divergence(probability_current(f), signature="euclidean")
            sups.append(interior_sup(div))
        assert sups[1] > 1.0
        assert sups[0] / sups[1] < 1.5

    def test_signature_validated(self):
        grid = square_grid(0.25, lim=2.0)
        ones = np.ones((grid.n_v, grid.n_u), dtype=complex)
        with pytest.raises(ValueError):
            current_divergence(CurrentField(grid, ones, ones), signature="both")


class TestPolarDecompose:
    def test_unit_field(self):
        grid = square_grid(0.5, lim=2.0)
        f = sample(grid, lambda U, V: np.ones_like(U, dtype=complex))
        polar = polar_decompose(f)
        assert np.all(polar.r == 1.0)
        assert np.all(polar.s == 0.0)
        assert np.all(polar.valid)

    def test_constant_phase(self):
        grid = square_grid(0.5, lim=2.0)
        c = (1 - 1j) / math.sqrt(2)
        f = sample(grid, lambda U, V: np.full_like(U, c, dtype=complex))
        polar = polar_decompose(f)
        assert np.abs(polar.r - 1.0).max() < 1e-15
        assert np.abs(polar.s + math.pi / 4).max() < 1e-15

    def test_round_trip_on_packet(self):
        grid = square_grid(0.05)
        f = free_field(grid)
        polar = polar_decompose(f)
        recon = polar.r * np.exp(1j * polar.s)
        err = np.abs(recon - f.values)[polar.valid].max()
        assert err < 1e-12

    def test_below_threshold_masked(self):
        grid = square_grid(0.5, lim=2.0)
        vals = np.full((grid.n_v, grid.n_u), 1e-15 + 0j)
        vals[0, 0] = 1.0 + 1.0j
        polar = polar_decompose(Field2D(grid, vals))
        assert polar.valid[0, 0]
        assert not polar.valid[1, 1]
        assert polar.s[1, 1] == 0.0

    def test_phase_shift_covariance(self):
        # Psi -> c Psi shifts S by arg(c) wherever the phase is defined
        grid = square_grid(0.1, lim=3.0)
        f = free_field(grid)
        c = 0.7 - 1.3j
        s1 = polar_decompose(f)
        s2 = polar_decompose(Field2D(grid, c * f.values))
        both = s1.valid & s2.valid
        shift = np.exp(1j * (s2.s - s1.s))[both]
        target = c / abs(c)
        assert np.abs(shift - target).max() < 1e-12


class TestBohmianMomentum:
    def test_constant_phase_gives_zero(self):
        grid = square_grid(0.5, lim=2.0)
        f = sample(grid, lambda U, V: np.full_like(U, 2.0 + 2.0j, dtype=complex))
        p = bohmian_momentum(polar_decompose(f))
        assert np.abs(p.j_u).max() == 0.0
        assert np.abs(p.j_v).max() == 0.0

    def test_plane_wave_momentum(self):
        k = 0.9
        grid = square_grid(0.02, lim=2.0)
        f = sample(grid, lambda U, V: np.exp(1j * k * U))
        p = bohmian_momentum(polar_decompose(f))
        assert np.abs(p.j_u[1:-1, 1:-1] - k).max() < 1e-10
        assert np.abs(p.j_v[1:-1, 1:-1]).max() < 1e-10

    def test_hbar_factor(self):
        k = 0.9
        grid = square_grid(0.05, lim=2.0)
        f = sample(grid, lambda U, V: np.exp(1j * k * U))
        p = bohmian_momentum(polar_decompose(f), PhysicalConstants(hbar=2.0))
        assert np.abs(p.j_u[1:-1, 1:-1] - 2 * k).max() < 1e-9

    def test_phase_locks_inside_one_branch(self):
        # deep inside the u = v + d branch the phase is pinned at pi/4
        p = FreePacketParams(alpha=5.0, d=2.0)
        grid = Grid2D(3.0, 5.0, 1.0, 3.0, 201, 201)
        f = free_field(grid, p)
        mom = bohmian_momentum(polar_decompose(f))
        i = int(np.argmin(np.abs(grid.u - 4.0)))
        j = int(np.argmin(np.abs(grid.v - 2.0)))
        mag = math.hypot(mom.j_u[j, i], mom.j_v[j, i])
        assert mag < 1e-3

    def test_momentum_invariant_under_rescaling(self):
        grid = square_grid(0.1, lim=3.0)
        f = free_field(grid)
        c = 0.7 - 1.3j
        p1 = bohmian_momentum(polar_decompose(f))
        p2 = bohmian_momentum(polar_decompose(Field2D(grid, c * f.values)))
        both = (np.abs(f.values) > 1e-6)
        sel = both[1:-1, 1:-1]
        assert np.abs((p2.j_u - p1.j_u)[1:-1, 1:-1][sel]).max() < 1e-10


class TestHalflineMoments:
    def test_separated_gaussians(self):
        rep = halfline_moments(FreePacketParams(1.0, 4.0), PhysicalConstants())
        assert rep.mean_u == pytest.approx(4.0, abs=1e-3)
        assert rep.var_u == pytest.approx(0.25, rel=0.05)
        assert rep.var_p == pytest.approx(1.0, rel=0.05)
        assert rep.product == pytest.approx(0.25, rel=0.05)

    def test_alpha2_d3(self):
        rep = halfline_moments(FreePacketParams(2.0, 3.0), PhysicalConstants())
        assert rep.var_u == pytest.approx(1.0 / 8.0, rel=0.05)
        assert rep.var_p == pytest.approx(2.0, rel=0.05)

    def test_half_normal_limit(self):
        # d = 0: half-normal moments, var_u = (1/4)(1 - 2/pi)
        rep = halfline_moments(FreePacketParams(1.0, 0.0), PhysicalConstants())
        assert rep.var_u == pytest.approx(0.25 * (1 - 2 / math.pi), abs=1e-4)
        assert rep.var_p == pytest.approx(1.0, abs=1e-6)

    def test_product_lower_bound_and_monotone_approach(self):
        deltas = []
        for d in (2.0, 4.0, 8.0):
            rep = halfline_moments(FreePacketParams(1.0, d), PhysicalConstants())
            assert rep.product >= 0.25 * (1 - 5e-2)
            deltas.append(abs(rep.product - 0.25))
        assert deltas[0] >= deltas[1] - 1e-9
        assert deltas[1] >= deltas[2] - 1e-9

    def test_hbar_scaling(self):
        r1 = halfline_moments(FreePacketParams(1.0, 3.0), PhysicalConstants())
        r2 = halfline_moments(FreePacketParams(1.0, 3.0), PhysicalConstants(hbar=2.0))
        assert r2.var_p == pytest.approx(4 * r1.var_p, rel=1e-12)
        assert r2.hbar == 2.0


class TestRidgeTrace:
    def test_peaks_at_initial_positions(self):
        p = FreePacketParams(alpha=5.0, d=1.5)
        grid = Grid2D(-6, 6, -0.1, 0.1, 241, 5)
        pts = ridge_trace(free_field(grid, p))
        row0 = pts[np.abs(pts[:, 1]) < 1e-12]
        us = np.sort(row0[:, 0])
        assert len(us) == 2
        assert np.abs(us - np.array([-1.5, 1.5])).max() < grid.h_u

    def test_four_lines_at_half(self):
        p = FreePacketParams(alpha=5.0, d=1.5)
        grid = Grid2D(-6, 6, 0.4, 0.6, 241, 5)
        pts = ridge_trace(free_field(grid, p))
        mid = pts[np.abs(pts[:, 1] - 0.5) < 1e-12]
        us = np.sort(mid[:, 0])
        assert len(us) == 4
        assert np.abs(us - np.array([-2.0, -1.0, 1.0, 2.0])).max() < grid.h_u

    def test_zero_field_empty(self):
        grid = Grid2D(-1, 1, -1, 1, 11, 11)
        pts = ridge_trace(Field2D(grid, np.zeros((11, 11))))
        assert pts.shape == (0, 2)

    def test_exclusions_drop_points(self):
        p = FreePacketParams(alpha=5.0, d=1.5)
        grid = Grid2D(-6, 6, -0.1, 0.1, 241, 5)
        f = free_field(grid, p)
        pts = ridge_trace(f, exclusions=[((1.5, 0.0), 0.5)])
        row0 = pts[np.abs(pts[:, 1]) < 1e-12]
        assert len(row0) == 1
        assert row0[0, 0] == pytest.approx(-1.5, abs=grid.h_u)
