import math
import random

import numpy as np
import pytest

from zonalprop import (EARTH, CartesianState, DelaunayState,
                       ZonalPropError, nonsingular_to_cartesian,
                       polar_to_nonsingular, small_params, v1)
from zonalprop.oracle import (hamiltonian_terms, integrate, integrate_grid,
                              poisson_bracket_fd, u1_delaunay, x1_delaunay,
                              zonal_acceleration, zonal_energy, zonal_potential)
from zonalprop.secular import orbital_period
from conftest import cart_distance, elements_to_cartesian, elements_to_polar

MU = EARTH.mu


class TestZonalAcceleration:
    def test_keplerian(self):
        f = EARTH.restricted("two-body")
        cart = CartesianState(4000.0, -5000.0, 2000.0, 1.0, 2.0, 3.0)
        r = math.sqrt(cart.x ** 2 + cart.y ** 2 + cart.z ** 2)
        acc = zonal_acceleration(cart, f)
        expected = -MU / r ** 3 * np.array([cart.x, cart.y, cart.z])
        assert acc == pytest.approx(expected, rel=1e-15)

    def test_j3_equatorial_out_of_plane(self):
        from zonalprop import GravityField
        f = GravityField(mu=MU, alpha=EARTH.alpha, c20=0.0, c30=EARTH.c30)
        cart = CartesianState(7000.0, 1000.0, 0.0, 0.0, 7.5, 0.0)
        acc = zonal_acceleration(cart, f)
        r = math.sqrt(cart.x ** 2 + cart.y ** 2)
        kepler = -MU / r ** 3 * np.array([cart.x, cart.y, 0.0])
        residual = acc - kepler
        assert residual[0] == pytest.approx(0.0, abs=1e-18)
        assert residual[1] == pytest.approx(0.0, abs=1e-18)
        assert residual[2] != 0.0

    def test_matches_potential_gradient(self):
        rng = random.Random(61)
        for _ in range(50):
            pos = np.array([rng.uniform(-9000.0, 9000.0) for _ in range(3)])
            if np.linalg.norm(pos) < 6500.0:
                pos *= 9000.0 / np.linalg.norm(pos)
            cart = CartesianState(pos[0], pos[1], pos[2], 0.0, 0.0, 0.0)
            acc = zonal_acceleration(cart, EARTH)
            h = 1e-6 * np.linalg.norm(pos)
            for i in range(3):
                up = pos.copy()
                dn = pos.copy()
                up[i] += h
                dn[i] -= h
                fd = -(zonal_potential(*up, EARTH) - zonal_potential(*dn, EARTH)) / (2 * h)
                assert acc[i] == pytest.approx(fd, rel=1e-8, abs=1e-14)


class TestIntegrate:
    def test_two_body_closed_orbit(self):
        f = EARTH.restricted("two-body")
        cart = elements_to_cartesian(7000.0, 0.1, math.radians(40.0), 0.3, 0.2, 0.1)
        L = math.sqrt(MU * 7000.0)
        T = orbital_period(L, f)
        out = integrate(cart, 0.0, T, f, tol=1e-12)
        assert cart_distance(out, cart) < 1e-10 * 7000.0

    def test_tolerance_monotonicity(self):
        f = EARTH.restricted("two-body")
        cart = elements_to_cartesian(7000.0, 0.1, math.radians(40.0), 0.3, 0.2, 0.1)
        L = math.sqrt(MU * 7000.0)
        T = orbital_period(L, f)
        errs = []
        for tol in (1e-8, 1e-10, 1e-12):
            out = integrate(cart, 0.0, T, f, tol=tol)
            errs.append(cart_distance(out, cart))
        assert errs[2] < errs[1] < errs[0]

    def test_energy_conservation_j2(self):
        cart = elements_to_cartesian(7000.0, 0.05, math.radians(30.0), 0.3, 0.2, 0.1)
        f = EARTH.restricted("j2")
        L = math.sqrt(MU * 7000.0)
        T = orbital_period(L, f)
        e0 = zonal_energy(cart, f)
        out = integrate(cart, 0.0, T, f, tol=1e-12)
        assert abs(zonal_energy(out, f) - e0) / abs(e0) < 1e-10

    def test_zero_span(self):
        cart = elements_to_cartesian(7000.0, 0.05, 0.4, 0.3, 0.2, 0.1)
        out = integrate(cart, 10.0, 10.0, EARTH)
        assert out == cart

    def test_bad_tolerance(self):
        cart = elements_to_cartesian(7000.0, 0.05, 0.4, 0.3, 0.2, 0.1)
        with pytest.raises(ZonalPropError):
            integrate(cart, 0.0, 1.0, EARTH, tol=1e-3)

    def test_grid_matches_endpoint(self):
        cart = elements_to_cartesian(7200.0, 0.02, 0.9, 0.3, 0.2, 0.1)
        ts = np.linspace(0.0, 3000.0, 7)
        grid = integrate_grid(cart, 0.0, ts, EARTH, tol=1e-12)
        end = integrate(cart, 0.0, 3000.0, EARTH, tol=1e-12)
        assert grid[-1, :3] == pytest.approx((end.x, end.y, end.z), rel=1e-10)


class TestPoissonBracketFD:
    def test_constant_generator(self):
        pn = elements_to_polar(7500.0, 0.3, 0.8, 0.4, 0.2, 0.1)
        for name in ("r", "theta", "nu", "R", "Theta", "N"):
            assert poisson_bracket_fd(lambda s: 3.7, name, pn) == 0.0

    def test_canonical_pair(self):
        pn = elements_to_polar(7500.0, 0.3, 0.8, 0.4, 0.2, 0.1)
        gen = lambda s: s.Theta
        assert poisson_bracket_fd(gen, "theta", pn) == pytest.approx(1.0, rel=1e-9)
        for name in ("r", "nu", "R", "Theta", "N"):
            assert poisson_bracket_fd(gen, name, pn) == pytest.approx(0.0, abs=1e-9)

    def test_richardson_convergence(self):
        # halving the step reduces the FD error by ~4 (second order)
        pn = elements_to_polar(7500.0, 0.35, 0.9, 1.1, 0.4, 0.2)
        gen = lambda s: v1(s, EARTH)
        ref = poisson_bracket_fd(gen, "theta", pn, rel_step=1e-8)
        errs = []
        for step in (1e-3, 5e-4, 2.5e-4):
            errs.append(abs(poisson_bracket_fd(gen, "theta", pn, rel_step=step) - ref))
        r1 = errs[0] / errs[1]
        r2 = errs[1] / errs[2]
        assert r1 == pytest.approx(4.0, rel=0.25)
        assert r2 == pytest.approx(4.0, rel=0.25)

    def test_unknown_variable(self):
        pn = elements_to_polar(7500.0, 0.3, 0.8, 0.4, 0.2, 0.1)
        with pytest.raises(ZonalPropError):
            poisson_bracket_fd(lambda s: 0.0, "q", pn)


class TestDelaunayGeneratingFunctions:
    def test_u1_circular(self):
        a, inc = 7400.0, math.radians(55.0)
        L = math.sqrt(MU * a)
        d = DelaunayState(ell=0.8, g=0.3, h=0.1, L=L, G=L, H=L * math.cos(inc))
        sp = small_params(L, EARTH)
        s2 = math.sin(inc) ** 2
        # at e = 0 only the sin(2f + 2g) term survives, with f = ell
        expected = 0.5 * L * sp.eps2 * 3.0 * s2 * math.sin(2.0 * d.ell + 2.0 * d.g)
        assert u1_delaunay(d, EARTH) == pytest.approx(expected, rel=1e-12)

    def test_x1_circular_is_zero(self):
        a, inc = 7400.0, math.radians(55.0)
        L = math.sqrt(MU * a)
        d = DelaunayState(ell=0.8, g=0.3, h=0.1, L=L, G=L, H=L * math.cos(inc))
        assert x1_delaunay(d, EARTH) == 0.0


class TestHamiltonianTerms:
    def test_keplerian_vis_viva(self):
        f = EARTH.restricted("two-body")
        pn = elements_to_polar(7400.0, 0.2, 0.9, 0.5, 0.3, 0.1)
        h00, h10, h20 = hamiltonian_terms(pn, f)
        cart = nonsingular_to_cartesian(polar_to_nonsingular(pn))
        assert h10 == 0.0 and h20 == 0.0
        assert h00 == pytest.approx(zonal_energy(cart, f), rel=1e-13)

    def test_sum_equals_cartesian_energy(self):
        rng = random.Random(62)
        for _ in range(100):
            pn = elements_to_polar(rng.uniform(6800.0, 30000.0),
                                   rng.uniform(0.0, 0.8),
                                   rng.uniform(0.01, 3.1),
                                   rng.uniform(-3.0, 3.0),
                                   rng.uniform(-3.0, 3.0),
                                   rng.uniform(-3.0, 3.0))
            h00, h10, h20 = hamiltonian_terms(pn, EARTH)
            total = h00 + h10 + 0.5 * h20
            cart = nonsingular_to_cartesian(polar_to_nonsingular(pn))
            exact = zonal_energy(cart, EARTH)
            assert abs(total - exact) / abs(exact) < 1e-11

    def test_integrator_preserves_n(self):
        cart = elements_to_cartesian(7100.0, 0.1, math.radians(50.0), 0.4, 0.2, 0.6)
        n0 = cart.x * cart.vy - cart.y * cart.vx
        out = integrate(cart, 0.0, 6000.0, EARTH, tol=1e-12)
        n1 = out.x * out.vy - out.y * out.vx
        assert n1 == pytest.approx(n0, rel=1e-11)
