"""Independent verification machinery.

Nothing here is used by the analytic pipeline itself: exact numerical
integration of the J2+J3 equations of motion, finite-difference Poisson
brackets against the generating functions, the Delaunay-form generating
functions, and the Hamiltonian perturbative terms.  The test suite uses
these as oracles for the closed-form corrections.
"""

import math
from dataclasses import replace

import numpy as np
from scipy.integrate import solve_ivp

from .errors import ZonalPropError
from .gravity import GravityField, small_params
from .longperiod import critical_inclination_guard
from .states import CartesianState, DelaunayState, PolarNodalState

_COORDS = ("r", "theta", "nu", "R", "Theta", "N")
_CONJUGATE = {"r": "R", "theta": "Theta", "nu": "N",
              "R": "r", "Theta": "theta", "N": "nu"}


def zonal_potential(x: float, y: float, z: float, field: GravityField) -> float:
    """Potential energy per unit mass, central term plus degree 2 and 3 zonals."""
    r2 = x * x + y * y + z * z
    r = math.sqrt(r2)
    sphi = z / r
    p2 = 0.5 * (3.0 * sphi * sphi - 1.0)
    p3 = 0.5 * (5.0 * sphi ** 3 - 3.0 * sphi)
    ar = field.alpha / r
    return (-field.mu / r) * (1.0 + ar * ar * field.c20 * p2 + ar ** 3 * field.c30 * p3)


def zonal_acceleration(cart: CartesianState, field: GravityField) -> np.ndarray:
    """Closed-form gradient of the zonal potential (central term included)."""
    x, y, z = cart.x, cart.y, cart.z
    r2 = x * x + y * y + z * z
    if r2 <= 0.0:
        raise ZonalPropError("position norm must be positive")
    r = math.sqrt(r2)
    r5 = r2 * r2 * r
    mu = field.mu
    a2 = field.alpha * field.alpha
    z2_r2 = z * z / r2
    # degree 2
    c2 = 1.5 * mu * a2 * field.c20 / r5
    ax = -mu * x / (r2 * r) + c2 * x * (1.0 - 5.0 * z2_r2)
    ay = -mu * y / (r2 * r) + c2 * y * (1.0 - 5.0 * z2_r2)
    az = -mu * z / (r2 * r) + c2 * z * (3.0 - 5.0 * z2_r2)
    # degree 3
    c3 = 2.5 * mu * a2 * field.alpha * field.c30 / (r5 * r2)
    ax += -c3 * x * z * (7.0 * z2_r2 - 3.0)
    ay += -c3 * y * z * (7.0 * z2_r2 - 3.0)
    az += c3 * (6.0 * z * z - 7.0 * z2_r2 * z * z - 0.6 * r2)
    return np.array([ax, ay, az])


def zonal_energy(cart: CartesianState, field: GravityField) -> float:
    """Exact conserved energy v^2/2 + U of the zonal problem."""
    v2 = cart.vx ** 2 + cart.vy ** 2 + cart.vz ** 2
    return 0.5 * v2 + zonal_potential(cart.x, cart.y, cart.z, field)


def _rhs(field: GravityField):
    def f(t, y):
        acc = zonal_acceleration(CartesianState(*y), field)
        return (y[3], y[4], y[5], acc[0], acc[1], acc[2])
    return f


def integrate(cart0: CartesianState, t0: float, t1: float, field: GravityField,
              tol: float = 1e-12) -> CartesianState:
    """Reference numerical propagation from t0 to t1.

    Adaptive 8th-order explicit Runge-Kutta (DOP853) with local error
    control at ``tol``; at tol = 1e-12 the exact zonal energy drifts by
    less than 1e-10 relative over 100 orbits.
    """
    if not (1e-14 <= tol <= 1e-6):
        raise ZonalPropError(f"tol must lie in [1e-14, 1e-6], got {tol}")
    if t1 == t0:
        return replace(cart0)
    y0 = (cart0.x, cart0.y, cart0.z, cart0.vx, cart0.vy, cart0.vz)
    sol = solve_ivp(_rhs(field), (t0, t1), y0, method="DOP853",
                    rtol=tol, atol=tol)
    if not sol.success:
        raise ZonalPropError(f"integration failed: {sol.message}")
    return CartesianState(*sol.y[:, -1])


def integrate_grid(cart0: CartesianState, t0: float, ts, field: GravityField,
                   tol: float = 1e-12) -> np.ndarray:
    """Reference trajectory sampled at the grid times; (n, 6) array."""
    ts = np.asarray(ts, dtype=float)
    y0 = (cart0.x, cart0.y, cart0.z, cart0.vx, cart0.vy, cart0.vz)
    t1 = float(ts.max()) if ts.size else t0
    if t1 == t0:
        return np.tile(np.asarray(y0), (ts.size, 1))
    sol = solve_ivp(_rhs(field), (t0, t1), y0, method="DOP853",
                    rtol=tol, atol=tol, t_eval=ts, dense_output=False)
    if not sol.success:
        raise ZonalPropError(f"integration failed: {sol.message}")
    return sol.y.T.copy()


def poisson_bracket_fd(gen, coordinate: str, pn: PolarNodalState,
                       rel_step: float = 1e-6) -> float:
    """{coordinate, gen} by central differences over the canonical pairs.

    ``gen`` maps a PolarNodalState to a scalar.  The derivative is taken
    with respect to the conjugate variable, with a step of ``rel_step``
    times that variable's characteristic scale, and the canonical sign:
    +d(gen)/d(momentum) for coordinates, -d(gen)/d(coordinate) for momenta.
    """
    if coordinate not in _COORDS:
        raise ZonalPropError(f"unknown polar-nodal variable {coordinate!r}")
    partner = _CONJUGATE[coordinate]
    scales = {"r": pn.r, "theta": 1.0, "nu": 1.0,
              "R": pn.Theta / pn.r, "Theta": pn.Theta, "N": pn.Theta}
    h = rel_step * scales[partner]
    up = replace(pn, **{partner: getattr(pn, partner) + h})
    dn = replace(pn, **{partner: getattr(pn, partner) - h})
    fu, fd = gen(up), gen(dn)
    if not (math.isfinite(fu) and math.isfinite(fd)):
        raise ZonalPropError("generating function returned a non-finite value")
    sign = 1.0 if coordinate in ("r", "theta", "nu") else -1.0
    return sign * (fu - fd) / (2.0 * h)


def u1_delaunay(d: DelaunayState, field: GravityField) -> float:
    """Short-period generating function in Delaunay variables.

    Equals the polar-nodal form at the mapped state (the V1 = U1
    cross-representation identity checked by the tests).
    """
    from . import _kernels
    eta = d.G / d.L
    e = math.sqrt(max(0.0, 1.0 - eta * eta))
    s2 = 1.0 - (d.H / d.G) ** 2
    sp = small_params(d.G, field)
    u = _kernels.kepler_u(d.ell, e)
    f = 2.0 * math.atan2(math.sqrt(1.0 + e) * math.sin(0.5 * u),
                         math.sqrt(1.0 - e) * math.cos(0.5 * u))
    phi = (f - u) + e * math.sin(u)
    return 0.5 * d.G * sp.eps2 * (
        (4.0 - 6.0 * s2) * (phi + e * math.sin(f))
        + 3.0 * e * s2 * math.sin(f + 2.0 * d.g)
        + 3.0 * s2 * math.sin(2.0 * f + 2.0 * d.g)
        + e * s2 * math.sin(3.0 * f + 2.0 * d.g))


def x1_delaunay(d: DelaunayState, field: GravityField) -> float:
    """Long-period generating function in Delaunay variables."""
    c = d.H / d.G
    critical_inclination_guard(c)
    eta = d.G / d.L
    e = math.sqrt(max(0.0, 1.0 - eta * eta))
    s2 = 1.0 - c * c
    s = math.sqrt(s2)
    sp = small_params(d.G, field)
    w = (14.0 - 15.0 * s2) / (4.0 - 5.0 * s2)
    return d.G * (-sp.eps2 * w * 0.125 * s2 * e * e * math.sin(2.0 * d.g)
                  + sp.eps3 * s * e * math.cos(d.g))


def hamiltonian_terms(pn: PolarNodalState, field: GravityField) -> tuple[float, float, float]:
    """The perturbative Hamiltonian terms (H00, H10, H20).

    H00 + H10 + H20/2 equals the exact Cartesian energy of the state.
    """
    v2 = pn.R ** 2 + (pn.Theta / pn.r) ** 2
    ainv = 2.0 / pn.r - v2 / field.mu
    h00 = -0.5 * field.mu * ainv
    c = pn.cos_inclination
    s2 = 1.0 - c * c
    s = math.sqrt(s2)
    ar = field.alpha / pn.r
    h10 = (field.mu / pn.r) * 0.25 * field.c20 * ar * ar * (
        2.0 - 3.0 * s2 + 3.0 * s2 * math.cos(2.0 * pn.theta))
    h20 = (field.mu / pn.r) * 0.5 * field.c30 * ar ** 3 * s * (
        6.0 * (1.0 - 1.25 * s2) * math.sin(pn.theta)
        + 2.5 * s2 * math.sin(3.0 * pn.theta))
    return h00, h10, h20
