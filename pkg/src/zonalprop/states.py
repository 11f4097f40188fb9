"""State representations and the exact transformations among Cartesian,
polar-nodal, nonsingular, and Delaunay sets.

The nonsingular set (psi, xi, chi, r, R, Theta) carries the polar component
of the angular momentum N as a constant of motion.  Two charts cover all
inclinations: the prograde chart with psi = theta + nu, and the retrograde
chart (psi* = theta - nu) selected when N < 0, realised internally by
mirroring the y axis.
"""

import math
from dataclasses import dataclass

from . import _kernels
from .errors import (ChartError, EquatorialDecompositionError,
                     NonEllipticStateError, ZonalPropError)

_SLACK = 1e-9


@dataclass(frozen=True)
class CartesianState:
    """Inertial position [length] and velocity [length/time]."""

    x: float
    y: float
    z: float
    vx: float
    vy: float
    vz: float

    def position(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def velocity(self) -> tuple[float, float, float]:
        return (self.vx, self.vy, self.vz)


@dataclass(frozen=True)
class PolarNodalState:
    """Canonical polar-nodal (Hill/Whittaker) variables (r, theta, nu, R, Theta, N)."""

    r: float
    theta: float
    nu: float
    R: float
    Theta: float
    N: float

    def __post_init__(self):
        if not (self.r > 0.0 and self.Theta > 0.0):
            raise ZonalPropError(f"need r > 0 and Theta > 0, got r={self.r}, Theta={self.Theta}")
        if abs(self.N) > self.Theta * (1.0 + _SLACK):
            raise ZonalPropError(f"|N| = {abs(self.N)} exceeds Theta = {self.Theta}")

    @property
    def cos_inclination(self) -> float:
        c = self.N / self.Theta
        return max(-1.0, min(1.0, c))

    @property
    def sin_inclination(self) -> float:
        c = self.cos_inclination
        return math.sqrt(max(0.0, 1.0 - c * c))


@dataclass(frozen=True)
class NonsingularState:
    """Nonsingular, non-canonical set (psi, xi, chi, r, R, Theta) plus N.

    ``retrograde`` marks the psi* = theta - nu chart (used when N < 0).
    """

    psi: float
    xi: float
    chi: float
    r: float
    R: float
    Theta: float
    N: float
    retrograde: bool = False

    def __post_init__(self):
        if not (self.r > 0.0 and self.Theta > 0.0):
            raise ZonalPropError(f"need r > 0 and Theta > 0, got r={self.r}, Theta={self.Theta}")
        if self.xi * self.xi + self.chi * self.chi > 1.0 + _SLACK:
            raise ZonalPropError("xi^2 + chi^2 must not exceed 1")

    @property
    def s2(self) -> float:
        """sin^2 of the inclination, from the state components themselves."""
        return self.xi * self.xi + self.chi * self.chi

    @property
    def cos_inclination_abs(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.s2))


@dataclass(frozen=True)
class DelaunayState:
    """Delaunay action-angle set (ell, g, h, L, G, H)."""

    ell: float
    g: float
    h: float
    L: float
    G: float
    H: float

    def __post_init__(self):
        if not (0.0 < self.G <= self.L * (1.0 + _SLACK)):
            raise ZonalPropError(f"need 0 < G <= L, got G={self.G}, L={self.L}")
        if abs(self.H) > self.G * (1.0 + _SLACK):
            raise ZonalPropError(f"|H| = {abs(self.H)} exceeds G = {self.G}")


@dataclass(frozen=True)
class RotationAux:
    """Rotation factors t, tau, q of the nonsingular <-> Cartesian map."""

    t: float
    tau: float
    q: float


def rotation_aux(xi: float, chi: float, c_abs: float) -> RotationAux:
    """t, tau, q for |cos I| = c_abs; regular as long as c_abs > -1."""
    opc = 1.0 + c_abs
    return RotationAux(t=1.0 - xi * xi / opc, tau=1.0 - chi * chi / opc, q=xi * chi / opc)


# ---------------------------------------------------------------------------
# polar-nodal <-> nonsingular
# ---------------------------------------------------------------------------

def polar_to_nonsingular(pn: PolarNodalState) -> NonsingularState:
    """Exact map to the nonsingular set; chart picked by the sign of N."""
    retro = pn.N < 0.0
    s = pn.sin_inclination
    psi = pn.theta - pn.nu if retro else pn.theta + pn.nu
    return NonsingularState(
        psi=_kernels.wrap_pi(psi),
        xi=s * math.sin(pn.theta),
        chi=s * math.cos(pn.theta),
        r=pn.r, R=pn.R, Theta=pn.Theta, N=pn.N,
        retrograde=retro,
    )


def nonsingular_to_polar(ns: NonsingularState, s_tol: float = 1e-12) -> PolarNodalState:
    """Inverse map; fails when sin(I) <= s_tol (theta, nu undefined there)."""
    s = math.hypot(ns.xi, ns.chi)
    if s <= s_tol:
        raise EquatorialDecompositionError(
            "node and argument of latitude are undefined for an equatorial "
            "orbit; convert through Cartesian coordinates instead")
    theta = math.atan2(ns.xi, ns.chi)
    nu = theta - ns.psi if ns.retrograde else ns.psi - theta
    return PolarNodalState(r=ns.r, theta=theta, nu=_kernels.wrap_pi(nu),
                           R=ns.R, Theta=ns.Theta, N=ns.N)


# ---------------------------------------------------------------------------
# nonsingular <-> Cartesian
# ---------------------------------------------------------------------------

def nonsingular_to_cartesian(ns: NonsingularState) -> CartesianState:
    """Rotation-free map to Cartesian coordinates.

    Uses c = N/Theta (N is the carried integral of the zonal problem), with
    |c| in the retrograde chart.  A prograde-chart state with 1 + c ~ 0
    cannot be represented and raises ChartError.
    """
    c = ns.N / ns.Theta
    if not ns.retrograde and 1.0 + c < 1e-9:
        raise ChartError("1 + N/Theta vanishes in the prograde chart; "
                         "re-encode the state in the retrograde (psi*) chart")
    x, y, z, vx, vy, vz = _kernels.ns_to_cart(ns.psi, ns.xi, ns.chi, ns.r, ns.R,
                                              ns.Theta, ns.N, ns.retrograde)
    return CartesianState(x, y, z, vx, vy, vz)


def cartesian_to_nonsingular(cart: CartesianState, mu: float | None = None) -> NonsingularState:
    """Inverse map; purely geometric (mu is accepted for interface symmetry).

    Raises for rectilinear states (vanishing angular momentum).  The chart is
    selected by the sign of N, so equatorial retrograde states convert
    without trouble.
    """
    rnorm = math.sqrt(cart.x ** 2 + cart.y ** 2 + cart.z ** 2)
    if rnorm <= 0.0:
        raise ZonalPropError("position norm must be positive")
    hx = cart.y * cart.vz - cart.z * cart.vy
    hy = cart.z * cart.vx - cart.x * cart.vz
    hz = cart.x * cart.vy - cart.y * cart.vx
    if hx * hx + hy * hy + hz * hz <= 0.0:
        raise NonEllipticStateError("rectilinear orbit: angular momentum vanishes")
    psi, xi, chi, r, R, Theta, N, retro = _kernels.cart_to_ns(
        cart.x, cart.y, cart.z, cart.vx, cart.vy, cart.vz)
    return NonsingularState(psi=psi, xi=xi, chi=chi, r=r, R=R, Theta=Theta,
                            N=N, retrograde=bool(retro))


# ---------------------------------------------------------------------------
# Delaunay <-> polar-nodal
# ---------------------------------------------------------------------------

def delaunay_to_polar(d: DelaunayState, mu: float) -> PolarNodalState:
    """Kepler solve for u, then r, R, theta = f + g, nu = h."""
    eta = d.G / d.L
    e = math.sqrt(max(0.0, 1.0 - eta * eta))
    a = d.L * d.L / mu
    u = _kernels.kepler_u(d.ell, e)
    su, cu = math.sin(u), math.cos(u)
    ome = 1.0 - e * cu
    r = a * ome
    R = d.L * e * su / r
    f = 2.0 * math.atan2(math.sqrt(1.0 + e) * math.sin(0.5 * u),
                         math.sqrt(1.0 - e) * math.cos(0.5 * u))
    return PolarNodalState(r=r, theta=_kernels.wrap_pi(f + d.g), nu=_kernels.wrap_pi(d.h),
                           R=R, Theta=d.G, N=d.H)


def polar_to_delaunay(pn: PolarNodalState, mu: float) -> DelaunayState:
    """Inverse map via the eccentricity-vector projections.

    For circular (equatorial) states the anomaly (node) split is the
    standard convention f = 0 (h = nu), leaving the sums f + g and g + h
    well defined.
    """
    v2 = pn.R * pn.R + (pn.Theta / pn.r) ** 2
    ainv = 2.0 / pn.r - v2 / mu
    if ainv <= 0.0:
        raise NonEllipticStateError("state is not elliptic (non-negative energy)")
    a = 1.0 / ainv
    p = pn.Theta * pn.Theta / mu
    kappa = p / pn.r - 1.0
    sigma = p * pn.R / pn.Theta
    e, eta, f, u, ell, phi = _kernels.anomaly_block(kappa, sigma)
    if e >= 1.0:
        raise NonEllipticStateError(f"state is not elliptic (e = {e})")
    return DelaunayState(ell=_kernels.wrap_pi(ell), g=_kernels.wrap_pi(pn.theta - f),
                         h=_kernels.wrap_pi(pn.nu), L=math.sqrt(mu * a), G=pn.Theta, H=pn.N)
