"""First-order short-period generating function and corrections.

Three equivalent formulations of the same bracket {rho, V1}: the polar-nodal
closed forms, the full nonsingular forms, and the low-inclination limit.
All corrections consume only the projections kappa, sigma, the eccentricity
function eta, the equation of the center, and sin/cos of 2*theta, so they
are regular for circular orbits; the nonsingular forms are regular on the
equator as well.  The correction to N vanishes identically.
"""

import math

from . import _kernels
from .anomaly import equation_of_center, projections
from .corrections import DIRECT, NONSINGULAR_LAYOUT, POLAR_LAYOUT, CorrectionSet
from .gravity import GravityField, small_params
from .states import NonsingularState, PolarNodalState


def v1(pn: PolarNodalState, field: GravityField) -> float:
    """Short-period generating function in polar-nodal variables.

    Cross-representation identity: equals the Delaunay-form generating
    function at the mapped state (see oracle.u1_delaunay).
    """
    proj = projections(pn.r, pn.R, pn.Theta, field.mu)
    sp = small_params(pn.Theta, field)
    phi = equation_of_center(proj)
    c = pn.cos_inclination
    s2 = 1.0 - c * c
    return sp.eps2 * pn.Theta * (
        (2.0 - 3.0 * s2) * (phi + proj.sigma)
        + 0.5 * (3.0 + 4.0 * proj.kappa) * s2 * math.sin(2.0 * pn.theta)
        - proj.sigma * s2 * math.cos(2.0 * pn.theta))


def short_corrections_polar(pn: PolarNodalState, field: GravityField,
                            orientation: str = DIRECT) -> CorrectionSet:
    """Polar-nodal short-period deltas (dr, dtheta, dnu, dR, dTheta, 0)."""
    projections(pn.r, pn.R, pn.Theta, field.mu)  # validates ellipticity
    deltas = _kernels.short_polar(pn.r, pn.theta, pn.R, pn.Theta, pn.N,
                                  field.mu, field.alpha, field.c20)
    return CorrectionSet(layout=POLAR_LAYOUT, orientation=orientation, deltas=deltas)


def short_corrections_nonsingular(ns: NonsingularState, field: GravityField,
                                  orientation: str = DIRECT) -> CorrectionSet:
    """Full nonsingular short-period deltas (dpsi, dxi, dchi, dr, dR, dTheta).

    In the retrograde chart the components are already the mirrored ones, so
    the same formulas (with c = +sqrt(1 - s^2)) apply to both charts.
    """
    projections(ns.r, ns.R, ns.Theta, field.mu)
    deltas = _kernels.short_ns(ns.xi, ns.chi, ns.r, ns.R, ns.Theta,
                               field.mu, field.alpha, field.c20)
    return CorrectionSet(layout=NONSINGULAR_LAYOUT, orientation=orientation, deltas=deltas)


def short_corrections_low_inclination(ns: NonsingularState, field: GravityField,
                                      orientation: str = DIRECT) -> CorrectionSet:
    """Low-inclination short-period deltas; differ from the full nonsingular
    forms by O(sin^2 I).  Applicability is the caller's decision."""
    projections(ns.r, ns.R, ns.Theta, field.mu)
    deltas = _kernels.short_ns_low(ns.xi, ns.chi, ns.r, ns.R, ns.Theta,
                                   field.mu, field.alpha, field.c20)
    return CorrectionSet(layout=NONSINGULAR_LAYOUT, orientation=orientation, deltas=deltas)
