"""Classic Delaunay-element correction series.

The first-order periodic corrections expressed directly on the Delaunay
elements, as trigonometric series in the arguments k*f + 2*m*g (k = 0..5,
m = -1, 0, 1) plus equation-of-center terms.  This is the traditional
formulation the nonsingular path is benchmarked against: it needs many more
transcendental evaluations per call and is singular for circular orbits
(1/e coefficients) and for equatorial orbits once the node corrections are
consumed downstream.

The series are validated in the tests against finite-difference Poisson
brackets of the Delaunay-form generating functions.
"""

from . import _kernels
from .gravity import GravityField
from .longperiod import critical_inclination_guard
from .states import DelaunayState


def delaunay_short_period(d: DelaunayState, field: GravityField) -> tuple:
    """Short-period deltas (dl, dg, dh, dL, dG, dH) on the Delaunay elements."""
    return _kernels.delaunay_short_series(d.ell, d.g, d.L, d.G, d.H,
                                          field.mu, field.alpha, field.c20)


def delaunay_long_period(d: DelaunayState, field: GravityField) -> tuple:
    """Long-period deltas (dl, dg, dh, 0, dG, 0) on the Delaunay elements."""
    critical_inclination_guard(d.H / d.G)
    return _kernels.delaunay_long_series(d.g, d.L, d.G, d.H,
                                         field.mu, field.alpha, field.c20, field.c30)


def mean_to_osculating_delaunay(d: DelaunayState, field: GravityField) -> DelaunayState:
    """Classic direct transformation: long-period series at the double-prime
    elements, then short-period series at the prime elements."""
    dl = delaunay_long_period(d, field)
    prime = DelaunayState(ell=d.ell + dl[0], g=d.g + dl[1], h=d.h + dl[2],
                          L=d.L + dl[3], G=d.G + dl[4], H=d.H + dl[5])
    ds = delaunay_short_period(prime, field)
    return DelaunayState(ell=prime.ell + ds[0], g=prime.g + ds[1], h=prime.h + ds[2],
                         L=prime.L + ds[3], G=prime.G + ds[4], H=prime.H + ds[5])
