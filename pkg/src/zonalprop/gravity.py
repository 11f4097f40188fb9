"""Gravity-field constants, perturbation small parameters, and the
inclination-polynomial tables shared by the periodic-correction formulas."""

import math
from dataclasses import dataclass, replace

from .errors import ZonalPropError


@dataclass(frozen=True)
class GravityField:
    """Axisymmetric gravity model truncated at degree 3.

    mu    -- gravitational parameter [length^3 / time^2]
    alpha -- equatorial radius of the primary [length]
    c20   -- zonal coefficient C_{2,0} = -J2 (dimensionless)
    c30   -- zonal coefficient C_{3,0} = -J3 (dimensionless)
    """

    mu: float
    alpha: float
    c20: float
    c30: float

    def __post_init__(self):
        if not (self.mu > 0.0 and math.isfinite(self.mu)):
            raise ZonalPropError(f"mu must be positive and finite, got {self.mu}")
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise ZonalPropError(f"alpha must be positive and finite, got {self.alpha}")
        if not (abs(self.c20) < 1.0 and abs(self.c30) < 1.0):
            raise ZonalPropError("zonal coefficients must satisfy |c| < 1")

    @property
    def j2(self) -> float:
        return -self.c20

    @property
    def j3(self) -> float:
        return -self.c30

    def scaled(self, j2_factor: float = 1.0, j3_factor: float = 1.0) -> "GravityField":
        """Field with the zonal coefficients multiplied (inflation studies)."""
        return replace(self, c20=self.c20 * j2_factor, c30=self.c30 * j3_factor)

    def restricted(self, model: str) -> "GravityField":
        """Field truncated to 'two-body', 'j2', or 'j2j3'."""
        if model == "two-body":
            return replace(self, c20=0.0, c30=0.0)
        if model == "j2":
            return replace(self, c30=0.0)
        if model == "j2j3":
            return self
        raise ZonalPropError(f"unknown model {model!r}")


# Published Earth constants (WGS84 GM/radius, EGM96 J2/J3), km / s units.
EARTH = GravityField(
    mu=398600.4418,
    alpha=6378.137,
    c20=-1.08262668e-3,
    c30=2.5326564853e-6,
)


@dataclass(frozen=True)
class SmallParams:
    """Perturbation small parameters for a given angular momentum.

    eps2 = C20 (alpha/p)^2 / 4, eps3 = (alpha/p)(C30/C20) / 2, p = Theta^2/mu.
    """

    eps2: float
    eps3: float
    p: float


def small_params(Theta: float, field: GravityField) -> SmallParams:
    """Small parameters of the zonal perturbation for angular momentum Theta."""
    if not (Theta > 0.0 and math.isfinite(Theta)):
        raise ZonalPropError(f"Theta must be positive and finite, got {Theta}")
    p = Theta * Theta / field.mu
    eps2 = 0.25 * field.c20 * (field.alpha / p) ** 2
    if field.c20 == 0.0:
        if field.c30 != 0.0:
            raise ZonalPropError("eps3 is undefined for c20 = 0 with c30 != 0")
        eps3 = 0.0
    else:
        eps3 = 0.5 * (field.alpha / p) * (field.c30 / field.c20)
    return SmallParams(eps2=eps2, eps3=eps3, p=p)


@dataclass(frozen=True)
class InclinationPolynomials:
    """The q_j polynomials in c = cos(I) used by the long-period corrections.

    The numbering has no q4.  q6 is stored in the deflated form
    c (11 - 30 c^2 + 75 c^4) so that q5 = c q6 holds and polar orbits
    (c = 0) stay regular.
    """

    q0: float
    q1: float
    q2: float
    q3: float
    q5: float
    q6: float
    q7: float
    q8: float
    q9: float
    q10: float
    q11: float
    q12: float
    q13: float
    q14: float
    q15: float


def q_polynomials(c: float) -> InclinationPolynomials:
    """Evaluate the inclination polynomials at c = cos(I), c in [-1, 1]."""
    c2 = c * c
    c4 = c2 * c2
    c6 = c4 * c2
    s2 = 1.0 - c2
    q0 = (1.0 - 15.0 * c2) * (1.0 - 5.0 * c2)
    return InclinationPolynomials(
        q0=q0,
        q1=0.25 * (1.0 - 43.0 * c2 + 155.0 * c4 - 225.0 * c6),
        q2=s2 * q0,
        q3=0.25 * (1.0 + c2 + 35.0 * c4 + 75.0 * c6),
        q5=c2 * (11.0 - 30.0 * c2 + 75.0 * c4),
        q6=c * (11.0 - 30.0 * c2 + 75.0 * c4),
        q7=0.25 * (1.0 + 3.0 * c2 - 5.0 * c4 + 225.0 * c6),
        q8=0.25 * (1.0 - 45.0 * c2 + 195.0 * c4 - 375.0 * c6),
        q9=0.25 * (1.0 + 75.0 * c4),
        q10=0.25 * (1.0 - 40.0 * c2 + 75.0 * c4),
        q11=2.0 * c2 * (6.0 - 25.0 * c2 + 75.0 * c4),
        q12=10.0 * c2,
        q13=q0 * (1.0 + c),
        q14=0.25 * (1.0 - c) * (1.0 - 20.0 * c - 40.0 * c2 + 75.0 * c4),
        q15=0.25 * (1.0 + 23.0 * c - 20.0 * c2 - 80.0 * c * c2 + 75.0 * c4 + 225.0 * c * c4),
    )


@dataclass(frozen=True)
class PCoefficients:
    """Combinations of q polynomials with the eccentricity projections."""

    p1: float
    p2: float
    p3: float
    p4: float


def p_coefficients(kappa: float, sigma: float, q: InclinationPolynomials) -> PCoefficients:
    """P coefficients entering the nonsingular long-period corrections."""
    k2 = kappa * kappa
    s2 = sigma * sigma
    return PCoefficients(
        p1=q.q2 * kappa + q.q7 * k2 + q.q8 * s2,
        p2=q.q0 * kappa + q.q9 * k2 + q.q10 * s2,
        p3=q.q2 + q.q11 * kappa,
        p4=q.q0 + q.q12 * kappa,
    )
