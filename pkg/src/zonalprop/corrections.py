"""Correction-set container and application.

A CorrectionSet holds the six additive deltas of one periodic stage in
either the polar-nodal or the nonsingular layout, tagged with the
orientation it was evaluated for: 'direct' sets are evaluated at the mean
(primed) state and added; 'inverse' sets are evaluated at the osculating
(original) state and subtracted.  The delta of N is identically zero in
every formulation, so the nonsingular layout simply carries N through.
"""

from dataclasses import dataclass, replace

from .states import NonsingularState, PolarNodalState

POLAR_LAYOUT = "polar-nodal"
NONSINGULAR_LAYOUT = "nonsingular"

DIRECT = "direct"
INVERSE = "inverse"


@dataclass(frozen=True)
class CorrectionSet:
    """Six additive deltas in state-field order.

    polar-nodal layout:  (dr, dtheta, dnu, dR, dTheta, dN) with dN = 0
    nonsingular layout:  (dpsi, dxi, dchi, dr, dR, dTheta)
    """

    layout: str
    orientation: str
    deltas: tuple[float, float, float, float, float, float]

    def __post_init__(self):
        if self.layout not in (POLAR_LAYOUT, NONSINGULAR_LAYOUT):
            raise ValueError(f"unknown layout {self.layout!r}")
        if self.orientation not in (DIRECT, INVERSE):
            raise ValueError(f"unknown orientation {self.orientation!r}")


def apply_correction(state, corr: CorrectionSet, direction: str | None = None):
    """Apply a correction set to a matching state.

    direction defaults to the set's own orientation; passing a conflicting
    direction is an error, since the deltas were evaluated at arguments
    appropriate to one orientation only.
    """
    if direction is None:
        direction = corr.orientation
    if direction != corr.orientation:
        raise ValueError(f"correction was evaluated for {corr.orientation!r} "
                         f"application, not {direction!r}")
    sign = 1.0 if direction == DIRECT else -1.0
    d = corr.deltas
    if isinstance(state, PolarNodalState):
        if corr.layout != POLAR_LAYOUT:
            raise ValueError("layout mismatch: polar-nodal state needs a polar-nodal set")
        return PolarNodalState(
            r=state.r + sign * d[0],
            theta=state.theta + sign * d[1],
            nu=state.nu + sign * d[2],
            R=state.R + sign * d[3],
            Theta=state.Theta + sign * d[4],
            N=state.N + sign * d[5],
        )
    if isinstance(state, NonsingularState):
        if corr.layout != NONSINGULAR_LAYOUT:
            raise ValueError("layout mismatch: nonsingular state needs a nonsingular set")
        return replace(
            state,
            psi=state.psi + sign * d[0],
            xi=state.xi + sign * d[1],
            chi=state.chi + sign * d[2],
            r=state.r + sign * d[3],
            R=state.R + sign * d[4],
            Theta=state.Theta + sign * d[5],
        )
    raise ValueError(f"unsupported state type {type(state).__name__}")
