"""Scalar kernels for the analytic zonal theory.

Everything here is plain float math so the functions can be compiled with
numba (see ``_jit``) or run as-is.  Angle-valued outputs follow one rule:
the true and eccentric anomalies are kept on matching branches so the
equation of the center never jumps by 2*pi.

The periodic-correction kernels evaluate the first-order generating-function
brackets in closed form; the polar-nodal and nonsingular variants of the same
correction agree identically (same generating function, chain-rule mapping),
which the test suite enforces against finite-difference Poisson brackets.
"""

from math import atan2, cos, floor, hypot, pi, sin, sqrt

from ._jit import kernel

TWO_PI = 2.0 * pi


@kernel
def wrap_pi(x):
    """Reduce an angle to (-pi, pi]."""
    y = x - TWO_PI * floor((x + pi) / TWO_PI)
    if y <= -pi:
        y = pi
    return y


@kernel
def kepler_u(ell, e):
    """Solve u - e*sin(u) = ell for the eccentric anomaly.

    Newton from u0 = ell + e*sin(ell); bisection fallback keeps the residual
    below 5e-15 rad for any e < 1.  ``ell`` is reduced to (-pi, pi] first and
    the returned u stays on the same branch (|u - ell| <= e).
    """
    ell = wrap_pi(ell)
    u = ell + e * sin(ell)
    converged = False
    for _ in range(25):
        f = u - e * sin(u) - ell
        if abs(f) < 5e-15:
            converged = True
            break
        u -= f / (1.0 - e * cos(u))
    if not converged and abs(u - e * sin(u) - ell) >= 5e-15:
        lo = ell - e
        hi = ell + e
        for _ in range(110):
            mid = 0.5 * (lo + hi)
            if mid - e * sin(mid) - ell > 0.0:
                hi = mid
            else:
                lo = mid
        u = 0.5 * (lo + hi)
        for _ in range(2):
            u -= (u - e * sin(u) - ell) / (1.0 - e * cos(u))
    return u


@kernel
def anomaly_block(kappa, sigma):
    """(e, eta, f, u, ell, phi) from the eccentricity-vector projections.

    f and u share a branch in (-pi, pi]; phi = f - ell is the equation of
    the center.  Below e = 1e-12 the orbit is treated as exactly circular.
    """
    e = hypot(kappa, sigma)
    if e < 1e-12:
        return 0.0, 1.0, 0.0, 0.0, 0.0, 0.0
    eta = sqrt(1.0 - e * e)
    f = atan2(sigma, kappa)
    u = 2.0 * atan2(sqrt(1.0 - e) * sin(0.5 * f), sqrt(1.0 + e) * cos(0.5 * f))
    su = sin(u)
    ell = u - e * su
    phi = (f - u) + e * su
    return e, eta, f, u, ell, phi


# ---------------------------------------------------------------------------
# short-period corrections (J2 generating function)
# ---------------------------------------------------------------------------

@kernel
def short_polar(r, theta, R, Theta, N, mu, alpha, c20):
    """Polar-nodal short-period deltas (dr, dtheta, dnu, dR, dTheta, dN)."""
    p = Theta * Theta / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    kappa = p / r - 1.0
    sigma = p * R / Theta
    e, eta, f, u, ell, phi = anomaly_block(kappa, sigma)
    c = N / Theta
    s2 = 1.0 - c * c
    c2t = cos(2.0 * theta)
    s2t = sin(2.0 * theta)
    opk = 1.0 + kappa
    ope = 1.0 + eta
    dr = eps2 * p * ((2.0 - 3.0 * s2) * (kappa / ope + 2.0 * eta / opk + 1.0) - s2 * c2t)
    dth = eps2 * (-3.0 * (4.0 - 5.0 * s2) * phi
                  + (3.0 - 3.5 * s2 + (4.0 - 6.0 * s2) * kappa) * s2t
                  - 2.0 * sigma * (5.0 - 6.0 * s2
                                   + (2.0 + kappa) / ope * (1.0 - 1.5 * s2)
                                   + (1.0 - 2.0 * s2) * c2t))
    dnu = eps2 * c * (6.0 * phi - (3.0 + 4.0 * kappa) * s2t + 2.0 * sigma * (3.0 + c2t))
    dR = eps2 * (Theta / p) * (2.0 * opk * opk * s2 * s2t
                               - (2.0 - 3.0 * s2) * sigma * (eta + opk * opk / ope))
    dTh = -eps2 * Theta * s2 * ((3.0 + 4.0 * kappa) * c2t + 2.0 * sigma * s2t)
    return dr, dth, dnu, dR, dTh, 0.0


@kernel
def short_ns(xi, chi, r, R, Theta, mu, alpha, c20):
    """Nonsingular short-period deltas (dpsi, dxi, dchi, dr, dR, dTheta).

    c is recovered as +sqrt(1 - xi^2 - chi^2); in the retrograde chart the
    state components are already the mirrored (|c|) ones.
    """
    p = Theta * Theta / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    kappa = p / r - 1.0
    sigma = p * R / Theta
    e, eta, f, u, ell, phi = anomaly_block(kappa, sigma)
    s2 = xi * xi + chi * chi
    c = sqrt(max(0.0, 1.0 - s2))
    c2 = c * c
    opk = 1.0 + kappa
    ope = 1.0 + eta
    w1 = (2.0 + kappa) / ope
    dpsi = eps2 * ((3.0 + 6.0 * c - 15.0 * c2) * phi
                   + sigma * (2.0 + 6.0 * c - 12.0 * c2 + (1.0 - 3.0 * c2) * w1
                              + (2.0 + 4.0 * c) / (1.0 + c) * (chi * chi - xi * xi))
                   - (1.0 + 7.0 * c + 4.0 * (1.0 + 3.0 * c) * kappa) / (1.0 + c) * xi * chi)
    dxi = eps2 * (sigma * (4.0 * chi * chi - 12.0 * c2 + (1.0 - 3.0 * c2) * w1) * chi
                  - ((1.0 + 4.0 * kappa) * chi * chi - (3.0 + 4.0 * kappa) * c2) * xi
                  + 3.0 * (1.0 - 5.0 * c2) * phi * chi)
    dchi = -eps2 * (sigma * (4.0 * chi * chi - 8.0 * c2 + (1.0 - 3.0 * c2) * w1) * xi
                    - ((1.0 + 4.0 * kappa) * xi * xi - (3.0 + 4.0 * kappa) * c2) * chi
                    + 3.0 * (1.0 - 5.0 * c2) * phi * xi)
    dr = eps2 * p * (xi * xi - chi * chi
                     + (1.0 + kappa / ope + 2.0 * eta / opk) * (2.0 - 3.0 * s2))
    dR = eps2 * (Theta / p) * (4.0 * opk * opk * xi * chi
                               - sigma * (eta + opk * opk / ope) * (2.0 - 3.0 * s2))
    dTh = eps2 * Theta * ((3.0 + 4.0 * kappa) * (xi * xi - chi * chi) - 4.0 * sigma * xi * chi)
    return dpsi, dxi, dchi, dr, dR, dTh


@kernel
def short_ns_low(xi, chi, r, R, Theta, mu, alpha, c20):
    """Low-inclination limit of the nonsingular short-period deltas."""
    p = Theta * Theta / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    kappa = p / r - 1.0
    sigma = p * R / Theta
    e, eta, f, u, ell, phi = anomaly_block(kappa, sigma)
    opk = 1.0 + kappa
    ope = 1.0 + eta
    w1 = (2.0 + kappa) / ope
    dpsi = -2.0 * eps2 * (3.0 * phi + (2.0 + w1) * sigma)
    dxi = eps2 * ((3.0 + 4.0 * kappa) * xi - 2.0 * (6.0 + w1) * sigma * chi - 12.0 * phi * chi)
    dchi = -eps2 * ((3.0 + 4.0 * kappa) * chi - 2.0 * (4.0 + w1) * sigma * xi - 12.0 * phi * xi)
    dr = 2.0 * eps2 * p * (1.0 + kappa / ope + 2.0 * eta / opk)
    dR = -2.0 * eps2 * (Theta / p) * sigma * (eta + opk * opk / ope)
    return dpsi, dxi, dchi, dr, dR, 0.0


# ---------------------------------------------------------------------------
# long-period corrections (J2^2 / J3 generating function)
# ---------------------------------------------------------------------------

@kernel
def long_polar(r, theta, R, Theta, N, mu, alpha, c20, c30):
    """Polar-nodal long-period deltas; requires sin(I) > 0 and a non-critical
    inclination (both enforced by the caller)."""
    p = Theta * Theta / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    eps3 = 0.0 if c30 == 0.0 else 0.5 * (alpha / p) * (c30 / c20)
    kappa = p / r - 1.0
    sigma = p * R / Theta
    c = N / Theta
    c2 = c * c
    s2 = 1.0 - c2
    s = sqrt(s2)
    g = 1.0 - 5.0 * c2
    q0 = (1.0 - 15.0 * c2) * g
    q1 = 0.25 * (1.0 - 43.0 * c2 + 155.0 * c2 * c2 - 225.0 * c2 * c2 * c2)
    q2 = s2 * q0
    q3 = 0.25 * (1.0 + c2 + 35.0 * c2 * c2 + 75.0 * c2 * c2 * c2)
    q5 = c2 * (11.0 - 30.0 * c2 + 75.0 * c2 * c2)
    q6 = c * (11.0 - 30.0 * c2 + 75.0 * c2 * c2)
    w = (1.0 - 15.0 * c2) / (4.0 * g)
    c2t = cos(2.0 * theta)
    s2t = sin(2.0 * theta)
    ct = cos(theta)
    st = sin(theta)
    opk = 1.0 + kappa
    dr = p * (eps2 * s2 * w * (kappa * c2t + sigma * s2t) + eps3 * s * st)
    dth = (eps2 / (2.0 * g * g) * ((q2 + q5 * kappa) * sigma * c2t
                                   - (q1 * sigma * sigma + q2 * kappa + q3 * kappa * kappa) * s2t)
           + eps3 * ((kappa / s + 2.0 * s) * ct + (1.0 / s - s) * sigma * st))
    dnu = (eps2 * q6 / (4.0 * g * g) * ((kappa * kappa - sigma * sigma) * s2t
                                        - 2.0 * kappa * sigma * c2t)
           - eps3 * (c / s) * (kappa * ct + sigma * st))
    dR = (Theta / p) * opk * opk * (eps2 * w * s2 * (sigma * c2t - kappa * s2t) + eps3 * s * ct)
    dTh = (Theta * eps2 * w * s2 * ((kappa * kappa - sigma * sigma) * c2t
                                    + 2.0 * kappa * sigma * s2t)
           + Theta * eps3 * s * (kappa * st - sigma * ct))
    return dr, dth, dnu, dR, dTh, 0.0


@kernel
def long_ns(xi, chi, r, R, Theta, mu, alpha, c20, c30):
    """Nonsingular long-period deltas (dpsi, dxi, dchi, dr, dR, dTheta).

    Regular down to the equator; the only exclusion is the critical
    inclination (enforced by the caller).
    """
    p = Theta * Theta / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    eps3 = 0.0 if c30 == 0.0 else 0.5 * (alpha / p) * (c30 / c20)
    kappa = p / r - 1.0
    sigma = p * R / Theta
    s2 = xi * xi + chi * chi
    c = sqrt(max(0.0, 1.0 - s2))
    c2 = c * c
    g = 1.0 - 5.0 * c2
    g2 = g * g
    q0 = (1.0 - 15.0 * c2) * g
    q2 = s2 * q0
    q6 = c * (11.0 - 30.0 * c2 + 75.0 * c2 * c2)
    q7 = 0.25 * (1.0 + 3.0 * c2 - 5.0 * c2 * c2 + 225.0 * c2 * c2 * c2)
    q8 = 0.25 * (1.0 - 45.0 * c2 + 195.0 * c2 * c2 - 375.0 * c2 * c2 * c2)
    q9 = 0.25 * (1.0 + 75.0 * c2 * c2)
    q10 = 0.25 * (1.0 - 40.0 * c2 + 75.0 * c2 * c2)
    q11 = 2.0 * c2 * (6.0 - 25.0 * c2 + 75.0 * c2 * c2)
    q12 = 10.0 * c2
    q13 = q0 * (1.0 + c)
    q14 = 0.25 * (1.0 - c) * (1.0 - 20.0 * c - 40.0 * c2 + 75.0 * c2 * c2)
    q15 = 0.25 * (1.0 + 23.0 * c - 20.0 * c2 - 80.0 * c * c2
                  + 75.0 * c2 * c2 + 225.0 * c * c2 * c2)
    p1 = q2 * kappa + q7 * kappa * kappa + q8 * sigma * sigma
    p2 = q0 * kappa + q9 * kappa * kappa + q10 * sigma * sigma
    p3 = q2 + q11 * kappa
    p4 = q0 + q12 * kappa
    w = (1.0 - 15.0 * c2) / (4.0 * g)
    xi2 = xi * xi
    chi2 = chi * chi
    opk = 1.0 + kappa
    dpsi = (1.0 / (1.0 + c)) * (
        -eps2 / (2.0 * g2) * (2.0 * xi * chi * (q13 * kappa + q14 * kappa * kappa
                                                + q15 * sigma * sigma)
                              - sigma * (chi2 - xi2) * (q13 - q6 * kappa))
        + eps3 * ((2.0 + 2.0 * c + kappa) * chi - c * sigma * xi))
    dxi = (-eps2 / (4.0 * g2) * (p1 * xi + p2 * (3.0 * chi2 - xi2) * xi
                                 - p3 * sigma * chi - p4 * sigma * (chi2 - 3.0 * xi2) * chi)
           + 0.5 * eps3 * (2.0 * s2 + (1.0 + c2) * kappa + (2.0 + kappa) * (chi2 - xi2)))
    dchi = (eps2 / (4.0 * g2) * (p1 * chi + p2 * (3.0 * xi2 - chi2) * chi
                                 + p3 * sigma * xi + p4 * sigma * (xi2 - 3.0 * chi2) * xi)
            - eps3 * (c2 * sigma + (2.0 + kappa) * chi * xi))
    dr = p * (eps2 * w * (2.0 * sigma * xi * chi - kappa * (xi2 - chi2)) + eps3 * xi)
    dR = (Theta / p) * opk * opk * (-eps2 * w * (2.0 * kappa * xi * chi
                                                 + sigma * (xi2 - chi2)) + eps3 * chi)
    dTh = Theta * (eps2 * w * ((kappa * kappa - sigma * sigma) * (chi2 - xi2)
                               + 4.0 * kappa * sigma * chi * xi)
                   + eps3 * (kappa * xi - sigma * chi))
    return dpsi, dxi, dchi, dr, dR, dTh


@kernel
def long_ns_low(xi, chi, r, R, Theta, mu, alpha, c20, c30):
    """Low-inclination limit of the nonsingular long-period deltas."""
    p = Theta * Theta / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    eps3 = 0.0 if c30 == 0.0 else 0.5 * (alpha / p) * (c30 / c20)
    kappa = p / r - 1.0
    sigma = p * R / Theta
    k2s2 = kappa * kappa - sigma * sigma
    opk = 1.0 + kappa
    dpsi = 0.5 * eps3 * (chi * (4.0 + kappa) - xi * sigma)
    dxi = 0.875 * eps2 * (2.0 * kappa * sigma * chi - k2s2 * xi) + eps3 * kappa
    dchi = 0.875 * eps2 * (k2s2 * chi + 2.0 * kappa * sigma * xi) - eps3 * sigma
    dr = eps3 * xi * p
    dR = eps3 * opk * opk * chi * Theta / p
    dTh = eps3 * (kappa * xi - sigma * chi) * Theta
    return dpsi, dxi, dchi, dr, dR, dTh


# ---------------------------------------------------------------------------
# state transformations
# ---------------------------------------------------------------------------

@kernel
def ns_to_cart(psi, xi, chi, r, R, Theta, N, retro):
    """Nonsingular state to Cartesian; c = N/Theta per the carried integral.

    In the retrograde chart the rotation factors use |c| and the y components
    of the result change sign.  States coming out of the periodic corrections
    can sit off the xi^2 + chi^2 = 1 - c^2 shell by a second-order amount;
    (xi, chi) are projected back onto the shell of the carried N, which keeps
    the output's polar angular momentum exactly equal to the integral.
    """
    cabs = abs(N) / Theta
    if cabs > 1.0:
        cabs = 1.0
    s2_shell = 1.0 - cabs * cabs
    s2_state = xi * xi + chi * chi
    if s2_state > 0.0:
        scale = sqrt(s2_shell / s2_state)
        xi = xi * scale
        chi = chi * scale
    opc = 1.0 + cabs
    t = 1.0 - xi * xi / opc
    tau = 1.0 - chi * chi / opc
    q = xi * chi / opc
    cp = cos(psi)
    sp = sin(psi)
    x = r * (t * cp + q * sp)
    y = r * (t * sp - q * cp)
    z = r * xi
    vx = R * (t * cp + q * sp) - (Theta / r) * (q * cp + tau * sp)
    vy = R * (t * sp - q * cp) - (Theta / r) * (q * sp - tau * cp)
    vz = R * xi + (Theta / r) * chi
    if retro:
        y = -y
        vy = -vy
    return x, y, z, vx, vy, vz


@kernel
def cart_to_ns(x, y, z, vx, vy, vz):
    """Cartesian to nonsingular; returns (psi, xi, chi, r, R, Theta, N, retro).

    The chart is picked by the sign of N: prograde for N >= 0, otherwise the
    retrograde (psi* = theta - nu) chart, realised by mirroring y.
    """
    r = sqrt(x * x + y * y + z * z)
    R = (x * vx + y * vy + z * vz) / r
    N = x * vy - y * vx
    hx = y * vz - z * vy
    hy = z * vx - x * vz
    Theta = sqrt(hx * hx + hy * hy + N * N)
    xi = z / r
    chi = (r * vz - z * R) / Theta
    retro = N < 0.0
    ym = -y if retro else y
    cabs = abs(N) / Theta
    if cabs > 1.0:
        cabs = 1.0
    opc = 1.0 + cabs
    t = 1.0 - xi * xi / opc
    tau = 1.0 - chi * chi / opc
    q = xi * chi / opc
    den = (t * t + q * q) * r
    sp = (x * q + ym * t) / den
    cp = (x * t - ym * q) / den
    psi = atan2(sp, cp)
    return psi, xi, chi, r, R, Theta, N, retro


# ---------------------------------------------------------------------------
# mean-to-osculating pipeline
# ---------------------------------------------------------------------------

FORM_NONSINGULAR = 0
FORM_LOW_INCLINATION = 1
FORM_POLAR_NODAL = 2


@kernel
def reconstruct_and_correct(ell, g, h, L, G, H, retro, mu, alpha, c20, c30,
                            formulation, with_long, with_short):
    """Mean Delaunay elements -> osculating Cartesian state.

    Kepler solve, direct long-period correction at the double-prime state,
    direct short-period correction at the prime state, then the rotation-free
    Cartesian map.  ``retro`` selects the psi* chart (it matches sign(H)).
    """
    eta = G / L
    e2 = 1.0 - eta * eta
    e = sqrt(e2) if e2 > 0.0 else 0.0
    a = L * L / mu
    u = kepler_u(ell, e)
    su = sin(u)
    cu = cos(u)
    ome = 1.0 - e * cu
    r0 = a * ome
    R0 = L * e * su / r0
    f = 2.0 * atan2(sqrt(1.0 + e) * sin(0.5 * u), sqrt(1.0 - e) * cos(0.5 * u))
    theta0 = f + g
    psi0 = theta0 - h if retro else theta0 + h
    cth = H / G
    sm2 = 1.0 - cth * cth
    sm = sqrt(sm2) if sm2 > 0.0 else 0.0
    Th0 = G

    if formulation == FORM_POLAR_NODAL:
        nu0 = h
        r1, th1, nu1, R1, Th1 = r0, theta0, nu0, R0, Th0
        if with_long:
            dr, dth, dnu, dR, dTh, dN = long_polar(r0, theta0, R0, Th0, H, mu, alpha, c20, c30)
            r1 = r0 + dr
            th1 = theta0 + dth
            nu1 = nu0 + dnu
            R1 = R0 + dR
            Th1 = Th0 + dTh
        r2, th2, nu2, R2, Th2 = r1, th1, nu1, R1, Th1
        if with_short:
            dr, dth, dnu, dR, dTh, dN = short_polar(r1, th1, R1, Th1, H, mu, alpha, c20)
            r2 = r1 + dr
            th2 = th1 + dth
            nu2 = nu1 + dnu
            R2 = R1 + dR
            Th2 = Th1 + dTh
        c2q = H / Th2
        s2q = 1.0 - c2q * c2q
        sosc = sqrt(s2q) if s2q > 0.0 else 0.0
        xi2 = sosc * sin(th2)
        chi2 = sosc * cos(th2)
        psi2 = th2 - nu2 if retro else th2 + nu2
        return ns_to_cart(psi2, xi2, chi2, r2, R2, Th2, H, retro)

    xi0 = sm * sin(theta0)
    chi0 = sm * cos(theta0)
    psi1, xi1, chi1, r1, R1, Th1 = psi0, xi0, chi0, r0, R0, Th0
    if with_long:
        if formulation == FORM_LOW_INCLINATION:
            dpsi, dxi, dchi, dr, dR, dTh = long_ns_low(xi0, chi0, r0, R0, Th0,
                                                       mu, alpha, c20, c30)
        else:
            dpsi, dxi, dchi, dr, dR, dTh = long_ns(xi0, chi0, r0, R0, Th0,
                                                   mu, alpha, c20, c30)
        psi1 = psi0 + dpsi
        xi1 = xi0 + dxi
        chi1 = chi0 + dchi
        r1 = r0 + dr
        R1 = R0 + dR
        Th1 = Th0 + dTh
    psi2, xi2, chi2, r2, R2, Th2 = psi1, xi1, chi1, r1, R1, Th1
    if with_short:
        if formulation == FORM_LOW_INCLINATION:
            dpsi, dxi, dchi, dr, dR, dTh = short_ns_low(xi1, chi1, r1, R1, Th1,
                                                        mu, alpha, c20)
        else:
            dpsi, dxi, dchi, dr, dR, dTh = short_ns(xi1, chi1, r1, R1, Th1,
                                                    mu, alpha, c20)
        psi2 = psi1 + dpsi
        xi2 = xi1 + dxi
        chi2 = chi1 + dchi
        r2 = r1 + dr
        R2 = R1 + dR
        Th2 = Th1 + dTh
    return ns_to_cart(psi2, xi2, chi2, r2, R2, Th2, H, retro)


@kernel
def ephemeris_batch(ts, t0, ell0, g0, h0, L, G, H, ldot, gdot, hdot, retro,
                    mu, alpha, c20, c30, formulation, with_long, with_short, out):
    """Fill ``out[i, :]`` with the osculating Cartesian state at ``ts[i]``."""
    n = ts.shape[0]
    for i in range(n):
        dt = ts[i] - t0
        ell = wrap_pi(ell0 + ldot * dt)
        g = wrap_pi(g0 + gdot * dt)
        h = wrap_pi(h0 + hdot * dt)
        x, y, z, vx, vy, vz = reconstruct_and_correct(
            ell, g, h, L, G, H, retro, mu, alpha, c20, c30,
            formulation, with_long, with_short)
        out[i, 0] = x
        out[i, 1] = y
        out[i, 2] = z
        out[i, 3] = vx
        out[i, 4] = vy
        out[i, 5] = vz
    return out


# ---------------------------------------------------------------------------
# classic Delaunay-variable correction series (benchmark / oracle baseline)
# ---------------------------------------------------------------------------

@kernel
def delaunay_short_series(ell, g, L, G, H, mu, alpha, c20):
    """First-order short-period corrections to the Delaunay elements.

    The classical trigonometric-series form with arguments k*f + 2*m*g
    (k = 0..5, m = -1, 0, 1) plus equation-of-center terms.  Singular for
    e -> 0 (the 1/e coefficients), which is the known limitation of this
    formulation.
    """
    eta = G / L
    e2 = 1.0 - eta * eta
    e = sqrt(e2) if e2 > 0.0 else 0.0
    c = H / G
    c2 = c * c
    s2 = 1.0 - c2
    p = G * G / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    u = kepler_u(ell, e)
    f = 2.0 * atan2(sqrt(1.0 + e) * sin(0.5 * u), sqrt(1.0 - e) * cos(0.5 * u))
    phi = (f - u) + e * sin(u)
    sf = sin(f)
    s2f = sin(2.0 * f)
    s3f = sin(3.0 * f)
    s2g = sin(2.0 * g)
    sfm = sin(f - 2.0 * g)
    sf1 = sin(f + 2.0 * g)
    sf2 = sin(2.0 * f + 2.0 * g)
    sf3 = sin(3.0 * f + 2.0 * g)
    sf4 = sin(4.0 * f + 2.0 * g)
    sf5 = sin(5.0 * f + 2.0 * g)
    cf = cos(f)
    c2f = cos(2.0 * f)
    c3f = cos(3.0 * f)
    c2g = cos(2.0 * g)
    cfm = cos(f - 2.0 * g)
    cf1 = cos(f + 2.0 * g)
    cf2 = cos(2.0 * f + 2.0 * g)
    cf3 = cos(3.0 * f + 2.0 * g)
    cf4 = cos(4.0 * f + 2.0 * g)
    cf5 = cos(5.0 * f + 2.0 * g)
    tc = 3.0 * c2 - 1.0
    eta2 = eta * eta
    dl = eps2 * eta * (
        tc * (e2 + 4.0 * eta2 + 8.0) / (4.0 * e) * sf
        + 1.5 * tc * s2f
        + 0.25 * e * tc * s3f
        - 2.25 * s2 * s2g
        + 0.375 * e * s2 * sfm
        - s2 * (e2 - 4.0 * eta2 + 8.0) / (8.0 * e) * 3.0 * sf1
        + s2 * (3.0 * e2 + 4.0 * eta2 + 24.0) / (8.0 * e) * sf3
        + 2.25 * s2 * sf4
        + 0.375 * e * s2 * sf5)
    dg = eps2 * (
        3.0 * (1.0 - 5.0 * c2) * phi
        - (63.0 * c2 * e2 + 12.0 * c2 * eta2 + 24.0 * c2
           - 13.0 * e2 - 4.0 * eta2 - 8.0) / (4.0 * e) * sf
        - 1.5 * tc * s2f
        - 0.25 * e * tc * s3f
        + 2.25 * s2 * s2g
        - 0.375 * e * s2 * sfm
        + 3.0 * (19.0 * c2 * e2 + 4.0 * c2 * eta2 - 8.0 * c2
                 - 11.0 * e2 - 4.0 * eta2 + 8.0) / (8.0 * e) * sf1
        + 1.5 * (5.0 * c2 - 3.0) * sf2
        + (23.0 * c2 * e2 + 4.0 * c2 * eta2 + 24.0 * c2
           - 15.0 * e2 - 4.0 * eta2 - 24.0) / (8.0 * e) * sf3
        - 2.25 * s2 * sf4
        - 0.375 * e * s2 * sf5)
    dh = eps2 * c * (6.0 * phi + 6.0 * e * sf - 3.0 * e * sf1 - 3.0 * sf2 - e * sf3)
    dLL = G * eps2 / (2.0 * eta * eta2) * (
        (-9.0 * c2 * e2 - 6.0 * c2 + 3.0 * e2 + eta * eta2 * (6.0 * c2 - 2.0) + 2.0)
        - 1.5 * e * tc * (e2 + 4.0) * cf
        - 3.0 * e2 * tc * c2f
        - 0.5 * e * e2 * tc * c3f
        - 4.5 * e2 * s2 * c2g
        - 0.75 * e * e2 * s2 * cfm
        - 2.25 * e * s2 * (e2 + 4.0) * cf1
        - 3.0 * s2 * (3.0 * e2 + 2.0) * cf2
        - 2.25 * e * s2 * (e2 + 4.0) * cf3
        - 4.5 * e2 * s2 * cf4
        - 0.75 * e * e2 * s2 * cf5)
    dGG = -G * eps2 * s2 * (3.0 * e * cf1 + 3.0 * cf2 + e * cf3)
    return dl, dg, dh, dLL, dGG, 0.0


@kernel
def delaunay_long_series(g, L, G, H, mu, alpha, c20, c30):
    """First-order long-period corrections to the Delaunay elements."""
    eta = G / L
    e2 = 1.0 - eta * eta
    e = sqrt(e2) if e2 > 0.0 else 0.0
    c = H / G
    c2 = c * c
    s2 = 1.0 - c2
    s = sqrt(s2)
    p = G * G / mu
    eps2 = 0.25 * c20 * (alpha / p) * (alpha / p)
    eps3 = 0.0 if c30 == 0.0 else 0.5 * (alpha / p) * (c30 / c20)
    gc = 1.0 - 5.0 * c2
    w = (1.0 - 15.0 * c2) / gc
    q1 = 0.25 * (1.0 - 43.0 * c2 + 155.0 * c2 * c2 - 225.0 * c2 * c2 * c2)
    q6 = c * (11.0 - 30.0 * c2 + 75.0 * c2 * c2)
    qg = 375.0 * c2 * c2 * c2 - 345.0 * c2 * c2 + 85.0 * c2 - 3.0
    sg = sin(g)
    cg = cos(g)
    s2g = sin(2.0 * g)
    c2g = cos(2.0 * g)
    eta2 = eta * eta
    dl = eta * eta2 * (-0.25 * eps2 * w * s2 * s2g + eps3 * s * cg / e)
    dg = (-eps2 * (4.0 * q1 * eta2 + qg) * s2g / (8.0 * gc * gc)
          + eps3 * ((2.0 * c2 - 1.0) * e2 - eta2 * s2) * cg / (e * s))
    dh = eps2 * q6 * e2 * s2g / (4.0 * gc * gc) - eps3 * (c / s) * e * cg
    dGG = G * (0.25 * eps2 * w * s2 * e2 * c2g + eps3 * s * e * sg)
    return dl, dg, dh, 0.0, dGG, 0.0
