"""Spherical geometry: points, fixed-angle jumps, caps, and jump-direction angles.

Coordinates are (theta, delta) = (azimuth, elevation), elevation measured
from the equator, with cartesian embedding
(x, y, z) = (sin th cos de, cos th cos de, sin de) on the unit sphere.

The central quantities are the two bearing angles at a point P inside a cap:
beta1 bounds the directions whose jumps cross from the northern to the
southern hemisphere, and beta1 + beta2 is the arc of directions whose jumps
land inside an adjacent cap at great-circle distance phi.  Both reduce to
one-dimensional spherical trigonometry; the cap-boundary intersection is
root-found numerically because scaled caps have non-circular boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SpherePoint",
    "CapSpec",
    "InfeasibleGeometryError",
    "SphericalGeometryError",
    "NumericConvergenceError",
    "angular_distance",
    "jump",
    "jump_arrays",
    "beta1",
    "beta_sum",
    "beta_sum_arrays",
]

TWO_PI = 2.0 * math.pi

# centralized numeric tolerances
ROOT_FIND_TOL = 1e-13
DISTANCE_TOL = 1e-12
GEOMETRY_SLACK = 1e-9


class InfeasibleGeometryError(ValueError):
    """The requested configuration does not define the bearing angle."""


class SphericalGeometryError(RuntimeError):
    """An internal geometric invariant failed; indicates a configuration bug."""


class NumericConvergenceError(RuntimeError):
    """A root find or refinement failed to reach its tolerance."""


class SpherePoint:
    """Point on the unit sphere with cached cartesian coordinates."""

    __slots__ = ("theta", "delta", "xyz")

    def __init__(self, theta: float, delta: float):
        if not -math.pi / 2 - 1e-12 <= delta <= math.pi / 2 + 1e-12:
            raise ValueError("elevation must lie in [-pi/2, pi/2]")
        self.theta = float(theta) % TWO_PI
        self.delta = float(min(max(delta, -math.pi / 2), math.pi / 2))
        cd = math.cos(self.delta)
        self.xyz = (
            math.sin(self.theta) * cd,
            math.cos(self.theta) * cd,
            math.sin(self.delta),
        )

    def antipode(self) -> "SpherePoint":
        return SpherePoint(self.theta + math.pi, -self.delta)

    def __repr__(self):
        return f"SpherePoint(theta={self.theta:.6f}, delta={self.delta:.6f})"


@dataclass(frozen=True)
class CapSpec:
    """A (possibly elevation-scaled) cap or cup centred on the equator.

    A cap of radius r and scale s at azimuth c is the region of points with
    relative azimuth u and elevation v satisfying
        0 <= v <= s*r,  |u| <= r,  cos(u) * cos(v/s) >= cos(r);
    a cup is the mirror image below the equator.  Scale 0 is the empty
    region.  The width (major axis) is 2*r regardless of scale.
    """

    center_theta: float
    radius_r: float
    scale_s: float
    polarity: str = "cap"

    def __post_init__(self):
        if not 0 < self.radius_r < math.pi / 2:
            raise ValueError("cap radius must lie in (0, pi/2)")
        if not 0 <= self.scale_s <= 1:
            raise ValueError("scale must lie in [0, 1]")
        if self.polarity not in ("cap", "cup"):
            raise ValueError("polarity must be 'cap' or 'cup'")

    def antipode(self) -> "CapSpec":
        return CapSpec(
            center_theta=(self.center_theta + math.pi) % TWO_PI,
            radius_r=self.radius_r,
            scale_s=self.scale_s,
            polarity="cup" if self.polarity == "cap" else "cap",
        )

    def boundary_elevation(self, tau):
        """Elevation of the curved boundary at relative azimuth tau."""
        base = np.arccos(np.clip(np.cos(self.radius_r) / np.cos(tau), -1.0, 1.0))
        return self.scale_s * base

    def contains(self, theta, delta):
        """Vectorized membership for arrays of absolute coordinates."""
        theta = np.asarray(theta, dtype=float)
        delta = np.asarray(delta, dtype=float)
        if self.scale_s == 0.0:
            return np.zeros(theta.shape, dtype=bool)
        du = np.mod(theta - self.center_theta + math.pi, TWO_PI) - math.pi
        v = delta if self.polarity == "cap" else -delta
        ok = (v >= 0.0) & (v <= self.scale_s * self.radius_r) & (np.abs(du) <= self.radius_r)
        inside = np.zeros(theta.shape, dtype=bool)
        if np.any(ok):
            lhs = np.cos(du[ok]) * np.cos(v[ok] / self.scale_s)
            inside[ok] = lhs >= math.cos(self.radius_r)
        return inside


# -- spherical trigonometry helpers ------------------------------------------
# standard triangle relations, kept module-internal with direct unit tests


def _cos_rule(b: float, c: float, alpha: float) -> float:
    """Side a of a spherical triangle from sides b, c and included angle alpha."""
    cos_a = math.cos(b) * math.cos(c) + math.sin(b) * math.sin(c) * math.cos(alpha)
    return math.acos(min(1.0, max(-1.0, cos_a)))


def _right_hypotenuse(b: float, c: float) -> float:
    """Hypotenuse of a right spherical triangle with legs b, c."""
    return math.acos(min(1.0, max(-1.0, math.cos(b) * math.cos(c))))


def _unit(theta, delta):
    cd = np.cos(delta)
    return np.stack([np.sin(theta) * cd, np.cos(theta) * cd, np.sin(delta)], axis=-1)


def _east(theta, delta):
    z = np.zeros(np.shape(theta))
    return np.stack([np.cos(theta), -np.sin(theta), z], axis=-1)


def _north(theta, delta):
    sd = np.sin(delta)
    return np.stack([-np.sin(theta) * sd, -np.cos(theta) * sd, np.cos(delta)], axis=-1)


def angular_distance(a: SpherePoint, b: SpherePoint) -> float:
    """Great-circle distance via the clamped dot product."""
    d = sum(x * y for x, y in zip(a.xyz, b.xyz))
    return math.acos(min(1.0, max(-1.0, d)))


def jump_arrays(theta, delta, omega, phi: float):
    """Vectorized jump: bearing omega is measured from local east toward north.

    At the poles the east/north frame follows the stored azimuth; points
    constructed with theta = 0 use the zero meridian as reference.
    """
    theta = np.asarray(theta, dtype=float)
    delta = np.asarray(delta, dtype=float)
    omega = np.asarray(omega, dtype=float)
    x = _unit(theta, delta)
    tangent = _east(theta, delta) * np.cos(omega)[..., None] + _north(theta, delta) * np.sin(
        omega
    )[..., None]
    dest = x * math.cos(phi) + tangent * math.sin(phi)
    t2 = np.mod(np.arctan2(dest[..., 0], dest[..., 1]), TWO_PI)
    d2 = np.arcsin(np.clip(dest[..., 2], -1.0, 1.0))
    return t2, d2


def jump(from_point: SpherePoint, direction_omega: float, phi: float) -> SpherePoint:
    """Destination of a jump of angle phi from a point, bearing omega from east."""
    if not 0 < phi < math.pi:
        raise ValueError("jump angle must lie in (0, pi)")
    t2, d2 = jump_arrays(
        np.array([from_point.theta]),
        np.array([from_point.delta]),
        np.array([direction_omega % TWO_PI]),
        phi,
    )
    return SpherePoint(float(t2[0]), float(d2[0]))


def beta1(v: float, phi: float) -> float:
    """Bearing below east of the jump direction that exits through the equator.

    For a point at elevation v jumping phi, the right-triangle identity gives
    sin(beta1) = tan(v) * cot(phi) exactly.  The sign follows v.
    """
    if not 0 < phi < math.pi / 2:
        raise ValueError("phi must lie in (0, pi/2)")
    arg = math.tan(v) / math.tan(phi)
    if abs(arg) > 1.0 + 1e-15:
        raise InfeasibleGeometryError(
            f"no equator crossing: |tan(v) cot(phi)| = {abs(arg)} > 1"
        )
    return math.asin(min(1.0, max(-1.0, arg)))


def beta_sum_arrays(u, v, phi: float, target: CapSpec, iterations: int = 64):
    """Vectorized beta1 + beta2 for source points at cap-relative (u, v).

    The source point P sits at absolute coordinates (target_center - phi + u, v)
    per the standard adjacent-cap configuration; the returned value is the
    angular width of the set of jump directions from P that land inside the
    target region, i.e. the bearing of the boundary intersection R minus the
    bearing of the equator crossing Q.  Entries whose jump circle misses the
    target come back NaN.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    v = np.atleast_1d(np.asarray(v, dtype=float))
    if u.shape != v.shape:
        raise ValueError("u and v must have matching shapes")
    r = target.radius_r
    t_scale = target.scale_s
    if not 0 < phi < math.pi / 2:
        raise ValueError("phi must lie in (0, pi/2)")
    if t_scale == 0.0:
        return np.full(u.shape, np.nan)

    # target centre at azimuth 0; P = (-phi + u, v)
    th_p = u - phi
    p_vec = _unit(th_p, v)
    east_p = _east(th_p, v)
    north_p = _north(th_p, v)
    cos_phi = math.cos(phi)
    sin_phi = math.sin(phi)

    # equator crossing Q at azimuth x: cos(v) cos(x + phi - u) = cos(phi)
    ratio = cos_phi / np.cos(v)
    miss = ratio > 1.0
    x = np.arccos(np.clip(ratio, -1.0, 1.0)) - (phi - u)

    def boundary_dot(tau):
        # dot product of P with the boundary point at relative azimuth tau
        de = t_scale * np.arccos(np.clip(math.cos(r) / np.cos(tau), -1.0, 1.0))
        b = _unit(tau, de)
        return np.sum(p_vec * b, axis=-1)

    # bracketed bisection for R: f(tau) = cos(phi) - P.B(tau) crosses zero once
    lo = np.full(u.shape, -r)
    hi = np.full(u.shape, r)
    f_lo = cos_phi - boundary_dot(lo)
    f_hi = cos_phi - boundary_dot(hi)
    falls_short = (f_lo > 0) & (f_hi > 0)
    overshoots = (f_lo < 0) & (f_hi < 0)
    if np.any((falls_short | overshoots) & ~miss):
        # the jump circle reaches past (or not up to) both boundary ends: a
        # clean miss unless the boundary crosses the jump radius in between,
        # which would mean a double intersection
        taus = np.linspace(-r, r, 33)
        signs_neg = np.zeros(u.shape, dtype=bool)
        signs_pos = np.zeros(u.shape, dtype=bool)
        for tau in taus:
            f_mid = cos_phi - boundary_dot(np.full(u.shape, tau))
            signs_neg |= f_mid < -GEOMETRY_SLACK
            signs_pos |= f_mid > GEOMETRY_SLACK
        if np.any((falls_short | overshoots) & signs_neg & signs_pos & ~miss):
            raise NumericConvergenceError(
                "jump circle crosses the target boundary twice; "
                "uniqueness assumption violated"
            )
        miss = miss | falls_short | overshoots
    bad_bracket = (f_lo > GEOMETRY_SLACK) & (f_hi < -GEOMETRY_SLACK)
    if np.any(bad_bracket & ~miss):
        raise NumericConvergenceError(
            "boundary intersection bracket failed; uniqueness assumption violated"
        )
    valid = ~miss
    if np.any((x[valid] < -r - GEOMETRY_SLACK) | (x[valid] > u[valid] + GEOMETRY_SLACK)):
        raise SphericalGeometryError(
            "equator crossing left the target diameter: x outside [-r, u]"
        )
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        f_mid = cos_phi - boundary_dot(mid)
        take_hi = f_mid > 0
        hi = np.where(take_hi, mid, hi)
        lo = np.where(take_hi, lo, mid)
    if np.any((hi - lo) > ROOT_FIND_TOL):
        raise NumericConvergenceError("bisection failed to reach tolerance 1e-13")
    tau_star = 0.5 * (lo + hi)
    de_star = t_scale * np.arccos(np.clip(math.cos(r) / np.cos(tau_star), -1.0, 1.0))
    r_vec = _unit(tau_star, de_star)
    q_vec = _unit(x, np.zeros_like(x))

    def bearing(dest):
        d = (dest - p_vec * cos_phi) / sin_phi
        return np.arctan2(np.sum(d * north_p, axis=-1), np.sum(d * east_p, axis=-1))

    b_q = bearing(q_vec)
    b_r = bearing(r_vec)

    # internal consistency: the equator-crossing bearing equals -beta1 exactly
    expected = -np.arcsin(np.clip(np.tan(v) / math.tan(phi), -1.0, 1.0))
    if np.any(np.abs(np.where(miss, 0.0, b_q - expected)) > 1e-9):
        raise SphericalGeometryError("equator-crossing bearing disagrees with beta1")

    total = b_r - b_q
    return np.where(miss, np.nan, total)


def beta_sum(u: float, v: float, phi: float, target: CapSpec):
    """Scalar beta1 + beta2; None when the jump circle misses the target."""
    out = beta_sum_arrays(np.array([u]), np.array([v]), phi, target)
    val = float(out[0])
    return None if math.isnan(val) else val
