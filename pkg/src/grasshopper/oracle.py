"""Brute-force oracles: exhaustive orbit search and dense direction sweeps.

These validate the analytic results with zero analytic input: the orbit
search enumerates every antipodal colouring of a jump orbit and evaluates
each through the generic exact retention engine; the direction sweep counts
jump landings over a dense grid of directions on the sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .circle_core import RationalAngle, ZERO
from .circle_lawns import OrbitProfile, StepDensityLawn, orbit_retention, retention

__all__ = [
    "OrbitColouring",
    "exhaustive_orbit_max",
    "direction_sweep_fraction",
]

_MAX_ORBIT_Q = 20


@dataclass(frozen=True)
class OrbitColouring:
    """Free half of an antipodal 0/1 colouring of the 2q-cell orbit grid.

    bits[k] is cell k's membership for 0 <= k < q; cells q..2q-1 are forced
    to the complements, so the induced lawn is antipodal by construction.
    """

    q: int
    bits: tuple

    def __post_init__(self):
        if len(self.bits) != self.q:
            raise ValueError("need exactly q free bits")
        if not all(b in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @property
    def full_bits(self):
        return self.bits + tuple(1 - b for b in self.bits)

    def to_profile(self, p: int, start=ZERO) -> OrbitProfile:
        return OrbitProfile(
            p=p, q=self.q, start=start,
            densities=tuple(Fraction(b) for b in self.full_bits),
        )


def exhaustive_orbit_max(p: int, q: int):
    """Maximum retention over all antipodal colourings of the (p, q) orbit grid.

    Enumerates all 2**q colourings; each induced lawn is evaluated with the
    exact retention engine and cross-checked against the discrete orbit sum,
    validating both.  Returns (max_retention, argmax OrbitColouring).
    """
    if q < 1 or q > _MAX_ORBIT_Q:
        raise ValueError(f"q must be between 1 and {_MAX_ORBIT_Q}")
    if p % 2 == 0 or gcd(p, q) != 1:
        raise ValueError("p must be odd and coprime to q")

    step = RationalAngle.pi(p, q)
    cell_starts = [(step * k).mod_circle() for k in range(2 * q)]
    bound = Fraction(q - 1, q)
    jump = RationalAngle.pi(p, q)

    best = None
    best_colouring = None
    one, zero = Fraction(1), Fraction(0)
    for mask in range(2 ** q):
        bits = tuple((mask >> k) & 1 for k in range(q))
        full = bits + tuple(1 - b for b in bits)
        # merge_equal=False keeps the breakpoint grid identical across
        # colourings, letting the engine reuse its refinement geometry
        lawn = StepDensityLawn(
            [(cell_starts[k], one if full[k] else zero) for k in range(2 * q)],
            merge_equal=False,
        )
        value = retention(lawn, jump)
        colouring = OrbitColouring(q=q, bits=bits)
        discrete = orbit_retention(colouring.to_profile(p))
        if value != discrete:
            raise AssertionError(
                f"engine/orbit-sum mismatch for q={q}, p={p}, bits={bits}: "
                f"{value} vs {discrete}"
            )
        if best is None or value > best:
            best = value
            best_colouring = colouring
    if best > bound:
        raise AssertionError(
            f"orbit enumeration exceeded the 1 - 1/q bound: {best} > {bound}"
        )
    return best, best_colouring


def direction_sweep_fraction(from_point, phi: float, region, grid_n: int) -> float:
    """Fraction of jump directions from `from_point` that land inside `region`.

    `region` is anything with a vectorized contains(theta, delta) method (a
    CapSpec or CoggedLawn) or a callable on (theta, delta) arrays.  Converges
    to (angular measure of landing directions) / 2*pi as grid_n grows.
    """
    if grid_n < 10**3:
        raise ValueError("grid_n below 1000 is too coarse to be useful")
    from .sphere_geom import jump_arrays

    omega = (np.arange(grid_n) + 0.5) * (2.0 * math.pi / grid_n)
    theta = np.full(grid_n, from_point.theta)
    delta = np.full(grid_n, from_point.delta)
    t2, d2 = jump_arrays(theta, delta, omega, phi)
    if callable(region):
        hits = region(t2, d2)
    else:
        hits = region.contains(t2, d2)
    return float(np.count_nonzero(hits)) / grid_n
