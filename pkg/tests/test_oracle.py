import math
from fractions import Fraction

import numpy as np
import pytest

from grasshopper.circle_core import ZERO
from grasshopper.oracle import (
    OrbitColouring,
    direction_sweep_fraction,
    exhaustive_orbit_max,
)
from grasshopper.sphere_geom import CapSpec, SpherePoint


class TestExhaustiveOrbitMax:
    @pytest.mark.parametrize("p,q", [(1, 4), (1, 2), (1, 3), (3, 8), (5, 8), (3, 7)])
    def test_bound_attained_exactly(self, p, q):
        best, arg = exhaustive_orbit_max(p, q)
        assert best == Fraction(q - 1, q)
        assert isinstance(arg, OrbitColouring)

    def test_small_q_all_odd_p(self):
        for q in range(1, 9):
            for p in range(1, 2 * q, 2):
                if math.gcd(p, q) == 1:
                    best, _ = exhaustive_orbit_max(p, q)
                    assert best == Fraction(q - 1, q), (p, q)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            exhaustive_orbit_max(2, 5)
        with pytest.raises(ValueError):
            exhaustive_orbit_max(1, 25)
        with pytest.raises(ValueError):
            exhaustive_orbit_max(3, 9)

    def test_colouring_validation(self):
        with pytest.raises(ValueError):
            OrbitColouring(q=3, bits=(0, 1))
        with pytest.raises(ValueError):
            OrbitColouring(q=2, bits=(0, 2))


class TestDirectionSweep:
    def test_whole_sphere(self):
        frac = direction_sweep_fraction(
            SpherePoint(0.3, 0.1), 0.9, lambda t, d: np.ones_like(t, dtype=bool), 10**3
        )
        assert frac == 1.0

    def test_southern_hemisphere_from_equator(self):
        frac = direction_sweep_fraction(
            SpherePoint(1.0, 0.0), 0.05, lambda t, d: d < 0, 10**4
        )
        assert abs(frac - 0.5) <= 2.0 / 10**4

    def test_adjacent_cap_cross_module(self):
        from grasshopper.sphere_geom import beta_sum

        phi, r = math.pi / 3, 1e-3
        cap = CapSpec(0.0, r, 1.0, "cap")
        u, v = 0.3 * r, 0.4 * r
        point = SpherePoint(-phi + u, v)
        frac = direction_sweep_fraction(point, phi, cap, 10**6)
        assert 2 * math.pi * frac == pytest.approx(beta_sum(u, v, phi, cap), abs=1e-4)

    def test_refinement_converges(self):
        point = SpherePoint(0.2, -0.3)
        target = CapSpec(0.9, 0.05, 1.0, "cap")
        fracs = [
            direction_sweep_fraction(point, 0.9 - 0.3 + 0.02, target, n)
            for n in (10**3, 10**4, 10**5, 10**6)
        ]
        diffs = [abs(a - b) for a, b in zip(fracs, fracs[1:])]
        assert diffs[0] >= diffs[-1]

    def test_grid_too_coarse_rejected(self):
        with pytest.raises(ValueError):
            direction_sweep_fraction(SpherePoint(0, 0), 1.0, lambda t, d: d < 0, 100)
