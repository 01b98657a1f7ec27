import math
from fractions import Fraction

import pytest

from grasshopper.circle_core import PI, TWO_PI, ZERO, ArcSet, RationalAngle
from grasshopper.circle_lawns import (
    OrbitProfile,
    StepDensityLawn,
    ZeroMassLawnError,
    construct_antipodal_even,
    construct_antipodal_irrational,
    construct_antipodal_odd,
    construct_general,
    construct_irrational,
    is_antipodal,
    optimal_antipodal_value,
    orbit_bound,
    orbit_retention,
    retention,
    retention_two,
    retention_csv_row,
)


def semicircle():
    return ArcSet.from_pairs([(ZERO, PI)])


class TestRetention:
    def test_full_circle_any_jump(self):
        assert retention(ArcSet.full_circle(), RationalAngle.pi(7, 13)) == 1
        assert retention(ArcSet.full_circle(), 1.234) == pytest.approx(1.0)

    def test_alternating_lawn_even_jump(self):
        assert retention(construct_antipodal_even(5), RationalAngle.pi(2, 5)) == 1

    def test_semicircle_rational(self):
        # odd numerator: exactly 1 - 1/q
        assert retention(semicircle(), RationalAngle.pi(1, 3)) == Fraction(2, 3)

    def test_semicircle_float_jump_vs_direct_overlap(self):
        # oracle: semicircle overlap with its own 0.7-rotation is pi - 0.7 on
        # each side, so retention = 1 - 0.7/pi
        expected = 1 - 0.7 / math.pi
        assert retention(semicircle(), 0.7) == pytest.approx(expected, abs=1e-12)

    def test_uniform_half_density_at_pi(self):
        lawn = StepDensityLawn.uniform(Fraction(1, 2))
        assert retention(lawn, PI) == Fraction(1, 2)

    def test_zero_mass_rejected(self):
        with pytest.raises(ZeroMassLawnError):
            retention(ArcSet.empty(), PI)

    def test_direction_symmetry(self):
        lawn = construct_antipodal_odd(3, 7)[0]
        jump = RationalAngle.pi(3, 7)
        assert retention(lawn, jump) == retention(lawn, TWO_PI - jump)

    def test_rotation_invariance(self):
        lawn = construct_antipodal_odd(1, 5)[1]
        jump = RationalAngle.pi(1, 5)
        rotated = lawn.rotate(RationalAngle.pi(3, 11))
        assert retention(lawn, jump) == retention(rotated, jump)


class TestRetentionTwo:
    def test_alternating_vs_complement(self):
        s3 = construct_antipodal_even(3)
        assert retention_two(s3, s3.complement(), RationalAngle.pi(1, 3)) == 1

    def test_equal_semicircles(self):
        assert retention_two(semicircle(), semicircle(), RationalAngle.pi(1, 4)) == Fraction(3, 4)

    def test_zero_jump_to_complement(self):
        s = construct_antipodal_even(3)
        assert retention_two(s, s.complement(), ZERO) == 0

    def test_reduces_to_one_lawn(self):
        lawn = construct_antipodal_odd(3, 8)[0]
        jump = RationalAngle.pi(3, 8)
        assert retention_two(lawn, lawn, jump) == retention(lawn, jump)

    def test_bilinear_symmetry_equal_mass(self):
        a = construct_antipodal_even(5)
        b = semicircle()
        jump = RationalAngle.pi(2, 7)
        assert retention_two(a, b, jump) == retention_two(b, a, jump)


class TestAntipodal:
    def test_semicircle(self):
        assert is_antipodal(semicircle())

    def test_alternating_lawn(self):
        assert is_antipodal(construct_antipodal_even(5))
        assert is_antipodal(construct_antipodal_even(7))

    def test_quarter_arc_not_antipodal(self):
        assert not is_antipodal(ArcSet.from_pairs([(ZERO, RationalAngle.pi(1, 2))]))

    def test_odd_constructions_antipodal(self):
        for p, q in [(1, 8), (3, 8), (5, 8), (3, 7)]:
            block, demi = construct_antipodal_odd(p, q)
            assert is_antipodal(block)
            assert is_antipodal(demi)
            assert block.measure == PI
            assert demi.measure == PI


class TestConstructGeneral:
    def test_figure_lawn(self):
        lawn = construct_general(RationalAngle.pi(1, 3), 2, 5)
        assert lawn.measure == RationalAngle.pi(1, 3)
        assert len(lawn.arcs) == 5
        assert retention(lawn, RationalAngle.pi(4, 5)) == 1

    def test_degenerate_q1(self):
        lawn = construct_general(PI, 1, 1)
        assert lawn == semicircle()

    def test_exact_radian_length(self):
        lawn = construct_general(1, 3, 7)
        assert lawn.measure == RationalAngle.radians(1)
        assert retention(lawn, RationalAngle.pi(6, 7)) == 1

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError, match="reduced"):
            construct_general(PI, 2, 4)

    def test_length_out_of_range(self):
        with pytest.raises(ValueError):
            construct_general(TWO_PI, 1, 3)
        with pytest.raises(ValueError):
            construct_general(0, 1, 3)


class TestConstructIrrational:
    def test_measure_hits_target(self):
        lawn = construct_irrational(PI, math.sqrt(2), 0.1)
        assert float(lawn.measure) == pytest.approx(math.pi, abs=1e-9)

    def test_retention_bound(self):
        eps = 0.01
        lawn = construct_irrational(PI, 1.2, eps)
        assert retention(lawn, 1.2) >= 1 - 2 * eps / math.pi

    def test_eps_at_least_length_rejected(self):
        with pytest.raises(ValueError):
            construct_irrational(PI, 1.2, 4.0)

    def test_rational_jump_guard_trips(self):
        # a jump of exactly 2*pi/8 revisits the same 8 arcs forever and can
        # never accumulate length pi
        with pytest.raises(RuntimeError, match="rational"):
            construct_irrational(PI, math.pi / 4, 1e-3)


class TestConstructAntipodalEven:
    def test_q1_is_semicircle(self):
        assert construct_antipodal_even(1) == semicircle()

    def test_even_q_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            construct_antipodal_even(4)

    def test_structure(self):
        lawn = construct_antipodal_even(5)
        assert len(lawn.arcs) == 5
        assert lawn.measure == PI


class TestConstructAntipodalOdd:
    def test_direct_retention_examples(self):
        for p, q in [(1, 8), (3, 8), (5, 8)]:
            block, demi = construct_antipodal_odd(p, q)
            jump = RationalAngle.pi(p, q)
            assert retention(block, jump) == Fraction(7, 8)
            assert retention(demi, jump) == Fraction(7, 8)

    def test_demi_lawn_structure(self):
        p, q = 3, 8
        _, demi = construct_antipodal_odd(p, q)
        assert demi.measure == PI
        # the two families are disjoint demi-lawns of measure pi/2 each
        half = RationalAngle.pi(1, 2 * q)
        fwd = ArcSet.from_pairs(
            [(RationalAngle.pi(j * p, q), RationalAngle.pi(j * p, q) + half) for j in range(q)]
        )
        bwd = ArcSet.from_pairs(
            [(-RationalAngle.pi(j * p, q) - half, -RationalAngle.pi(j * p, q)) for j in range(q)]
        )
        assert fwd.measure == RationalAngle.pi(1, 2)
        assert bwd.measure == RationalAngle.pi(1, 2)
        assert fwd.intersect(bwd).is_empty
        assert fwd.union(bwd) == demi

    def test_preconditions(self):
        with pytest.raises(ValueError):
            construct_antipodal_odd(2, 5)
        with pytest.raises(ValueError):
            construct_antipodal_odd(3, 9)
        with pytest.raises(ValueError):
            construct_antipodal_odd(1, 1)


class TestIrrationalAntipodal:
    def test_leaving_probability_bound(self):
        x = math.sqrt(2)
        lawn, approx = construct_antipodal_irrational(x, 10**4)
        leave = 1 - retention(lawn, RationalAngle.radians(math.pi * x))
        assert approx.q >= 100
        assert leave <= 1.0 / approx.q + 1e-9


class TestOrbit:
    def test_bound_values(self):
        assert orbit_bound(1, 3) == Fraction(2, 3)
        assert orbit_bound(3, 8) == Fraction(7, 8)

    def test_uniform_profile_half(self):
        prof = OrbitProfile(p=1, q=3, start=ZERO,
                            densities=tuple(Fraction(1, 2) for _ in range(6)))
        assert orbit_retention(prof) == Fraction(1, 2)

    def test_profile_matches_lawn_retention(self):
        densities = tuple(Fraction(x) for x in (1, 1, 0, 0, 0, 1))
        prof = OrbitProfile(p=1, q=3, start=ZERO, densities=densities)
        lawn = prof.to_lawn()
        assert orbit_retention(prof) == retention(lawn, RationalAngle.pi(1, 3))

    def test_pairing_violation_rejected(self):
        with pytest.raises(ValueError, match="pairing"):
            OrbitProfile(p=1, q=2, start=ZERO,
                         densities=(Fraction(1), Fraction(1), Fraction(1), Fraction(0)))

    def test_affine_in_each_density(self):
        # retention is affine in each p_k: the midpoint value is the average
        base = [Fraction(1), Fraction(0), Fraction(1), Fraction(0), Fraction(1), Fraction(0)]
        for k in range(3):
            vals = []
            for t in (Fraction(0), Fraction(1, 2), Fraction(1)):
                d = list(base)
                d[k] = t
                d[k + 3] = 1 - t
                vals.append(orbit_retention(OrbitProfile(p=1, q=3, start=ZERO,
                                                         densities=tuple(d))))
            assert vals[1] == (vals[0] + vals[2]) / 2

    def test_profiles_never_beat_bound(self):
        import itertools
        for bits in itertools.product((0, 1), repeat=4):
            dens = tuple(Fraction(b) for b in bits) + tuple(Fraction(1 - b) for b in bits)
            prof = OrbitProfile(p=1, q=4, start=ZERO, densities=dens)
            assert orbit_retention(prof) <= orbit_bound(1, 4)


class TestOptimalValue:
    @pytest.mark.parametrize(
        "p,q,two,value,attained",
        [
            (3, 5, False, Fraction(4, 5), True),
            (2, 5, False, Fraction(1), True),
            (3, 5, True, Fraction(1), True),
            (1, 2, True, Fraction(1, 2), True),
            (1, 1, False, Fraction(1, 2), True),
            (0, 1, False, Fraction(1), True),
            (1, 6, True, Fraction(5, 6), True),
        ],
    )
    def test_rational_values(self, p, q, two, value, attained):
        res = optimal_antipodal_value(RationalAngle.pi(p, q), two_lawn=two)
        assert res.value == value and res.attained == attained

    def test_float_jump_is_supremum(self):
        res = optimal_antipodal_value(RationalAngle.radians(1.234))
        assert res.value == 1 and not res.attained

    def test_exact_radian_jump_is_supremum(self):
        res = optimal_antipodal_value(RationalAngle.radians(1))
        assert res.value == 1 and not res.attained


def test_retention_csv_row_shapes():
    row = retention_csv_row(RationalAngle.pi(3, 8), "block", Fraction(7, 8),
                            bound=Fraction(7, 8), attained=True)
    assert row == ["3", "8", "block", "7", "8", "7/8", "true"]
    row = retention_csv_row(RationalAngle.radians(1.5), "other", 0.25)
    assert row[0] == "" and row[2] == "other" and row[4] == ""
