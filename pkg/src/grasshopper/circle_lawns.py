"""Lawn constructions and retention probabilities on the circle.

A lawn is either an indicator set (ArcSet) or a piecewise-constant density
(StepDensityLawn).  The retention probability of a jump is the chance that a
grasshopper starting at a uniform point of the lawn, jumping the fixed angle
in a uniform direction (clockwise or anticlockwise with probability 1/2
each), lands on the lawn again.  On the exact path every claimed equality
(retention = 1, = 1 - 1/q, = 1/2) is bit-exact, not a tolerance test.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .circle_core import (
    FLOAT_TOL,
    PI,
    TWO_PI,
    ZERO,
    ArcSet,
    RationalAngle,
    as_angle,
)

__all__ = [
    "StepDensityLawn",
    "OrbitProfile",
    "OptimalRetention",
    "ZeroMassLawnError",
    "retention",
    "retention_two",
    "is_antipodal",
    "construct_general",
    "construct_irrational",
    "construct_antipodal_even",
    "construct_antipodal_odd",
    "construct_antipodal_irrational",
    "orbit_bound",
    "orbit_retention",
    "optimal_antipodal_value",
    "retention_csv_row",
]

_ITERATION_CAP = 10**7


class ZeroMassLawnError(ValueError):
    """Retention is undefined for a lawn of zero mass."""


class StepDensityLawn:
    """Piecewise-constant density f: circle -> [0, 1].

    Stored as sorted breakpoints in [0, 2*pi) with one density value per cell
    [breaks[i], breaks[i+1]); the last cell wraps around to breaks[0].
    Adjacent cells with equal values are merged.  An indicator lawn is the
    special case with values in {0, 1}.
    """

    __slots__ = ("breaks", "values", "_mass")

    def __init__(self, pairs, merge_equal: bool = True):
        items = []
        exact = True
        for b, v in pairs:
            b = as_angle(b).mod_circle()
            if not isinstance(v, (int, Fraction, float)):
                raise TypeError(f"density value {v!r} is not a number")
            exact = exact and b.is_exact and not isinstance(v, float)
            items.append((b, v))
        if not items:
            raise ValueError("lawn needs at least one cell")
        if not exact:
            items = [(b.as_float_kind(), float(v)) for b, v in items]
        else:
            items = [(b, Fraction(v)) for b, v in items]
        items.sort(key=lambda t: t[0])
        for (b1, _), (b2, _) in zip(items, items[1:]):
            if b1 == b2:
                raise ValueError("duplicate breakpoints")
        for _, v in items:
            if not (0 <= v <= 1 + (FLOAT_TOL if not exact else 0)):
                raise ValueError(f"density {v} outside [0, 1]")
        if merge_equal:
            items = _merge_equal_cells(items)
        self.breaks = tuple(b for b, _ in items)
        self.values = tuple(v for _, v in items)
        self._mass = None

    @classmethod
    def uniform(cls, value):
        return cls([(ZERO, value)])

    @classmethod
    def from_arc_set(cls, arcs: ArcSet):
        if arcs.is_empty:
            return cls.uniform(0)
        if arcs.is_full:
            return cls.uniform(1)
        one = Fraction(1) if arcs.is_exact else 1.0
        zero = Fraction(0) if arcs.is_exact else 0.0
        pairs = []
        # canonical arcs are disjoint with strict gaps: density steps to 1 at
        # every start and back to 0 at every end
        for s, e in arcs.arcs:
            pairs.append((s, one))
            pairs.append((e.mod_circle(), zero))
        return cls(pairs)

    @property
    def is_exact(self):
        return all(b.is_exact for b in self.breaks)

    @property
    def mass(self):
        """Total integral of the density, as a RationalAngle length."""
        if self._mass is None:
            total = ZERO if self.is_exact else RationalAngle.radians(0.0)
            for length, v in zip(self._cell_lengths(), self.values):
                total = total + length * v
            self._mass = total
        return self._mass

    def _cell_lengths(self):
        cached = _CELL_LENGTH_CACHE.get(self.breaks)
        if cached is not None:
            return cached
        n = len(self.breaks)
        if n == 1:
            out = (TWO_PI if self.is_exact else RationalAngle.radians(2 * math.pi),)
        else:
            out = tuple(
                (self.breaks[(i + 1) % n] - self.breaks[i]).mod_circle() for i in range(n)
            )
        if len(_CELL_LENGTH_CACHE) >= _REFINEMENT_CACHE_MAX:
            _CELL_LENGTH_CACHE.clear()
        _CELL_LENGTH_CACHE[self.breaks] = out
        return out

    def value_at(self, angle):
        x = as_angle(angle).mod_circle()
        i = bisect_right(self.breaks, x) - 1
        return self.values[i] if i >= 0 else self.values[-1]

    def as_float_kind(self):
        return StepDensityLawn(
            [(b.as_float_kind(), float(v)) for b, v in zip(self.breaks, self.values)]
        )

    def __repr__(self):
        cells = ", ".join(f"{b!r}:{v}" for b, v in zip(self.breaks, self.values))
        return f"StepDensityLawn({cells})"


def _merge_equal_cells(items):
    if len(items) <= 1:
        return items
    out = [items[0]]
    for b, v in items[1:]:
        if v == out[-1][1]:
            continue
        out.append((b, v))
    # wrap-around merge: the last cell continues into the first
    while len(out) > 1 and out[0][1] == out[-1][1]:
        out = out[1:]
    return out


def _as_lawn(lawn) -> StepDensityLawn:
    if isinstance(lawn, StepDensityLawn):
        return lawn
    if isinstance(lawn, ArcSet):
        return StepDensityLawn.from_arc_set(lawn)
    raise TypeError(f"not a lawn: {lawn!r}")


def _mutual_integral(fa: StepDensityLawn, fb: StepDensityLawn, shift: RationalAngle):
    """Integral over the circle of fa(t) * fb(t + shift) dt.

    Breakpoints of fa are refined against the pulled-back breakpoints of fb so
    both densities are constant on every refined cell; values are read at cell
    midpoints, which keeps the float path away from breakpoint roundoff.
    """
    if not (fa.is_exact and fb.is_exact and shift.is_exact):
        return RationalAngle.radians(_mutual_integral_float(fa, fb, float(shift)))
    lengths, idx_a, idx_b = _exact_refinement(fa.breaks, fb.breaks, shift)
    total = ZERO
    va, vb = fa.values, fb.values
    for length, ia, ib in zip(lengths, idx_a, idx_b):
        v = va[ia] * vb[ib]
        if v:
            total = total + length * v
    return total


# refined-cell geometry depends only on breakpoints and shift, so repeated
# evaluations over the same grid (the exhaustive orbit oracle) can share it
_REFINEMENT_CACHE: dict = {}
_CELL_LENGTH_CACHE: dict = {}
_REFINEMENT_CACHE_MAX = 512


def _exact_refinement(breaks_a, breaks_b, shift):
    key = (breaks_a, breaks_b, shift)
    hit = _REFINEMENT_CACHE.get(key)
    if hit is not None:
        return hit
    merged = list(breaks_a) + [(b - shift).mod_circle() for b in breaks_b]
    merged.sort()
    breaks = [merged[0]]
    for b in merged[1:]:
        if not (b == breaks[-1]):
            breaks.append(b)
    n = len(breaks)
    lengths, idx_a, idx_b = [], [], []
    for i in range(n):
        if n == 1:
            length = TWO_PI
        else:
            length = (breaks[(i + 1) % n] - breaks[i]).mod_circle()
        mid = breaks[i] + length * Fraction(1, 2)
        lengths.append(length)
        idx_a.append(_cell_index(breaks_a, mid))
        idx_b.append(_cell_index(breaks_b, (mid + shift).mod_circle()))
    result = (tuple(lengths), tuple(idx_a), tuple(idx_b))
    if len(_REFINEMENT_CACHE) >= _REFINEMENT_CACHE_MAX:
        _REFINEMENT_CACHE.clear()
    _REFINEMENT_CACHE[key] = result
    return result


def _cell_index(breaks, x):
    i = bisect_right(breaks, x) - 1
    return i if i >= 0 else len(breaks) - 1


def _mutual_integral_float(fa: StepDensityLawn, fb: StepDensityLawn, shift: float) -> float:
    """Vectorized float-path version of the refined-cell integral."""
    import numpy as np

    two_pi = 2.0 * math.pi
    ba = np.array([float(b) for b in fa.breaks])
    bb = np.array([float(b) for b in fb.breaks])
    va = np.array([float(v) for v in fa.values])
    vb = np.array([float(v) for v in fb.values])
    merged = np.sort(np.concatenate([ba, np.mod(bb - shift, two_pi)]))
    keep = np.concatenate([[True], np.diff(merged) > FLOAT_TOL])
    breaks = merged[keep]
    lengths = np.diff(np.append(breaks, breaks[0] + two_pi))
    mids = np.mod(breaks + lengths / 2.0, two_pi)
    # searchsorted index -1 wraps to the last cell, matching the circle
    fa_vals = va[np.searchsorted(ba, mids, side="right") - 1]
    fb_vals = vb[np.searchsorted(bb, np.mod(mids + shift, two_pi), side="right") - 1]
    return math.fsum(lengths * fa_vals * fb_vals)


def retention(lawn, jump):
    """Retention probability of `lawn` under bidirectional jumps of angle `jump`.

    Exact (a Fraction) whenever the lawn and jump are exact; float otherwise.
    """
    f = _as_lawn(lawn)
    jump = as_angle(jump)
    mass = f.mass
    if mass == ZERO:
        raise ZeroMassLawnError("lawn has zero mass")
    # the clockwise and anticlockwise overlap integrals coincide for one lawn
    forward = _mutual_integral(f, f, jump)
    return forward.ratio(mass)


def retention_two(lawn_a, lawn_b, jump):
    """Probability that a jump from lawn A lands on lawn B."""
    fa, fb = _as_lawn(lawn_a), _as_lawn(lawn_b)
    jump = as_angle(jump)
    mass = fa.mass
    if mass == ZERO:
        raise ZeroMassLawnError("starting lawn has zero mass")
    forward = _mutual_integral(fa, fb, jump)
    backward = _mutual_integral(fa, fb, -jump)
    return (forward + backward).ratio(mass * 2)


def is_antipodal(lawn) -> bool:
    """Whether value(t) + value(t + pi) = 1 everywhere (1e-12 on the float path)."""
    f = _as_lawn(lawn)
    half = PI if f.is_exact else RationalAngle.radians(math.pi)
    merged = list(f.breaks) + [(b - half).mod_circle() for b in f.breaks]
    merged.sort()
    breaks = [merged[0]]
    for b in merged[1:]:
        if not (b == breaks[-1]):
            breaks.append(b)
    n = len(breaks)
    for i in range(n):
        if n == 1:
            length = TWO_PI
        else:
            length = (breaks[(i + 1) % n] - breaks[i]).mod_circle()
        mid = breaks[i] + length * Fraction(1, 2)
        total = f.value_at(mid) + f.value_at(mid + half)
        if f.is_exact:
            if total != 1:
                return False
        elif abs(total - 1.0) > FLOAT_TOL:
            return False
    return True


# -- constructions -----------------------------------------------------------


def _union_measure_float(start_length_pairs) -> float:
    """Measure of a union of arcs given as float (start, length) pairs."""
    two_pi = 2.0 * math.pi
    pieces = []
    for start, length in start_length_pairs:
        s = math.fmod(start, two_pi)
        if s < 0.0:
            s += two_pi
        e = s + min(length, two_pi)
        if e > two_pi:
            pieces.append((s, two_pi))
            pieces.append((0.0, e - two_pi))
        else:
            pieces.append((s, e))
    if not pieces:
        return 0.0
    pieces.sort()
    total = 0.0
    cur_s, cur_e = pieces[0]
    for s, e in pieces[1:]:
        if s <= cur_e:
            cur_e = max(cur_e, e)
        else:
            total += cur_e - cur_s
            cur_s, cur_e = s, e
    total += cur_e - cur_s
    return total


def _as_length(L) -> RationalAngle:
    length = as_angle(L)
    if not (ZERO < length) or not (length < TWO_PI):
        raise ValueError("lawn length must lie strictly between 0 and 2*pi")
    return length


def construct_general(L, p: int, q: int) -> ArcSet:
    """Lawn of length L with retention 1 at jump 2*pi*p/q: q arcs of length L/q.

    p and q must arrive coprime; reduction is the caller's job because the
    parity of the numerator is semantically meaningful elsewhere.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if gcd(p, q) != 1:
        raise ValueError(f"p/q must be reduced, got gcd({p}, {q}) != 1")
    length = _as_length(L)
    piece = length / q
    return ArcSet.from_pairs(
        [(RationalAngle.pi(2 * j, q), RationalAngle.pi(2 * j, q) + piece) for j in range(q)]
    )


def construct_irrational(L, jump: float, eps) -> ArcSet:
    """Lawn of length L with retention >= 1 - 2*eps/L at an irrational jump.

    Accumulates arcs [j*jump, j*jump + eps) while the union still measures
    less than L, then pads with a final arc trimmed so the total measure is
    exactly L (to float tolerance).  The caller asserts jump/pi is irrational;
    floats cannot prove it.  The asserted retention bound is the conservative
    1 - 2*eps/L: at most the first and the last interval lose mass, one jump
    direction each.
    """
    jump = float(jump)
    length_f = float(as_angle(L))
    eps = float(eps)
    if not (0 < eps < length_f):
        raise ValueError("need 0 < eps < L")
    if not (0 < length_f < 2 * math.pi):
        raise ValueError("lawn length must lie strictly between 0 and 2*pi")

    def union_measure(k):
        return _union_measure_float([(j * jump, eps) for j in range(k)])

    # exponential search then bisection for the largest K with measure < L
    hi = 1
    prev_measure = -1.0
    while True:
        m = union_measure(hi)
        if m >= length_f:
            break
        if m - prev_measure <= max(1e-12, hi * 1e-15) or hi > _ITERATION_CAP:
            # growth at float-dust level: the orbit is effectively finite, so
            # the jump is a rational multiple of 2*pi and L is unreachable
            raise RuntimeError(
                "accumulation did not reach the target length; is jump/pi rational?"
            )
        prev_measure = m
        hi *= 2
    lo = hi // 2  # union_of(lo) < L (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if union_measure(mid) < length_f:
            lo = mid
        else:
            hi = mid
    big_k = lo
    base = ArcSet.from_pairs([(j * jump, j * jump + eps) for j in range(big_k)])
    need = length_f - float(base.measure)
    # walk the uncovered parts of [K*jump, K*jump + eps) until `need` is filled
    start = big_k * jump
    gaps = base.complement().intersect(ArcSet.from_pairs([(start, start + eps)]))
    offsets = sorted(
        (float((s - RationalAngle.radians(start)).mod_circle()), float(e - s))
        for s, e in gaps.arcs
    )
    acc = 0.0
    delta = eps
    for off, glen in offsets:
        if acc + glen >= need - 1e-15:
            delta = off + (need - acc)
            break
        acc += glen
    return base.union(ArcSet.from_pairs([(start, start + delta)]))


def construct_antipodal_even(q: int) -> ArcSet:
    """The alternating antipodal lawn with retention 1 at jumps pi*p/q, p even."""
    if q < 1 or q % 2 == 0:
        raise ValueError("q must be odd: the alternating lawn is not antipodal for even q")
    return ArcSet.from_pairs(
        [(RationalAngle.pi(2 * j, q), RationalAngle.pi(2 * j + 1, q)) for j in range(q)]
    )


def construct_antipodal_odd(p: int, q: int):
    """Optimal antipodal lawns for jump pi*p/q with p odd: a block lawn and a
    demi-lawn pair, both with retention exactly 1 - 1/q.

    Returns (block_lawn, demi_lawn).  The block lawn is q arcs of width pi/q
    at the jump orbit positions; the demi lawn is two disjoint length-pi/2
    unions of width-pi/(2q) arcs.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if p % 2 == 0:
        raise ValueError("p must be odd")
    if gcd(p, q) != 1:
        raise ValueError(f"p/q must be reduced, got gcd({p}, {q}) != 1")
    block = ArcSet.from_pairs(
        [(RationalAngle.pi(j * p, q), RationalAngle.pi(j * p, q) + RationalAngle.pi(1, q))
         for j in range(q)]
    )
    half = RationalAngle.pi(1, 2 * q)
    demi_pairs = []
    for j in range(q):
        a = RationalAngle.pi(j * p, q)
        demi_pairs.append((a, a + half))
        demi_pairs.append((-a - half, -a))
    demi = ArcSet.from_pairs(demi_pairs)
    return block, demi


def construct_antipodal_irrational(x: float, max_q: int):
    """Near-optimal antipodal lawn for an irrational jump pi*x.

    Picks a rational approximation p/q to x with p even and q odd and error
    at most 1/q**2, and returns the alternating lawn for that q, whose
    leaving probability at jump pi*x is q*|x - p/q| <= 1/q.

    Returns (lawn, approximation).
    """
    from .diophantine import approx_even_odd

    approx = approx_even_odd(x, max_q)
    return construct_antipodal_even(approx.q), approx


# -- orbit machinery ---------------------------------------------------------


@dataclass(frozen=True)
class OrbitProfile:
    """Densities on the 2q-point jump orbit, in orbit order.

    Index k sits at start + k*pi*p/q; antipodal pairing forces
    densities[k] + densities[k + q] = 1.
    """

    p: int
    q: int
    start: RationalAngle
    densities: tuple

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be positive")
        if self.p % 2 == 0 or gcd(self.p, self.q) != 1:
            raise ValueError("p must be odd and coprime to q")
        if len(self.densities) != 2 * self.q:
            raise ValueError(f"need exactly {2 * self.q} orbit densities")
        for k in range(self.q):
            a, b = self.densities[k], self.densities[k + self.q]
            ok = (a + b == 1) if not isinstance(a + b, float) else abs(a + b - 1) <= FLOAT_TOL
            if not ok:
                raise ValueError(f"antipodal pairing violated at index {k}")

    def to_lawn(self) -> StepDensityLawn:
        step = RationalAngle.pi(self.p, self.q)
        return StepDensityLawn(
            [((self.start + step * k).mod_circle(), v) for k, v in enumerate(self.densities)]
        )


def orbit_bound(p: int, q: int) -> Fraction:
    """Largest retention any antipodal lawn can reach at jump pi*p/q, p odd."""
    if q < 1:
        raise ValueError("q must be positive")
    if p % 2 == 0 or gcd(p, q) != 1:
        raise ValueError("p must be odd and coprime to q")
    return Fraction(q - 1, q)


def orbit_retention(profile: OrbitProfile):
    """Retention of an orbit profile: (1/2q) * sum p_k (p_{k-1} + p_{k+1})."""
    d = profile.densities
    n = 2 * profile.q
    total = sum(d[k] * (d[(k - 1) % n] + d[(k + 1) % n]) for k in range(n))
    if isinstance(total, float):
        return total / n
    return Fraction(total, 1) / n


# -- optimal values ----------------------------------------------------------


@dataclass(frozen=True)
class OptimalRetention:
    """Optimal (or supremum) retention at a given jump, with attainment flag."""

    value: Fraction
    attained: bool


def optimal_antipodal_value(jump, two_lawn: bool = False) -> OptimalRetention:
    """Optimal retention for antipodal lawns at the given jump.

    One-lawn mode: 1 attained except at jumps pi*p/q with p odd, where the
    optimum is 1/2 for q = 1 and 1 - 1/q otherwise.  Two-lawn mode: the
    exceptional set shrinks to p odd with q even.  Float-kind jumps are
    treated as irrational multiples of pi (supremum 1, not attained); exact
    rational jumps must be passed as such.
    """
    j = as_angle(jump).mod_circle()
    if not j.is_pi_rational:
        return OptimalRetention(Fraction(1), attained=False)
    frac = j.pi_fraction
    p, q = frac.numerator, frac.denominator
    if p % 2 == 0:
        return OptimalRetention(Fraction(1), attained=True)
    if two_lawn:
        if q % 2 == 0:
            return OptimalRetention(Fraction(q - 1, q), attained=True)
        return OptimalRetention(Fraction(1), attained=True)
    if q == 1:
        return OptimalRetention(Fraction(1, 2), attained=True)
    return OptimalRetention(Fraction(q - 1, q), attained=True)


# -- reporting ----------------------------------------------------------------


def retention_csv_row(jump, construction: str, value, bound=None, attained=None):
    """One row of the retention results CSV:
    (jump_num, jump_den_or_float, construction, retention_num, retention_den,
    bound, attained_flag).
    """
    j = as_angle(jump)
    if j.is_pi_rational:
        jn, jd = str(j.pi_fraction.numerator), str(j.pi_fraction.denominator)
    else:
        jn, jd = "", repr(float(j))
    if isinstance(value, Fraction):
        rn, rd = str(value.numerator), str(value.denominator)
    else:
        rn, rd = repr(float(value)), ""
    bound_s = "" if bound is None else (
        f"{bound.numerator}/{bound.denominator}" if isinstance(bound, Fraction) else repr(float(bound))
    )
    att = "" if attained is None else str(bool(attained)).lower()
    return [jn, jd, construction, rn, rd, bound_s, att]
