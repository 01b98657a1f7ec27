"""Exact arithmetic for angles and arc sets on the circle of circumference 2*pi.

An angle value is stored either exactly, as a*pi + b radians with rational
coefficients a and b (the plain rational-multiple-of-pi case is b = 0), or as
a float number of radians for genuinely irrational angles such as sqrt(2).
All arc-set algebra is bit-exact on the exact path; any operation touching a
float value coerces the whole computation to floats, where comparisons use a
1e-12 tolerance.

Angle values are not wrapped into [0, 2*pi) automatically: the same type also
carries lengths and measures (a full circle measures 2*pi, which wrapping
would destroy).  Containers that store circle *positions* (ArcSet endpoints,
lawn breakpoints) normalize them on construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "RationalAngle",
    "ArcSet",
    "normalize",
    "PrecisionOverflowError",
    "ZERO",
    "PI",
    "TWO_PI",
    "FLOAT_TOL",
]

FLOAT_TOL = 1e-12

# pi to 50 decimal digits (truncated).  Wide enough to order a*pi + b exactly
# for rational coefficients with denominators far beyond desk scale; the guard
# below raises if an ordering ever falls inside the bracket.
_PI_LO = Fraction("3.14159265358979323846264338327950288419716939937510")
_PI_HI = _PI_LO + Fraction(1, 10**50)
_TWO_PI_F = 2.0 * math.pi


class PrecisionOverflowError(ArithmeticError):
    """Rational coefficients too extreme to order against the stored pi bounds."""


class RationalAngle:
    """An angle or angular length, exact (a*pi + b, rational a, b) or float radians.

    Exact-by-exact arithmetic stays exact; anything involving a float yields a
    float.  Equality between values on the float path uses a 1e-12 tolerance;
    ordering is strict.
    """

    __slots__ = ("_pi", "_rad", "_float")

    def __init__(self, pi_part=None, rad_part=None, float_value=None):
        if float_value is not None:
            self._pi = None
            self._rad = None
            self._float = float(float_value)
        else:
            self._pi = Fraction(pi_part if pi_part is not None else 0)
            self._rad = Fraction(rad_part if rad_part is not None else 0)
            self._float = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def pi(cls, num, den=1):
        """Exact angle (num/den)*pi."""
        return cls(pi_part=Fraction(num, den))

    @classmethod
    def radians(cls, value):
        """Angle in radians: int/Fraction stay exact, float takes the float path."""
        if isinstance(value, float):
            return cls(float_value=value)
        return cls(rad_part=Fraction(value))

    @classmethod
    def zero(cls):
        return cls(pi_part=0)

    # -- inspection ----------------------------------------------------------

    @property
    def is_exact(self):
        return self._float is None

    @property
    def is_pi_rational(self):
        """True when the value is an exact rational multiple of pi."""
        return self._float is None and self._rad == 0

    @property
    def pi_fraction(self):
        """The value as an exact Fraction in units of pi (pi-rational kind only)."""
        if not self.is_pi_rational:
            raise ValueError("angle is not an exact rational multiple of pi")
        return self._pi

    def __float__(self):
        if self._float is not None:
            return self._float
        return float(self._pi) * math.pi + float(self._rad)

    @property
    def float_radians(self):
        return float(self)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = as_angle(other)
        if self.is_exact and other.is_exact:
            return RationalAngle(self._pi + other._pi, self._rad + other._rad)
        return RationalAngle(float_value=float(self) + float(other))

    __radd__ = __add__

    def __neg__(self):
        if self.is_exact:
            return RationalAngle(-self._pi, -self._rad)
        return RationalAngle(float_value=-self._float)

    def __sub__(self, other):
        return self + (-as_angle(other))

    def __rsub__(self, other):
        return as_angle(other) + (-self)

    def __mul__(self, scalar):
        if isinstance(scalar, float):
            return RationalAngle(float_value=float(self) * scalar)
        scalar = Fraction(scalar)
        if self.is_exact:
            return RationalAngle(self._pi * scalar, self._rad * scalar)
        return RationalAngle(float_value=self._float * float(scalar))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RationalAngle):
            return self.ratio(other)
        if isinstance(other, float):
            return RationalAngle(float_value=float(self) / other)
        return self * (Fraction(1) / Fraction(other))

    def ratio(self, other):
        """self / other as a plain number: Fraction when exactly representable."""
        other = as_angle(other)
        if self.is_exact and other.is_exact:
            a1, b1, a2, b2 = self._pi, self._rad, other._pi, other._rad
            if a2 == 0 and b2 == 0:
                raise ZeroDivisionError("division by zero angle")
            if a1 * b2 == a2 * b1:
                # the two values are rational multiples of each other
                return a1 / a2 if a2 != 0 else b1 / b2
        return float(self) / float(other)

    # -- ordering ------------------------------------------------------------

    def _cmp(self, other):
        other = as_angle(other)
        if self.is_exact and other.is_exact:
            if self._rad == other._rad:
                a, b = self._pi, other._pi
                return 0 if a == b else (-1 if a < b else 1)
            if self._pi == other._pi:
                a, b = self._rad, other._rad
                return -1 if a < b else 1
            da = self._pi - other._pi
            db = self._rad - other._rad
            if da == 0:
                return 0 if db == 0 else (-1 if db < 0 else 1)
            t = -db / da
            if t < _PI_LO:
                pi_greater = True
            elif t > _PI_HI:
                pi_greater = False
            else:
                raise PrecisionOverflowError(
                    "ordering a*pi + b requires more digits of pi than stored"
                )
            # sign(da*pi + db) = sign(da) * sign(pi - (-db/da))
            return 1 if (da > 0) == pi_greater else -1
        a, b = float(self), float(other)
        return 0 if a == b else (-1 if a < b else 1)

    def __eq__(self, other):
        try:
            other = as_angle(other)
        except TypeError:
            return NotImplemented
        if self.is_exact and other.is_exact:
            return self._pi == other._pi and self._rad == other._rad
        return abs(float(self) - float(other)) <= FLOAT_TOL

    def __hash__(self):
        # exact-kind hashing is consistent with exact equality; float-kind
        # hashing follows plain float semantics (the 1e-12 comparison
        # tolerance means near-equal floats may hash apart, which costs a
        # lookup miss, never a wrong answer)
        if self._float is not None:
            return hash(self._float)
        return hash(
            (
                self._pi.numerator,
                self._pi.denominator,
                self._rad.numerator,
                self._rad.denominator,
            )
        )

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- circle geometry -----------------------------------------------------

    def mod_circle(self):
        """Wrap into [0, 2*pi)."""
        if self._float is not None:
            r = math.fmod(self._float, _TWO_PI_F)
            if r < 0.0:
                r += _TWO_PI_F
            if r >= _TWO_PI_F:
                r = 0.0
            return RationalAngle(float_value=r)
        if 0 <= self._pi < 2 and ZERO <= self < TWO_PI:
            return self
        est = math.floor(float(self) / _TWO_PI_F)
        for k in (est - 1, est, est + 1):
            cand = RationalAngle(self._pi - 2 * k, self._rad)
            if ZERO <= cand < TWO_PI:
                return cand
        raise PrecisionOverflowError("could not wrap angle into [0, 2*pi)")

    def as_float_kind(self):
        if self._float is not None:
            return self
        return RationalAngle(float_value=float(self))

    # -- serialization -------------------------------------------------------

    def to_json_obj(self):
        if self._float is not None:
            return {"kind": "float", "radians": self._float}
        if self._rad == 0:
            return {
                "kind": "rational",
                "num": self._pi.numerator,
                "den": self._pi.denominator,
            }
        return {
            "kind": "exact",
            "pi_num": self._pi.numerator,
            "pi_den": self._pi.denominator,
            "rad_num": self._rad.numerator,
            "rad_den": self._rad.denominator,
        }

    @classmethod
    def from_json_obj(cls, obj):
        kind = obj["kind"]
        if kind == "float":
            return cls(float_value=obj["radians"])
        if kind == "rational":
            return cls(pi_part=Fraction(obj["num"], obj["den"]))
        if kind == "exact":
            return cls(
                pi_part=Fraction(obj["pi_num"], obj["pi_den"]),
                rad_part=Fraction(obj["rad_num"], obj["rad_den"]),
            )
        raise ValueError(f"unknown angle kind {kind!r}")

    def __repr__(self):
        if self._float is not None:
            return f"RationalAngle({self._float!r} rad)"
        if self._rad == 0:
            return f"RationalAngle({self._pi}*pi)"
        return f"RationalAngle({self._pi}*pi + {self._rad})"


def as_angle(value) -> RationalAngle:
    """Coerce a number to RationalAngle: int/Fraction exact radians, float float."""
    if isinstance(value, RationalAngle):
        return value
    if isinstance(value, float):
        return RationalAngle(float_value=value)
    if isinstance(value, (int, Fraction)):
        return RationalAngle(rad_part=Fraction(value))
    raise TypeError(f"cannot interpret {value!r} as an angle")


ZERO = RationalAngle.pi(0)
PI = RationalAngle.pi(1)
TWO_PI = RationalAngle.pi(2)


class ArcSet:
    """Canonical finite union of pairwise disjoint half-open arcs [start, end).

    Arcs are stored as (start, length) with start normalized into [0, 2*pi),
    sorted by start, adjacent and overlapping inputs merged (including across
    the wrap through 0, so at most one stored arc wraps).  Equal sets have
    identical representations; the full circle is the single arc [0, 2*pi).
    """

    __slots__ = ("_arcs",)

    def __init__(self, _arcs=()):
        # trusted canonical tuple of (start, length); use from_pairs() to build
        self._arcs = tuple(_arcs)

    # -- construction --------------------------------------------------------

    @classmethod
    def empty(cls):
        return cls(())

    @classmethod
    def full_circle(cls):
        return cls(((ZERO, TWO_PI),))

    @classmethod
    def from_pairs(cls, pairs):
        """Normalize raw (start, end) pairs into a canonical ArcSet.

        start == end means the empty arc and is dropped; a raw difference of a
        nonzero multiple of 2*pi means the full circle.  Arcs may wrap through
        zero and may overlap arbitrarily.
        """
        raw = []
        exact = True
        for a, b in pairs:
            a, b = as_angle(a), as_angle(b)
            exact = exact and a.is_exact and b.is_exact
            raw.append((a, b))
        if not exact:
            raw = [(a.as_float_kind(), b.as_float_kind()) for a, b in raw]
        tol = 0 if exact else FLOAT_TOL

        pieces = []  # linear intervals (s, e) with 0 <= s < e <= 2*pi
        for a, b in raw:
            d = b - a
            if d == ZERO:
                continue
            length = d.mod_circle()
            if length == ZERO:
                # nonzero multiple of 2*pi: the full circle
                return cls.full_circle()
            s = a.mod_circle()
            e = s + length
            if e > TWO_PI:
                if not (s == TWO_PI):
                    pieces.append((s, TWO_PI))
                over = e - TWO_PI
                if not (over == ZERO):
                    pieces.append((s - s, over))  # zero of the matching kind
            else:
                pieces.append((s, e))

        if not pieces:
            return cls.empty()

        pieces.sort(key=lambda p: p[0])
        merged = [list(pieces[0])]
        for s, e in pieces[1:]:
            cur = merged[-1]
            if s < cur[1] or s == cur[1]:  # float __eq__ carries the tolerance
                if e > cur[1]:
                    cur[1] = e
            else:
                merged.append([s, e])

        # wrap through zero: glue a trailing arc ending at 2*pi onto a leading
        # arc starting at 0 (or detect full coverage)
        touches_zero = merged[0][0] == ZERO
        touches_two_pi = merged[-1][1] == TWO_PI
        if touches_zero and touches_two_pi:
            if len(merged) == 1:
                return cls.full_circle()
            first = merged[0]
            merged = merged[1:]
            merged[-1][1] = TWO_PI + first[1]

        return cls(tuple((s, e - s) for s, e in merged))

    # -- inspection ----------------------------------------------------------

    @property
    def arcs(self):
        """Tuple of raw (start, end) pairs; a wrapping arc has end > 2*pi."""
        return tuple((s, s + length) for s, length in self._arcs)

    @property
    def is_empty(self):
        return not self._arcs

    @property
    def is_full(self):
        return len(self._arcs) == 1 and self._arcs[0][1] == TWO_PI

    @property
    def is_exact(self):
        return all(s.is_exact and l.is_exact for s, l in self._arcs)

    @property
    def measure(self):
        """Total length as a RationalAngle, exact when all endpoints are exact."""
        if not self._arcs:
            return ZERO
        if self.is_exact:
            total = ZERO
            for _, length in self._arcs:
                total = total + length
            return total
        return RationalAngle(float_value=math.fsum(float(l) for _, l in self._arcs))

    def contains(self, angle):
        """Membership of a point under the half-open convention."""
        x = as_angle(angle).mod_circle()
        for s, length in self._arcs:
            if (x - s).mod_circle() < length:
                return True
        return False

    # -- set algebra ---------------------------------------------------------

    def union(self, other):
        return ArcSet.from_pairs(self.arcs + other.arcs)

    def complement(self):
        if self.is_empty:
            return ArcSet.full_circle()
        if self.is_full:
            return ArcSet.empty()
        ends = [(s + length).mod_circle() for s, length in self._arcs]
        starts = [s for s, _ in self._arcs]
        gaps = []
        n = len(self._arcs)
        for i in range(n):
            gaps.append((ends[i], starts[(i + 1) % n]))
        return ArcSet.from_pairs(gaps)

    def intersect(self, other):
        return self.complement().union(other.complement()).complement()

    def rotate(self, angle):
        a = as_angle(angle)
        return ArcSet.from_pairs(tuple((s + a, e + a) for s, e in self.arcs))

    def __eq__(self, other):
        if not isinstance(other, ArcSet):
            return NotImplemented
        if len(self._arcs) != len(other._arcs):
            return False
        return all(
            s1 == s2 and l1 == l2
            for (s1, l1), (s2, l2) in zip(self._arcs, other._arcs)
        )

    def __repr__(self):
        inner = ", ".join(f"[{s!r}, {e!r})" for s, e in self.arcs)
        return f"ArcSet({inner})"

    # -- serialization -------------------------------------------------------

    def to_json_obj(self):
        out = []
        for s, e in self.arcs:
            if s.is_pi_rational and e.is_pi_rational:
                out.append(
                    {
                        "kind": "rational",
                        "start": {"num": s.pi_fraction.numerator, "den": s.pi_fraction.denominator},
                        "end": {"num": e.pi_fraction.numerator, "den": e.pi_fraction.denominator},
                    }
                )
            elif s.is_exact and e.is_exact:
                out.append({"kind": "exact", "start": s.to_json_obj(), "end": e.to_json_obj()})
            else:
                out.append({"kind": "float", "start_f": float(s), "end_f": float(e)})
        return {"arcs": out}

    @classmethod
    def from_json_obj(cls, obj):
        pairs = []
        for arc in obj["arcs"]:
            kind = arc["kind"]
            if kind == "rational":
                s = RationalAngle.pi(arc["start"]["num"], arc["start"]["den"])
                e = RationalAngle.pi(arc["end"]["num"], arc["end"]["den"])
            elif kind == "exact":
                s = RationalAngle.from_json_obj(arc["start"])
                e = RationalAngle.from_json_obj(arc["end"])
            elif kind == "float":
                s = RationalAngle(float_value=arc["start_f"])
                e = RationalAngle(float_value=arc["end_f"])
            else:
                raise ValueError(f"unknown arc kind {kind!r}")
            pairs.append((s, e))
        return cls.from_pairs(pairs)


def normalize(pairs) -> ArcSet:
    """Canonical union of raw (start, end) arcs."""
    return ArcSet.from_pairs(pairs)
