"""Rational approximation of jump angles: continued fractions and parity search.

The circle results for irrational jumps need rational approximations p/q with
p even and q odd and quality |x - p/q| <= 1/q**2.  Convergents of the
continued fraction expansion deliver quality below 1/q**2 but arbitrary
parities; semiconvergents fill in the parity classes, and a brute-force scan
over denominators backs the search up at desk scale.

Float inputs are treated as the exact rationals they are; expansions of
irrational numbers therefore terminate once the float's own denominator is
reached (q around 1e7 is the practical ceiling for meaningful output).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = ["Approximation", "ApproximationNotFoundError", "convergents", "approx_even_odd"]

_MAX_MEANINGFUL_Q = 10**7


class ApproximationNotFoundError(ValueError):
    """No parity-constrained approximation exists under the given denominator cap."""


@dataclass(frozen=True)
class Approximation:
    """A reduced rational approximation p/q to a target x."""

    p: int
    q: int
    error_bound: float
    parity_class: tuple  # (p % 2, q % 2) as ('even'|'odd', 'even'|'odd')

    @classmethod
    def build(cls, p: int, q: int, x: float):
        if q < 1:
            raise ValueError("q must be positive")
        if gcd(p, q) != 1:
            raise ValueError("p/q must be reduced")
        parity = ("even" if p % 2 == 0 else "odd", "even" if q % 2 == 0 else "odd")
        return cls(p=p, q=q, error_bound=abs(x - p / q), parity_class=parity)

    @property
    def value(self) -> float:
        return self.p / self.q

    def satisfies_quality(self) -> bool:
        return self.error_bound <= 1.0 / self.q**2 + 1e-15


def _cf_terms(x: Fraction):
    """Continued fraction terms of a nonnegative rational."""
    terms = []
    num, den = x.numerator, x.denominator
    while den:
        a, rem = divmod(num, den)
        terms.append(a)
        num, den = den, rem
    return terms


def convergents(x: float, max_q: int):
    """Continued-fraction convergents p/q of x with q <= max_q.

    Every returned convergent satisfies |x - p/q| < 1/q**2; rational x (and
    every float is rational) yields a finite list ending in x itself when its
    denominator fits under max_q.
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise ValueError("x must be a positive finite number")
    if max_q < 1:
        raise ValueError("max_q must be at least 1")
    exact = Fraction(x)
    out = []
    p_cur, q_cur = 1, 0  # h_{-1}/k_{-1}
    p_prev, q_prev = 0, 1  # h_{-2}/k_{-2}
    for a in _cf_terms(exact):
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        if q_cur > max_q:
            break
        out.append(Approximation.build(p_cur, q_cur, x))
    return out


def _semiconvergent_candidates(x: float, max_q: int):
    """All convergents and semiconvergents with q <= max_q, as (p, q) pairs."""
    exact = Fraction(x)
    terms = _cf_terms(exact)
    pairs = []
    p_cur, q_cur = 1, 0
    p_prev, q_prev = 0, 1
    for a in terms:
        for m in range(1, a + 1):
            p = m * p_cur + p_prev
            q = m * q_cur + q_prev
            if q > max_q:
                return pairs
            pairs.append((p, q))
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
    return pairs


def approx_even_odd(x: float, max_q: int) -> Approximation:
    """Best approximation p/q to x with p even, q odd, |x - p/q| <= 1/q**2.

    Scans convergents and semiconvergents for parity-matching candidates and
    returns the largest-q hit under max_q; falls back to an exhaustive scan
    over odd denominators if the expansion offers none.  Raises
    ApproximationNotFoundError when nothing qualifies under max_q.
    """
    if max_q < 3:
        raise ValueError("max_q must be at least 3")
    if max_q > _MAX_MEANINGFUL_Q:
        raise ValueError(f"max_q beyond {_MAX_MEANINGFUL_Q} is not meaningful for float input")
    best = None
    for p, q in _semiconvergent_candidates(x, max_q):
        if gcd(p, q) != 1:
            continue
        if p % 2 != 0 or q % 2 != 1:
            continue
        cand = Approximation.build(p, q, x)
        if not cand.satisfies_quality():
            continue
        if best is None or cand.q > best.q:
            best = cand
    if best is None:
        best = _exhaustive_even_odd(x, max_q)
    if best is None:
        raise ApproximationNotFoundError(
            f"no even/odd approximation of quality 1/q^2 found for x={x!r} with q <= {max_q}"
        )
    _check_output(best, x)
    return best


def _exhaustive_even_odd(x: float, max_q: int):
    for q in range(max_q if max_q % 2 == 1 else max_q - 1, 0, -2):
        p = round(x * q)
        candidates = (p,) if p % 2 == 0 else (p - 1, p + 1)
        found = None
        for cand in candidates:
            if cand < 0 or gcd(cand, q) != 1:
                continue
            a = Approximation.build(cand, q, x)
            if a.satisfies_quality() and (found is None or a.error_bound < found.error_bound):
                found = a
        if found is not None:
            return found
    return None


def _check_output(a: Approximation, x: float):
    # direct post-check of every advertised property
    assert gcd(a.p, a.q) == 1
    assert a.p % 2 == 0 and a.q % 2 == 1
    assert abs(a.error_bound - abs(x - a.p / a.q)) <= 1e-15
    assert a.satisfies_quality()
