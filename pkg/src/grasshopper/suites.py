"""Named verification suites driving the lemma-level checks.

Each suite returns a list of CheckRow results; the CLI renders them as CSV
and the acceptance tests assert on them.  Expected values are either exact
rationals (circle suites, compared bit-exactly) or floats with an explicit
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .circle_core import PI, ZERO, ArcSet, RationalAngle
from .circle_lawns import (
    construct_antipodal_even,
    construct_antipodal_irrational,
    construct_antipodal_odd,
    construct_general,
    construct_irrational as circle_construct_irrational,
    retention,
    retention_two,
    StepDensityLawn,
)
from .diophantine import approx_even_odd
from .oracle import exhaustive_orbit_max
from . import sphere_lawns

__all__ = ["CheckRow", "SUITES", "run_suite", "SPECIAL_X"]


@dataclass(frozen=True)
class CheckRow:
    check: str
    expected: str
    actual: str
    tolerance: str
    passed: bool


def _exact_row(name, expected, actual) -> CheckRow:
    return CheckRow(name, str(expected), str(actual), "exact", expected == actual)


def _tol_row(name, expected: float, actual: float, tol: float) -> CheckRow:
    return CheckRow(name, repr(expected), repr(actual), repr(tol), abs(expected - actual) <= tol)


def _bound_row(name, bound: float, actual: float, direction: str) -> CheckRow:
    ok = actual >= bound if direction == ">=" else actual <= bound
    return CheckRow(name, f"{direction} {bound!r}", repr(actual), "bound", ok)


def suite_circle_exact() -> list:
    rows = []
    # general lawns: retention 1 at jump 2*pi*p/q
    cases = [
        (RationalAngle.pi(1, 3), 2, 5),
        (RationalAngle.radians(1), 3, 7),
        (PI, 1, 1),
    ]
    for L, p, q in cases:
        lawn = construct_general(L, p, q)
        val = retention(lawn, RationalAngle.pi(2 * p, q))
        rows.append(_exact_row(f"general L={L} p={p} q={q}", Fraction(1), val))
    # alternating antipodal lawns: retention 1 at even numerators
    for p, q in [(2, 5), (4, 7)]:
        lawn = construct_antipodal_even(q)
        val = retention(lawn, RationalAngle.pi(p, q))
        rows.append(_exact_row(f"antipodal-even p={p} q={q}", Fraction(1), val))
    # odd numerators: both optimal lawns hit 1 - 1/q
    for p, q in [(1, 8), (3, 8), (5, 8), (1, 2), (3, 7)]:
        block, demi = construct_antipodal_odd(p, q)
        jump = RationalAngle.pi(p, q)
        rows.append(_exact_row(f"block p={p} q={q}", Fraction(q - 1, q), retention(block, jump)))
        rows.append(_exact_row(f"demi p={p} q={q}", Fraction(q - 1, q), retention(demi, jump)))
    # uniform density 1/2 at jump pi
    half = StepDensityLawn.uniform(Fraction(1, 2))
    rows.append(_exact_row("uniform-half jump=pi", Fraction(1, 2), retention(half, PI)))
    # two-lawn: alternating lawn against its complement, odd/odd jump
    s3 = construct_antipodal_even(3)
    rows.append(
        _exact_row(
            "two-lawn S3/complement jump=pi/3",
            Fraction(1),
            retention_two(s3, s3.complement(), RationalAngle.pi(1, 3)),
        )
    )
    # two-lawn: equal semicircles at even q
    semi = ArcSet.from_pairs([(ZERO, PI)])
    for q in (2, 4, 6):
        val = retention_two(semi, semi, RationalAngle.pi(1, q))
        rows.append(_exact_row(f"two-lawn semicircles q={q}", Fraction(q - 1, q), val))
    return rows


def suite_circle_orbit(max_q: int = 12) -> list:
    rows = []
    for q in range(1, max_q + 1):
        for p in range(1, 2 * q, 2):
            if gcd(p, q) != 1:
                continue
            best, _ = exhaustive_orbit_max(p, q)
            rows.append(_exact_row(f"orbit-max p={p} q={q}", Fraction(q - 1, q), best))
    return rows


SPECIAL_X = {
    "sqrt2": math.sqrt(2),
    "phi1.2": 1.2 / math.pi,
    "golden": (1 + math.sqrt(5)) / 2,
    "ln2": math.log(2),
    "pi": math.pi,
}


def suite_diophantine(x_names=("sqrt2", "phi1.2", "golden"), max_q: int = 10**4,
                      min_q: int = 100) -> list:
    rows = []
    for name in x_names:
        x = SPECIAL_X[name] if isinstance(name, str) else float(name)
        label = name if isinstance(name, str) else repr(name)
        approx = approx_even_odd(x, max_q)
        rows.append(
            CheckRow(
                f"approx {label}: parity (even, odd)",
                "('even', 'odd')",
                str(approx.parity_class),
                "exact",
                approx.parity_class == ("even", "odd"),
            )
        )
        rows.append(
            _bound_row(f"approx {label}: |x - p/q| <= 1/q^2", 1.0 / approx.q**2,
                       approx.error_bound, "<=")
        )
        rows.append(_bound_row(f"approx {label}: q >= {min_q}", float(min_q), float(approx.q), ">="))
        # the alternating lawn for that q leaves with probability q|x - p/q| <= 1/q
        lawn = construct_antipodal_even(approx.q)
        leave = 1.0 - retention(lawn, RationalAngle.radians(math.pi * x))
        rows.append(
            _bound_row(
                f"lawn q={approx.q} leaving prob <= 1/q + 1e-9",
                1.0 / approx.q + 1e-9,
                leave,
                "<=",
            )
        )
    # Weyl-style accumulation lawns: conservative retention bound 1 - 2*eps/L
    eps = 1e-3
    for name in x_names:
        x = SPECIAL_X[name] if isinstance(name, str) else float(name)
        label = name if isinstance(name, str) else repr(name)
        jump = math.pi * x if (math.pi * x) < 2 * math.pi else math.fmod(math.pi * x, 2 * math.pi)
        lawn = circle_construct_irrational(PI, jump, eps)
        rows.append(
            _tol_row(f"accumulated lawn {label}: measure = pi", math.pi,
                     float(lawn.measure), 1e-9)
        )
        val = retention(lawn, jump)
        rows.append(
            _bound_row(
                f"accumulated lawn {label}: retention >= 1 - 2eps/L",
                1.0 - 2 * eps / math.pi,
                float(val),
                ">=",
            )
        )
    return rows


_ASYMPTOTIC_PHIS = (math.pi / 3, 1.2, 6 * math.pi / 13)
_ASYMPTOTIC_RS = (4e-3, 2e-3, 1e-3)


def suite_sphere_asymptotics(phis=_ASYMPTOTIC_PHIS, rs=_ASYMPTOTIC_RS) -> list:
    """Prop-8 ratio checks plus beta agreement with the direction-sweep oracle."""
    import numpy as np

    from .oracle import direction_sweep_fraction
    from .sphere_geom import CapSpec, SpherePoint, beta1, beta_sum

    rows = []
    for phi in phis:
        defects = []
        for r in rs:
            aa = sphere_lawns.br_pair_integral(phi, r, 1.0, 1.0, rel_tol=1e-9,
                                               start_n=64, max_n=1024)
            b1 = sphere_lawns.br_beta1_integral(phi, r, 1.0, rel_tol=1e-9,
                                                start_n=64, max_n=1024)
            ratio = 4 * b1.value / (2 * aa.value)
            defect = abs(ratio - math.cos(phi))
            defects.append(defect)
            if r == rs[-1]:
                rows.append(
                    _tol_row(f"ratio (aN-aS)/(2aa) phi={phi:.4f} r={r:g}",
                             math.cos(phi), ratio, 0.1)
                )
        decreasing = all(a > b for a, b in zip(defects, defects[1:]))
        rows.append(
            CheckRow(
                f"ratio defect decreasing phi={phi:.4f} over r={list(rs)}",
                "strictly decreasing",
                "[" + ", ".join(f"{d:.3e}" for d in defects) + "]",
                "ordering",
                decreasing,
            )
        )
    # beta agreement with the dense sweep oracle
    grid_n = 10**6
    for phi in phis:
        r = 1e-3
        cap = CapSpec(0.0, r, 1.0, "cap")
        u, v = 0.4 * r, 0.2 * r
        point = SpherePoint(-phi + u, v)
        north = direction_sweep_fraction(point, phi, lambda t, d: d >= 0, grid_n)
        beta1_oracle = (2 * math.pi * north - math.pi) / 2.0
        rows.append(
            _tol_row(f"beta1 vs sweep phi={phi:.4f}", beta1_oracle, beta1(v, phi), 1e-4)
        )
        cap_frac = direction_sweep_fraction(point, phi, cap, grid_n)
        rows.append(
            _tol_row(
                f"beta_sum vs sweep phi={phi:.4f}",
                2 * math.pi * cap_frac,
                beta_sum(u, v, phi, cap),
                1e-4,
            )
        )
    return rows


def suite_sphere_improvement(case: str, p: int = 0, q: int = 0, phi: float = 0.0,
                             r: float = 1e-3, n: int | None = None) -> list:
    """Sign certificate LL - SS > 3 * quadrature error for one construction."""
    if case == "peven":
        lawn = sphere_lawns.construct_peven(p, q, r)
    elif case == "irrational":
        lawn = sphere_lawns.construct_irrational(phi, r, n)
    elif case == "podd":
        lawn = sphere_lawns.construct_podd(p, q, r)
    else:
        raise ValueError(f"unknown improvement case {case!r}")
    result = sphere_lawns.ll_minus_ss(lawn)
    label = f"{case} p={p} q={q} phi={lawn.jump_phi:.4f} r={r:g}"
    return [
        _bound_row(f"LL-SS > 3*err for {label}", 3.0 * result.error, result.value, ">="),
        CheckRow(
            f"LL-SS value for {label}",
            "> 0",
            repr(result.value),
            repr(result.error),
            result.value > 0,
        ),
    ]


SUITES = {
    "circle-exact": suite_circle_exact,
    "circle-orbit": suite_circle_orbit,
    "diophantine": suite_diophantine,
    "sphere-asymptotics": suite_sphere_asymptotics,
    "sphere-improvement": suite_sphere_improvement,
}


def run_suite(name: str, **kwargs) -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
