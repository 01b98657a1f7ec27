"""Cogged-hemisphere lawns: constructions, membership, Monte Carlo, quadrature.

A cogged lawn is the southern hemisphere with small caps added above the
equator and their antipodal cups removed below it, arranged so that a jump of
the design angle phi can connect caps to caps (and cups to cups) but never a
cap to a cup.  The retention gain over the plain hemisphere reduces to a
combination of two families of integrals over a single cap:

    pair integral      integral of (beta1 + beta2) ds   (jumps cap -> cap)
    beta1 integral     integral of beta1 ds             (equator crossing)

with aS = pi*area - 2*I_beta1, aN = pi*area + 2*I_beta1, and the certified
quantity  LL - SS = 2*AA_total - 2*sum(aN - aS)  up to one uniform positive
normalization constant (start-density and direction-density factors are
omitted from every entry alike, so signs and ratios are meaningful and
absolute values are not).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .sphere_geom import (
    CapSpec,
    NumericConvergenceError,
    SpherePoint,
    SphericalGeometryError,
    beta_sum_arrays,
    jump_arrays,
)

__all__ = [
    "CoggedLawn",
    "BrTable",
    "PairEntry",
    "CapEntry",
    "ImprovementResult",
    "LawnValidityError",
    "QuadratureConvergenceError",
    "hemisphere",
    "construct_peven",
    "construct_irrational",
    "construct_podd",
    "membership",
    "max_valid_radius",
    "retention_mc",
    "br_quadrature",
    "br_pair_integral",
    "br_beta1_integral",
    "cap_area",
    "compute_br_table",
    "ll_minus_ss",
    "lawn_to_json",
    "lawn_from_json",
    "results_csv_row",
]

TWO_PI = 2.0 * math.pi
_ADJACENCY_TOL = 1e-9
_SAFETY_FACTOR = 0.9


class LawnValidityError(ValueError):
    """A construction constraint failed; carries the constraint and worst pair."""

    def __init__(self, message, constraint=None, pair=None):
        super().__init__(message)
        self.constraint = constraint
        self.pair = pair


class QuadratureConvergenceError(NumericConvergenceError):
    """Quadrature refinement failed to reach its relative tolerance."""


@dataclass(frozen=True)
class CoggedLawn:
    """Southern hemisphere plus caps above the equator minus antipodal cups.

    `case` records which construction produced the lawn ('peven',
    'irrational', 'podd' or 'hemisphere'); the improvement bookkeeping
    depends on it.  Caps may carry scale 0 (placeholder positions that hold
    no region).
    """

    caps: tuple
    cups: tuple
    jump_phi: float
    case: str
    p: int = 0
    q: int = 0
    n: int = 0

    def __post_init__(self):
        if len(self.caps) != len(self.cups):
            raise ValueError("caps and cups must pair up")
        for cap, cup in zip(self.caps, self.cups):
            anti = cap.antipode()
            if (
                abs(_wrap_pm_pi(anti.center_theta - cup.center_theta)) > 1e-12
                or abs(anti.radius_r - cup.radius_r) > 1e-15
                or abs(anti.scale_s - cup.scale_s) > 1e-15
                or cup.polarity != "cup"
            ):
                raise ValueError("cups must be the exact antipodes of the caps")

    @property
    def active_caps(self):
        return tuple(c for c in self.caps if c.scale_s > 0)

    def contains(self, theta, delta):
        """Vectorized membership: south of the equator minus cups, or in a cap."""
        theta = np.asarray(theta, dtype=float)
        delta = np.asarray(delta, dtype=float)
        in_cap = np.zeros(theta.shape, dtype=bool)
        for cap in self.caps:
            if cap.scale_s > 0:
                in_cap |= cap.contains(theta, delta)
        in_cup = np.zeros(theta.shape, dtype=bool)
        for cup in self.cups:
            if cup.scale_s > 0:
                in_cup |= cup.contains(theta, delta)
        return np.where(delta < 0, ~in_cup, in_cap)

    def adjacency(self):
        """Unordered pairs of active-cap indices at centre distance jump_phi."""
        pairs = []
        caps = self.caps
        for i in range(len(caps)):
            if caps[i].scale_s == 0:
                continue
            for j in range(i + 1, len(caps)):
                if caps[j].scale_s == 0:
                    continue
                d = _equator_distance(caps[i].center_theta, caps[j].center_theta)
                if abs(d - self.jump_phi) <= _ADJACENCY_TOL:
                    pairs.append((i, j))
        return tuple(pairs)


def membership(lawn: CoggedLawn, x: SpherePoint) -> bool:
    """Point membership; the equator itself belongs to the lawn only under a cap."""
    return bool(lawn.contains(np.array([x.theta]), np.array([x.delta]))[0])


def _wrap_pm_pi(a: float) -> float:
    return (a + math.pi) % TWO_PI - math.pi


def _equator_distance(theta_a: float, theta_b: float) -> float:
    return abs(_wrap_pm_pi(theta_a - theta_b))


def hemisphere(phi: float) -> CoggedLawn:
    """The plain southern hemisphere as a cogged lawn with no cogs."""
    return CoggedLawn(caps=(), cups=(), jump_phi=float(phi), case="hemisphere")


# -- validity ------------------------------------------------------------------


def _region_list(caps):
    """(center, label) for every active cap and its cup."""
    regions = []
    for idx, cap in enumerate(caps):
        if cap.scale_s == 0:
            continue
        regions.append((cap.center_theta, "cap", idx))
        regions.append(((cap.center_theta + math.pi) % TWO_PI, "cup", idx))
    return regions


def max_valid_radius(cap_centers, scales, phi: float) -> float:
    """Largest safe cog radius for caps at the given equatorial azimuths.

    Constraints: no two regions overlap (d > 2r over all pairs), no jump can
    link a cap to a cup (|d - phi| > 2r over cap/cup pairs), and no
    same-polarity pair accidentally sits at jump distance without being a
    designed adjacency (|d - phi| > 2r over non-adjacent same-polarity
    pairs).  A 0.9 safety factor keeps the quadrature away from the margins.
    """
    regions = []
    for theta, s in zip(cap_centers, scales):
        if s > 0:
            regions.append((theta, "cap"))
            regions.append(((theta + math.pi) % TWO_PI, "cup"))
    bound = math.inf
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            d = _equator_distance(regions[i][0], regions[j][0])
            bound = min(bound, d / 2.0)
            mixed = regions[i][1] != regions[j][1]
            gap = abs(d - phi)
            if mixed:
                bound = min(bound, gap / 2.0)
            elif gap > _ADJACENCY_TOL:
                # non-adjacent same-polarity pair must stay out of jump range
                bound = min(bound, gap / 2.0)
    return bound * _SAFETY_FACTOR


def _validate(lawn: CoggedLawn):
    """Audit all pairwise constraints; raise naming the worst offender."""
    regions = _region_list(lawn.caps)
    r = max((c.radius_r for c in lawn.caps if c.scale_s > 0), default=0.0)
    phi = lawn.jump_phi
    worst = None
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            ti, ki, ii = regions[i]
            tj, kj, jj = regions[j]
            d = _equator_distance(ti, tj)
            if d <= 2 * r:
                raise LawnValidityError(
                    f"regions overlap: {ki} {ii} and {kj} {jj} at distance {d:.6g} <= 2r",
                    constraint="overlap",
                    pair=((ki, ii), (kj, jj)),
                )
            gap = abs(d - phi)
            if gap <= 2 * r and (ki != kj or gap > _ADJACENCY_TOL):
                label = "cap-cup reachability" if ki != kj else "accidental adjacency"
                if worst is None or gap < worst[0]:
                    worst = (gap, label, ((ki, ii), (kj, jj)), d)
    if worst is not None:
        gap, label, pair, d = worst
        raise LawnValidityError(
            f"{label}: {pair[0]} and {pair[1]} at distance {d:.6g}, |d - phi| = {gap:.3g} <= 2r",
            constraint=label,
            pair=pair,
        )


# -- constructions -------------------------------------------------------------


def construct_peven(p: int, q: int, r: float) -> CoggedLawn:
    """Cogged lawn for jump phi = p*pi/q with p even: q equal caps on the jump
    orbit around the equator, alternating with their antipodal cups."""
    if p <= 0 or p % 2 != 0:
        raise ValueError("p must be a positive even integer")
    if math.gcd(p, q) != 1:
        raise ValueError("p/q must be reduced")
    phi = p * math.pi / q
    if not 0 < phi < math.pi / 2:
        raise ValueError("jump p*pi/q must lie in (0, pi/2)")
    centers = [(k * phi) % TWO_PI for k in range(q)]
    rmax = max_valid_radius(centers, [1.0] * q, phi)
    if not 0 < r <= rmax:
        raise LawnValidityError(
            f"cog radius {r} exceeds the validity bound {rmax:.6g} "
            f"(overlap or cap-cup reachability would fail)",
            constraint="radius bound",
        )
    caps = tuple(CapSpec(c, r, 1.0, "cap") for c in centers)
    lawn = CoggedLawn(
        caps=caps, cups=tuple(c.antipode() for c in caps),
        jump_phi=phi, case="peven", p=p, q=q,
    )
    _validate(lawn)
    return lawn


def construct_irrational(phi: float, r: float, n: int | None = None) -> CoggedLawn:
    """Cogged lawn for irrational phi/pi: an open chain of n equal caps.

    n defaults to ceil(1/(1 - cos(phi))) + 1, the smallest count for which the
    chain's 2(n-1) cap-to-cap jump terms outweigh the 2n equator-crossing
    terms.  The caller asserts irrationality of phi/pi; floats cannot prove
    it.
    """
    phi = float(phi)
    if not 0 < phi < math.pi / 2:
        raise ValueError("phi must lie in (0, pi/2)")
    if n is None:
        n = math.ceil(1.0 / (1.0 - math.cos(phi))) + 1
    if n < 2:
        raise ValueError("need at least two caps")
    centers = [(k * phi) % TWO_PI for k in range(n)]
    rmax = max_valid_radius(centers, [1.0] * n, phi)
    if not 0 < r <= rmax:
        offender = _minimal_offending_pair(centers, phi, r)
        raise LawnValidityError(
            f"cog radius {r} exceeds the validity bound {rmax:.6g}; "
            f"tightest pair: {offender}",
            constraint="radius bound",
            pair=offender,
        )
    caps = tuple(CapSpec(c, r, 1.0, "cap") for c in centers)
    lawn = CoggedLawn(
        caps=caps, cups=tuple(c.antipode() for c in caps),
        jump_phi=phi, case="irrational", n=n,
    )
    _validate(lawn)
    return lawn


def _minimal_offending_pair(centers, phi, r):
    regions = []
    for idx, theta in enumerate(centers):
        regions.append((theta, "cap", idx))
        regions.append(((theta + math.pi) % TWO_PI, "cup", idx))
    worst = None
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            d = _equator_distance(regions[i][0], regions[j][0])
            margin = min(d / 2.0, abs(d - phi) / 2.0) if abs(d - phi) > _ADJACENCY_TOL or regions[i][1] != regions[j][1] else d / 2.0
            if worst is None or margin < worst[0]:
                worst = (margin, (regions[i][1], regions[i][2]), (regions[j][1], regions[j][2]))
    return worst[1:] if worst else None


def construct_podd(p: int, q: int, r: float) -> CoggedLawn:
    """Cogged lawn for jump phi = p*pi/q with p odd, 1 < p < q/2.

    Caps sit at azimuths j*phi for 0 <= j <= q with elevation contraction
    sin(j*pi/q); the endpoints j = 0 and j = q get scale 0 and hold no
    region, which is what lets the chain close up antipodally despite the
    odd numerator.  Cap widths stay 2r regardless of contraction.
    """
    if p % 2 == 0 or p <= 1:
        raise ValueError("p must be an odd integer greater than 1")
    if math.gcd(p, q) != 1:
        raise ValueError("p/q must be reduced")
    if not p < q / 2:
        raise ValueError(f"need p < q/2 for a jump below pi/2, got p={p}, q={q}")
    phi = p * math.pi / q
    centers = [(j * phi) % TWO_PI for j in range(q + 1)]
    scales = [math.sin(j * math.pi / q) for j in range(q + 1)]
    scales[0] = 0.0
    scales[q] = 0.0
    rmax = max_valid_radius(centers, scales, phi)
    if not 0 < r <= rmax:
        raise LawnValidityError(
            f"cog radius {r} exceeds the validity bound {rmax:.6g}",
            constraint="radius bound",
        )
    caps = tuple(
        CapSpec(c, r, s, "cap") for c, s in zip(centers, scales)
    )
    lawn = CoggedLawn(
        caps=caps, cups=tuple(c.antipode() for c in caps),
        jump_phi=phi, case="podd", p=p, q=q,
    )
    _validate(lawn)
    return lawn


# -- Monte Carlo ----------------------------------------------------------------


def retention_mc(lawn: CoggedLawn, phi: float, n_samples: int, seed: int, batch: int = 1 << 20):
    """Monte Carlo retention estimate: (fraction retained, binomial std error).

    Start points are rejection-sampled uniformly on the lawn from uniform
    sphere proposals; directions are uniform.  Each batch consumes its own
    counter-based substream (Philox via spawned SeedSequence children), so
    the result is deterministic for a fixed seed regardless of batching.
    """
    if n_samples < 1:
        raise ValueError("need at least one sample")
    root = np.random.SeedSequence(seed)
    hits = 0
    done = 0
    empty_batches = 0
    batch_index = 0
    while done < n_samples:
        child = root.spawn(1)[0]
        rng = np.random.Generator(np.random.Philox(child))
        z = rng.uniform(-1.0, 1.0, batch)
        theta = rng.uniform(0.0, TWO_PI, batch)
        delta = np.arcsin(z)
        keep = lawn.contains(theta, delta)
        take = min(int(np.count_nonzero(keep)), n_samples - done)
        if take == 0:
            empty_batches += 1
            if empty_batches > 1000:
                raise RuntimeError("rejection sampling failed: lawn measure is near zero")
            continue
        idx = np.flatnonzero(keep)[:take]
        omega = rng.uniform(0.0, TWO_PI, take)
        t2, d2 = jump_arrays(theta[idx], delta[idx], omega, phi)
        hits += int(np.count_nonzero(lawn.contains(t2, d2)))
        done += take
        batch_index += 1
    p_hat = hits / n_samples
    std_err = math.sqrt(max(p_hat * (1.0 - p_hat), 1e-300) / n_samples)
    return p_hat, std_err


# -- quadrature -----------------------------------------------------------------


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    level: int


def _cap_quad_fixed(f, r: float, s: float, n: int) -> float:
    """Tensor Gauss-Legendre integral of f(u, v) * cos(v) over a scaled cap.

    Outer variable substituted v = s*r*sin(t) so the sqrt vanishing of the
    cap width at the top edge becomes smooth; the inner u-range is solved
    from the boundary per node: cos(u_max) = cos(r)/cos(v/s).
    """
    nodes, weights = np.polynomial.legendre.leggauss(n)
    t = (nodes + 1.0) * (math.pi / 4.0)
    wt = weights * (math.pi / 4.0)
    v = s * r * np.sin(t)
    dv_dt = s * r * np.cos(t)
    u_max = np.arccos(np.clip(math.cos(r) / np.cos(v / s), -1.0, 1.0))
    u_grid = u_max[:, None] * nodes[None, :]
    wu_grid = u_max[:, None] * weights[None, :]
    v_grid = np.broadcast_to(v[:, None], u_grid.shape)
    vals = f(u_grid, v_grid)
    if np.any(np.isnan(vals)):
        raise SphericalGeometryError("integrand undefined inside the cap region")
    inner = np.sum(wu_grid * vals * np.cos(v_grid), axis=1)
    return float(np.sum(wt * dv_dt * inner))


def _cap_quadrature(f, r: float, s: float, rel_tol: float = 1e-4,
                    start_n: int = 16, max_n: int = 256) -> QuadratureResult:
    if s == 0.0:
        return QuadratureResult(0.0, 0.0, 0)
    prev = None
    n = start_n
    diffs = []
    while n <= max_n:
        val = _cap_quad_fixed(f, r, s, n)
        if prev is not None:
            err = abs(val - prev)
            diffs.append((n, err))
            if err <= rel_tol * max(abs(val), 1e-300):
                return QuadratureResult(val, err, n)
        prev = val
        n *= 2
    raise QuadratureConvergenceError(
        f"cap quadrature did not converge to rel {rel_tol} by n={max_n}: "
        f"levels {diffs}"
    )


def br_pair_integral(phi: float, r: float, s_source: float, t_target: float,
                     rel_tol: float = 1e-4, start_n: int = 16,
                     max_n: int = 256) -> QuadratureResult:
    """Integral of (beta1 + beta2) over the s-scaled source cap, targeting a
    t-scaled cap at centre distance phi (one jump direction)."""
    target = CapSpec(center_theta=0.0, radius_r=r, scale_s=t_target, polarity="cap")

    def f(u, v):
        return beta_sum_arrays(u, v, phi, target)

    return _cap_quadrature(f, r, s_source, rel_tol=rel_tol, start_n=start_n, max_n=max_n)


def br_beta1_integral(phi: float, r: float, s: float, rel_tol: float = 1e-4,
                      start_n: int = 16, max_n: int = 256) -> QuadratureResult:
    """Integral of beta1 = arcsin(tan v cot phi) over an s-scaled cap."""
    cot = 1.0 / math.tan(phi)

    def f(u, v):
        return np.arcsin(np.clip(np.tan(v) * cot, -1.0, 1.0))

    return _cap_quadrature(f, r, s, rel_tol=rel_tol, start_n=start_n, max_n=max_n)


def cap_area(r: float, s: float, rel_tol: float = 1e-4) -> QuadratureResult:
    def f(u, v):
        return np.ones_like(u)

    return _cap_quadrature(f, r, s, rel_tol=rel_tol)


@dataclass(frozen=True)
class PairEntry:
    i: int
    j: int
    scale_i: float
    scale_j: float
    value: float
    error: float


@dataclass(frozen=True)
class CapEntry:
    i: int
    scale: float
    area: float
    beta1_integral: float
    aS: float
    aN: float
    aN_minus_aS: float
    error: float


@dataclass(frozen=True)
class BrTable:
    """Per-pair and per-cap jump-probability integrals for a cogged lawn.

    All entries omit the same uniform normalization (start density over the
    lawn and the 1/2pi direction density), so only signs and ratios carry
    meaning.
    """

    aa_pairs: tuple
    cap_entries: tuple
    note: str = "raw integrals; uniform normalization constant omitted"

    @property
    def aa_total(self) -> float:
        """Total cap-to-cap mass over ordered pairs: both jump directions."""
        return 2.0 * sum(p.value for p in self.aa_pairs)

    @property
    def an_minus_as_total(self) -> float:
        return sum(c.aN_minus_aS for c in self.cap_entries)

    @property
    def propagated_error(self) -> float:
        pair_err = 2.0 * sum(p.error for p in self.aa_pairs)
        cap_err = sum(c.error for c in self.cap_entries)
        return 2.0 * pair_err + 2.0 * cap_err


def br_quadrature(lawn: CoggedLawn, selector, rel_tol: float = 1e-4):
    """Single BrTable entry: selector ('pair', i, j) or ('cap', i)."""
    if selector[0] == "pair":
        _, i, j = selector
        ci, cj = lawn.caps[i], lawn.caps[j]
        res = br_pair_integral(lawn.jump_phi, ci.radius_r, ci.scale_s, cj.scale_s, rel_tol)
        return PairEntry(i, j, ci.scale_s, cj.scale_s, res.value, res.error)
    if selector[0] == "cap":
        _, i = selector
        return _cap_entry(lawn, i, rel_tol)
    raise ValueError(f"unknown selector {selector!r}")


def _cap_entry(lawn: CoggedLawn, i: int, rel_tol: float = 1e-4) -> CapEntry:
    cap = lawn.caps[i]
    area = cap_area(cap.radius_r, cap.scale_s, rel_tol)
    b1 = br_beta1_integral(lawn.jump_phi, cap.radius_r, cap.scale_s, rel_tol)
    a_s = math.pi * area.value - 2.0 * b1.value
    a_n = math.pi * area.value + 2.0 * b1.value
    err = math.pi * area.error + 2.0 * b1.error
    return CapEntry(
        i=i, scale=cap.scale_s, area=area.value, beta1_integral=b1.value,
        aS=a_s, aN=a_n, aN_minus_aS=4.0 * b1.value, error=4.0 * b1.error,
    )


_EXPECTED_COUNTS = {
    "peven": lambda lawn: (lawn.q, lawn.q),
    "irrational": lambda lawn: (lawn.n, lawn.n - 1),
    "podd": lambda lawn: (lawn.q - 1, lawn.q - 2),
    "hemisphere": lambda lawn: (0, 0),
}


def compute_br_table(lawn: CoggedLawn, rel_tol: float = 1e-4) -> BrTable:
    """All pair and cap entries for a lawn, deduplicating congruent geometries.

    Pair integrals are symmetric under swapping source and target (jump
    inversion is measure preserving), so pairs are keyed on the unordered
    scale pair; caps are keyed on their scale.
    """
    if lawn.case not in _EXPECTED_COUNTS:
        raise ValueError(f"unknown lawn provenance {lawn.case!r}")
    exp_caps, exp_pairs = _EXPECTED_COUNTS[lawn.case](lawn)
    active = [i for i, c in enumerate(lawn.caps) if c.scale_s > 0]
    pairs = lawn.adjacency()
    if len(active) != exp_caps or len(pairs) != exp_pairs:
        raise LawnValidityError(
            f"{lawn.case} lawn expected {exp_caps} active caps and {exp_pairs} "
            f"adjacent pairs, found {len(active)} and {len(pairs)}",
            constraint="adjacency bookkeeping",
        )
    pair_cache: dict = {}
    pair_entries = []
    for i, j in pairs:
        si, sj = lawn.caps[i].scale_s, lawn.caps[j].scale_s
        key = tuple(sorted((round(si, 12), round(sj, 12))))
        if key not in pair_cache:
            pair_cache[key] = br_pair_integral(
                lawn.jump_phi, lawn.caps[i].radius_r, si, sj, rel_tol
            )
        res = pair_cache[key]
        pair_entries.append(PairEntry(i, j, si, sj, res.value, res.error))
    cap_cache: dict = {}
    cap_entries = []
    for i in active:
        key = round(lawn.caps[i].scale_s, 12)
        if key not in cap_cache:
            cap_cache[key] = _cap_entry(lawn, i, rel_tol)
        base = cap_cache[key]
        cap_entries.append(
            CapEntry(i, base.scale, base.area, base.beta1_integral,
                     base.aS, base.aN, base.aN_minus_aS, base.error)
        )
    return BrTable(aa_pairs=tuple(pair_entries), cap_entries=tuple(cap_entries))


@dataclass(frozen=True)
class ImprovementResult:
    """Sign-certified LL - SS difference with propagated quadrature error."""

    value: float
    error: float
    table: BrTable
    case: str

    @property
    def certified_positive(self) -> bool:
        return self.value > 3.0 * self.error


def ll_minus_ss(lawn: CoggedLawn, rel_tol: float = 1e-4) -> ImprovementResult:
    """Retention difference (lawn minus hemisphere), up to a positive constant.

    LL - SS = 2*AA_total - 2*(AN - AS)_total; the per-case pair and cap
    counts are validated against the lawn's provenance before combining.
    """
    table = compute_br_table(lawn, rel_tol)
    value = 2.0 * table.aa_total - 2.0 * table.an_minus_as_total
    return ImprovementResult(value=value, error=table.propagated_error, table=table,
                             case=lawn.case)


# -- serialization ----------------------------------------------------------------


def lawn_to_json(lawn: CoggedLawn) -> dict:
    return {
        "case": lawn.case,
        "phi": lawn.jump_phi,
        "r": lawn.caps[0].radius_r if lawn.caps else None,
        "p": lawn.p,
        "q": lawn.q,
        "n": lawn.n,
        "caps": [
            {"theta": c.center_theta, "r": c.radius_r, "s": c.scale_s} for c in lawn.caps
        ],
    }


def lawn_from_json(obj: dict) -> CoggedLawn:
    caps = tuple(
        CapSpec(c["theta"], c["r"], c["s"], "cap") for c in obj["caps"]
    )
    lawn = CoggedLawn(
        caps=caps,
        cups=tuple(c.antipode() for c in caps),
        jump_phi=obj["phi"],
        case=obj["case"],
        p=obj.get("p", 0),
        q=obj.get("q", 0),
        n=obj.get("n", 0),
    )
    if lawn.case != "hemisphere":
        _validate(lawn)
    return lawn


def results_csv_row(lawn: CoggedLawn, improvement: ImprovementResult,
                    mc_retention=None, mc_stderr=None, seed=None):
    """One row of the sphere results CSV: (case, p, q_or_n, phi, r, aa_total,
    aN_minus_aS_total, ll_minus_ss, stderr, mc_retention, mc_stderr, seed)."""
    t = improvement.table
    return [
        lawn.case,
        str(lawn.p or ""),
        str(lawn.q or lawn.n or ""),
        repr(lawn.jump_phi),
        repr(lawn.caps[0].radius_r) if lawn.caps else "",
        repr(t.aa_total),
        repr(t.an_minus_as_total),
        repr(improvement.value),
        repr(improvement.error),
        "" if mc_retention is None else repr(mc_retention),
        "" if mc_stderr is None else repr(mc_stderr),
        "" if seed is None else str(seed),
    ]
