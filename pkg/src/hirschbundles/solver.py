"""Root solver for the defining equation T(f)(x) = A(x, theta).

Writing D(x) = T(f)(x) - A(x, theta), the solution m_theta(f) is the
unique zero of D on [a, S].  The solver scans D on a configurable grid to
count its sign structure: exactly one crossing is located (exactly, when
the segment algebra is polynomial; by bisection otherwise), zero
crossings mean theta is not admissible, and several crossings mean the
configuration left the uniqueness hypotheses, which is reported rather
than silently resolved.

The identically-zero function is special-cased to m = support_start with
a success status: a zero record has zero impact at every admissible
theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DomainError, NonPositiveThetaError, NoRootError, NonUniqueError
from .funcspace import RankFrequencyFunction
from .operators import OperatorKind, OperatorSpec, TransformedFunction, apply
from .thresholds import DecreasingLinearThreshold, PowerThreshold, ThresholdFamily

# |D(S)| below this (relative to the scanned magnitude) counts as a root
# at the right endpoint: the closed endpoint belongs to the domain.
_BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class SolveConfig:
    abs_tol_x: float = 1e-10
    scan_points: int = 1024
    exact_when_possible: bool = True

    def __post_init__(self) -> None:
        if not self.abs_tol_x > 0:
            raise ValueError("abs_tol_x must be positive")
        if self.scan_points < 16:
            raise ValueError("scan_points must be at least 16")


DEFAULT_CONFIG = SolveConfig()


class SolveStatus(Enum):
    EXACT_SEGMENT = "ExactSegment"
    BISECTION = "Bisection"
    NO_ROOT = "NoRoot"
    NON_UNIQUE = "NonUnique"


@dataclass(frozen=True)
class BundleEntry:
    theta: float
    m: float
    status: SolveStatus


@dataclass(frozen=True)
class BundleSample:
    """A sampled bundle: the map theta -> m_theta(f) over a theta grid."""

    entries: tuple[BundleEntry, ...]
    function_id: str
    operator_kind: OperatorKind
    threshold: str


def _as_transformed(
    f: RankFrequencyFunction, op: OperatorSpec | TransformedFunction
) -> TransformedFunction:
    if isinstance(op, TransformedFunction):
        return op
    return apply(op, f)


def solve_bundle_point(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    cfg: SolveConfig = DEFAULT_CONFIG,
    *,
    x_window: tuple[float, float] | None = None,
) -> tuple[float, SolveStatus]:
    """Solve T(f)(x) = A(x, theta) for x.

    Returns (m, status) on success; raises NoRootError when theta is not
    admissible and NonUniqueError when the sign scan finds more than one
    crossing.  ``x_window`` restricts the search to a sub-interval of
    [a, S] (the transform still uses the full function).
    """
    tf = _as_transformed(f, op)
    return solve_transformed(tf, family, theta, cfg, x_window=x_window)


def solve_transformed(
    tf: TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    cfg: SolveConfig = DEFAULT_CONFIG,
    *,
    x_window: tuple[float, float] | None = None,
) -> tuple[float, SolveStatus]:
    if not theta > 0:
        raise NonPositiveThetaError(f"theta must be positive, got {theta}")
    if tf.source.is_zero():
        return tf.origin, SolveStatus.EXACT_SEGMENT
    lo, hi = x_window if x_window is not None else (tf.origin, tf.support_end)
    if not (tf.origin <= lo < hi <= tf.support_end):
        raise ValueError(f"x_window [{lo}, {hi}] not inside [{tf.origin}, {tf.support_end}]")
    if isinstance(family, DecreasingLinearThreshold) and family.ceiling <= hi:
        raise DomainError(
            f"threshold ceiling {family.ceiling} must exceed the search domain end {hi}"
        )

    xs = np.linspace(lo, hi, cfg.scan_points)
    dvals = tf.eval_many(xs) - family.value_many(xs, theta)
    roots = _root_evidence(xs, dvals)
    if len(roots) > 1:
        raise NonUniqueError(
            f"{len(roots)} sign structures found for theta={theta}; solution not unique"
        )
    if not roots:
        scale = max(1.0, float(np.abs(dvals).max()))
        if hi == tf.support_end and abs(float(dvals[-1])) <= _BOUNDARY_TOL * scale:
            return hi, SolveStatus.EXACT_SEGMENT
        raise NoRootError(f"theta={theta} is not admissible: no sign change on [{lo}, {hi}]")
    kind, payload = roots[0]
    if kind == "exact":
        return payload, SolveStatus.EXACT_SEGMENT
    i = payload
    blo, bhi = float(xs[i]), float(xs[i + 1])
    dlo = float(dvals[i])
    if cfg.exact_when_possible:
        exact = _exact_segment_root(tf, family, theta, blo, bhi)
        if exact is not None:
            return exact, SolveStatus.EXACT_SEGMENT
    return _bisect(tf, family, theta, blo, bhi, dlo, cfg.abs_tol_x), SolveStatus.BISECTION


def _root_evidence(xs: np.ndarray, dvals: np.ndarray) -> list[tuple[str, float | int]]:
    """Exact grid zeros plus adjacent strict sign changes.

    A run of two or more exact zeros means D vanishes on an interval and
    is treated as non-uniqueness.
    """
    roots: list[tuple[str, float | int]] = []
    zero = dvals == 0.0
    i = 0
    n = len(xs)
    while i < n:
        if zero[i]:
            j = i
            while j + 1 < n and zero[j + 1]:
                j += 1
            if j > i:
                raise NonUniqueError("the defining difference vanishes on a subinterval")
            roots.append(("exact", float(xs[i])))
            i = j + 1
        else:
            i += 1
    for i in range(n - 1):
        if not zero[i] and not zero[i + 1] and (dvals[i] > 0) != (dvals[i + 1] > 0):
            roots.append(("bracket", i))
    return roots


def _bisect(
    tf: TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    lo: float,
    hi: float,
    dlo: float,
    tol: float,
) -> float:
    lo_positive = dlo > 0
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2.0
        dmid = tf.eval(mid) - family.value(mid, theta)
        if dmid == 0.0:
            return mid
        if (dmid > 0) == lo_positive:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _exact_segment_root(
    tf: TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    lo: float,
    hi: float,
) -> float | None:
    """Solve the bracketed segment polynomial exactly where one exists.

    Covered: Identity against power exponents 1 and 2, Averaging against
    exponent 1 via the cleared-denominator quadratic
    I(f)(x) = (x - a) * A(x, theta).  Returns None when the configuration
    is not polynomial or the algebra fails to isolate a single in-bracket
    root (the caller then bisects).
    """
    if not isinstance(family, PowerThreshold):
        return None
    p, shift = family.p, family.shift
    kind = tf.kind
    if kind is OperatorKind.IDENTITY and p not in (1.0, 2.0):
        return None
    if kind is OperatorKind.AVERAGING and p != 1.0:
        return None
    if kind is OperatorKind.INTEGRAL:
        return None
    f = tf.source
    a = tf.origin
    xs, ys, slopes, cums = f.xs, f.ys, f.slopes, f.cumulative
    i_lo = max(int(np.searchsorted(xs, lo, side="right")) - 1, 0)
    i_hi = min(int(np.searchsorted(xs, hi, side="left")), len(xs) - 1)
    span_eps = 1e-12 * (tf.support_end - a + 1.0)
    candidates: list[float] = []
    for i in range(i_lo, i_hi):
        x0, y0, s = float(xs[i]), float(ys[i]), float(slopes[i])
        seg_lo = max(float(xs[i]), lo)
        seg_hi = min(float(xs[i + 1]), hi)
        if kind is OperatorKind.IDENTITY:
            if p == 1.0:
                c1 = s - theta
                c0 = y0 - s * x0 + theta * shift
                roots = _linear_roots(c1, c0)
            else:
                c2 = -theta
                c1 = s + 2.0 * theta * shift
                c0 = y0 - s * x0 - theta * shift * shift
                roots = _quadratic_roots(c2, c1, c0)
        else:  # Averaging, p == 1: I(f)(x) = theta * (x - shift) * (x - a)
            c2 = s / 2.0 - theta
            c1 = (y0 - s * x0) + theta * (a + shift)
            c0 = float(cums[i]) - y0 * x0 + s * x0 * x0 / 2.0 - theta * a * shift
            roots = _quadratic_roots(c2, c1, c0)
        for r in roots:
            if seg_lo - span_eps <= r <= seg_hi + span_eps:
                candidates.append(min(max(r, seg_lo), seg_hi))
    if len(candidates) != 1:
        return None
    root = candidates[0]
    # guard against algebra slips: the root must actually null D
    resid = abs(tf.eval(root) - family.value(root, theta))
    d_scale = abs(tf.eval(lo) - family.value(lo, theta)) + abs(
        tf.eval(hi) - family.value(hi, theta)
    )
    if resid > 1e-8 * (1.0 + d_scale):
        return None
    return root


def _linear_roots(c1: float, c0: float) -> list[float]:
    if c1 == 0.0:
        return []
    return [-c0 / c1]


def _quadratic_roots(c2: float, c1: float, c0: float) -> list[float]:
    if c2 == 0.0:
        return _linear_roots(c1, c0)
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    # numerically stable split: q = 0 only for the double root at zero
    q = -(c1 + math.copysign(sq, c1)) / 2.0
    if q == 0.0:
        return [0.0]
    return [q / c2, c0 / q]


def sample_bundle(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    theta_grid: Sequence[float],
    cfg: SolveConfig = DEFAULT_CONFIG,
    function_id: str | None = None,
) -> BundleSample:
    """Solve at every theta of a sorted positive grid; failures become statuses."""
    thetas = [float(t) for t in theta_grid]
    if any(t <= 0 for t in thetas):
        raise NonPositiveThetaError("theta grid values must be positive")
    if thetas != sorted(thetas):
        raise ValueError("theta grid must be sorted ascending")
    tf = _as_transformed(f, op)
    entries = []
    for theta in thetas:
        try:
            m, status = solve_transformed(tf, family, theta, cfg)
        except NoRootError:
            m, status = math.nan, SolveStatus.NO_ROOT
        except NonUniqueError:
            m, status = math.nan, SolveStatus.NON_UNIQUE
        entries.append(BundleEntry(theta=theta, m=m, status=status))
    return BundleSample(
        entries=tuple(entries),
        function_id=function_id if function_id is not None else f.digest(),
        operator_kind=tf.kind,
        threshold=family.describe(),
    )


def h_index(
    f: RankFrequencyFunction, theta: float = 1.0, cfg: SolveConfig = DEFAULT_CONFIG
) -> float:
    """Solution of f(x) = theta * x."""
    op = OperatorSpec(OperatorKind.IDENTITY, origin=f.support_start)
    m, _ = solve_bundle_point(f, op, PowerThreshold(p=1.0, shift=0.0), theta, cfg)
    return m


def g_index(
    f: RankFrequencyFunction, theta: float = 1.0, cfg: SolveConfig = DEFAULT_CONFIG
) -> float:
    """Solution of mu(f)(x) = theta * (x - a): the running average meets the line."""
    op = OperatorSpec(OperatorKind.AVERAGING, origin=f.support_start)
    m, _ = solve_bundle_point(f, op, PowerThreshold(p=1.0, shift=f.support_start), theta, cfg)
    return m


def kosmulski_index(
    f: RankFrequencyFunction,
    theta: float = 1.0,
    p: float = 2.0,
    cfg: SolveConfig = DEFAULT_CONFIG,
) -> float:
    """Solution of f(x) = theta * x**p."""
    op = OperatorSpec(OperatorKind.IDENTITY, origin=f.support_start)
    m, _ = solve_bundle_point(f, op, PowerThreshold(p=p, shift=0.0), theta, cfg)
    return m


def g_kosmulski_index(
    f: RankFrequencyFunction,
    theta: float = 1.0,
    p: float = 2.0,
    cfg: SolveConfig = DEFAULT_CONFIG,
) -> float:
    """Solution of mu(f)(x) = theta * (x - a)**p, the averaged power variant."""
    op = OperatorSpec(OperatorKind.AVERAGING, origin=f.support_start)
    m, _ = solve_bundle_point(f, op, PowerThreshold(p=p, shift=f.support_start), theta, cfg)
    return m


def polar_radius(
    f: RankFrequencyFunction, theta: float, cfg: SolveConfig = DEFAULT_CONFIG
) -> float:
    """Distance from the origin to the h-type intersection point.

    The solution point (m, theta * m) of the h-setting lies at distance
    m * sqrt(1 + theta**2) from the origin.
    """
    return h_index(f, theta, cfg) * math.sqrt(1.0 + theta * theta)
