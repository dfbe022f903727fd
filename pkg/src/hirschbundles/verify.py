"""Executable property checks for Hirsch-type bundles.

Every theorem about the bundle theta -> m_theta(f) is a conditional, so
every check here verifies its hypothesis on the concrete inputs before
asserting the conclusion.  Trials whose hypothesis fails count as
vacuous, never as passes: a report comes back Vacuous when no trial ever
reached its conclusion, Fail when an asserted conclusion was violated,
and Pass otherwise.

The checks cover:

* root-side equivalences: the sign of D(x) = T(f)(x) - A(x, theta)
  locates the solution relative to x, with direction set by D's
  monotonicity;
* dominance order: pointwise order of transforms carries over to (or,
  for increasing D, reverses on) the solutions;
* theta monotonicity: solutions move against (decreasing D) or with
  (increasing D) the threshold parameter;
* the two gap bounds: the threshold gap at the solutions is bounded by
  the transform gap at the base solution, and vice versa, under the
  matching monotonicity hypotheses;
* pointwise and uniform convergence of bundles along perturbation
  sequences;
* the four impact axioms (zero-iff-zero, order preservation, strict
  prefix order, prefix equality);
* the sufficiency of the "D decreases for all admissible theta"
  hypothesis for the impact axioms.

A deliberately order-reversing configuration (a gently decreasing
function against a faster-decreasing linear threshold, so that D
increases) exercises every reversal branch and supplies the
counterexamples that the impact axioms are expected to reject.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BundleError,
    NoRootError,
    NonUniqueError,
    SingularAbscissaError,
)
from .funcspace import (
    PerturbMode,
    RankFrequencyFunction,
    eq_on_prefix,
    leq,
    lt_on_prefix,
    perturb,
    random_function,
)
from .operators import (
    Monotonicity,
    OperatorKind,
    OperatorSpec,
    TransformedFunction,
    apply,
    check_operator_contract,
)
from .reporting import Counterexample, Verdict, VerificationReport
from .solver import DEFAULT_CONFIG, SolveConfig, solve_transformed
from .thresholds import (
    DecreasingLinearThreshold,
    PowerThreshold,
    ThresholdFamily,
)

_D_GRID = 1024
_D_TOL = 1e-12
# sign threshold for a difference value to fire a strict implication
_SIGN_EPS = 1e-9
# solver-noise margin for comparisons between located solutions
_X_EPS = 1e-8
_STRICT_GAP = 1e-12


# --------------------------------------------------------------------------
# hypothesis profiling
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HypothesisProfile:
    """Monotonicity triple selecting which theorem branch applies."""

    t_monotonicity: Monotonicity
    a_monotonicity_in_x: Monotonicity
    d_monotonicity: Monotonicity


def classify_difference(
    tf: TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    x_window: tuple[float, float] | None = None,
) -> Monotonicity:
    """Monotonicity of D = T(f) - A(., theta), never assumed.

    Certified analytically when the transform and threshold pull in
    opposite directions; sampled on a grid otherwise.
    """
    if x_window is None:
        if tf.monotonicity is Monotonicity.DECREASING and family.increasing_in_x:
            return Monotonicity.DECREASING
        if tf.monotonicity is Monotonicity.INCREASING and not family.increasing_in_x:
            return Monotonicity.INCREASING
    lo, hi = x_window if x_window is not None else (tf.origin, tf.support_end)
    xs = np.linspace(lo, hi, _D_GRID)
    d = tf.eval_many(xs) - family.value_many(xs, theta)
    diffs = np.diff(d)
    if bool((diffs <= _D_TOL).all()):
        return Monotonicity.DECREASING
    if bool((diffs >= -_D_TOL).all()):
        return Monotonicity.INCREASING
    return Monotonicity.NON_MONOTONE


def profile(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    theta: float,
) -> HypothesisProfile:
    tf = op if isinstance(op, TransformedFunction) else apply(op, f)
    a_mono = Monotonicity.INCREASING if family.increasing_in_x else Monotonicity.DECREASING
    return HypothesisProfile(
        t_monotonicity=tf.monotonicity,
        a_monotonicity_in_x=a_mono,
        d_monotonicity=classify_difference(tf, family, theta),
    )


def check_decreasing_difference(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    theta_grid: Sequence[float],
) -> bool:
    """True iff D decreases at every sampled theta (the impact-sufficiency test)."""
    tf = op if isinstance(op, TransformedFunction) else apply(op, f)
    return all(
        classify_difference(tf, family, theta) is Monotonicity.DECREASING
        for theta in theta_grid
    )


# --------------------------------------------------------------------------
# small construction helpers shared by checks and tests
# --------------------------------------------------------------------------


def zero_like(f: RankFrequencyFunction) -> RankFrequencyFunction:
    return RankFrequencyFunction([(f.support_start, 0.0), (f.support_end, 0.0)])


def multiplicative_sequence(
    f: RankFrequencyFunction, scale: float = 1.0, signed: bool = True
) -> Callable[[int], RankFrequencyFunction]:
    """n -> f * (1 + scale * (-1)**n / n) (or +scale/n when unsigned).

    The factor-zero member (scale = 1, n = 1, signed) is the zero
    function, built directly since perturbations stop short of -1.
    """

    def make(n: int) -> RankFrequencyFunction:
        eps = scale * ((-1.0) ** n) / n if signed else scale / n
        if eps <= -1.0:
            return zero_like(f)
        return perturb(f, PerturbMode.MULTIPLICATIVE, eps)

    return make


def additive_sequence(
    f: RankFrequencyFunction, scale: float = 1.0
) -> Callable[[int], RankFrequencyFunction]:
    def make(n: int) -> RankFrequencyFunction:
        return perturb(f, PerturbMode.ADDITIVE, scale / n)

    return make


def prefix_bump(
    f: RankFrequencyFunction, a_cut: float, a_end: float, height: float
) -> RankFrequencyFunction:
    """f plus a plateau of the given height on [a, a_cut], tapering to 0 at a_end.

    The result dominates f strictly on the prefix and equals it from
    a_end on; it stays decreasing because the taper only steepens f.
    """
    a, s = f.support_start, f.support_end
    if not (a < a_cut < a_end <= s):
        raise ValueError("need support_start < a_cut < a_end <= support_end")
    if height <= 0:
        raise ValueError("bump height must be positive")
    xs = sorted({x for x, _ in f.breakpoints} | {a_cut, a_end})

    def bump(x: float) -> float:
        if x <= a_cut:
            return height
        if x >= a_end:
            return 0.0
        return height * (a_end - x) / (a_end - a_cut)

    return RankFrequencyFunction([(x, f.eval(x) + bump(x)) for x in xs])


def flatten_tail(
    f: RankFrequencyFunction, a_cut: float, softening: float = 0.5
) -> RankFrequencyFunction:
    """Equal to f on [a, a_cut], then descending more slowly (factor 1 - softening).

    Keeps the function decreasing and non-negative for any softening in
    (0, 1); used to build pairs that agree on a prefix and diverge after.
    """
    a, s = f.support_start, f.support_end
    if not (a < a_cut < s):
        raise ValueError("a_cut must be interior")
    if not 0.0 < softening < 1.0:
        raise ValueError("softening must lie in (0, 1)")
    pivot = f.eval(a_cut)
    keep = 1.0 - softening
    pts = [(x, y) for x, y in f.breakpoints if x < a_cut]
    pts.append((a_cut, pivot))
    pts.extend(
        (x, pivot + keep * (y - pivot)) for x, y in f.breakpoints if x > a_cut
    )
    return RankFrequencyFunction(pts)


@dataclass(frozen=True)
class ReversalFamily:
    """Order-reversing configuration: gentle line against a steeper-falling threshold.

    f(x) = intercept - slope * x on [0, span] against
    A(x, theta) = theta * (2 * span - x).  For theta inside
    :meth:`theta_window` the difference D = f - A increases strictly and
    crosses zero once, so every order statement flips direction.
    """

    span: float = 10.0
    intercept: float = 10.0
    slope: float = 0.05

    def __post_init__(self) -> None:
        if not self.slope * self.span < self.intercept / 2.0:
            raise ValueError("need slope * span < intercept / 2 for a usable theta window")

    def function(self) -> RankFrequencyFunction:
        return RankFrequencyFunction(
            [(0.0, self.intercept), (self.span, self.intercept - self.slope * self.span)]
        )

    def threshold(self) -> DecreasingLinearThreshold:
        return DecreasingLinearThreshold(ceiling=2.0 * self.span)

    def operator(self) -> OperatorSpec:
        return OperatorSpec(OperatorKind.IDENTITY, origin=0.0)

    def theta_window(self, scale_max: float = 0.0) -> tuple[float, float]:
        """Thetas valid for f and every multiplicative inflation up to scale_max."""
        worst = 1.0 + scale_max
        lo = max(worst * self.slope, worst * self.intercept / (2.0 * self.span))
        hi = (self.intercept - self.slope * self.span) / self.span
        return lo, hi

    def theta(self, scale_max: float = 0.0, frac: float = 0.5) -> float:
        lo, hi = self.theta_window(scale_max)
        if not lo < hi:
            raise ValueError(f"empty theta window for scale_max={scale_max}")
        return lo + frac * (hi - lo)


def increasing_difference_window(
    f: RankFrequencyFunction, ceiling: float
) -> tuple[float, float] | None:
    """Theta interval where f against the decreasing-linear threshold has
    a strictly increasing difference with exactly one crossing; None when empty.

    Needs f close to linear: the bound uses f's steepest segment.
    """
    a, s = f.support_start, f.support_end
    steepest = float(-f.slopes.min()) if len(f.slopes) else 0.0
    lo = max(steepest, f.eval(a) / (ceiling - a))
    hi = f.eval(s) / (ceiling - s) if ceiling > s else math.inf
    if not lo < hi:
        return None
    return lo, hi


def steep_power_window(
    f: RankFrequencyFunction,
    p: float,
    theta: float,
    envelope_scale: float,
    grid: int = 2048,
) -> tuple[float, float] | None:
    """Sub-interval [x0, S] where the power threshold out-climbs the envelope.

    On it, d/dx (I(f_n) - theta * x**p) <= 0 for every f_n below
    envelope_scale * f, so the integral-transform difference decreases.
    Requires p > 1; returns None when no usable window exists.
    """
    if p <= 1.0:
        return None
    a, s = f.support_start, f.support_end
    xs = np.linspace(a, s, grid)
    ok = p * theta * np.power(np.maximum(xs, 0.0), p - 1.0) >= envelope_scale * f.eval_many(xs)
    if not bool(ok[-1]):
        return None
    first = int(np.argmax(ok))
    first = min(first + 1, grid - 1)  # one step of margin
    x0 = float(xs[first])
    if not x0 < s:
        return None
    return x0, s


# --------------------------------------------------------------------------
# solving helpers
# --------------------------------------------------------------------------


def _try_solve(
    tf: TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    cfg: SolveConfig,
    x_window: tuple[float, float] | None = None,
) -> float | None:
    try:
        m, _ = solve_transformed(tf, family, theta, cfg, x_window=x_window)
        return m
    except (NoRootError, NonUniqueError):
        return None


def _psi_candidates(
    tf: TransformedFunction,
    family: ThresholdFamily,
    fractions: Sequence[float] = (0.3, 0.55, 0.8),
    hi_x: float | None = None,
) -> list[float]:
    """Thetas realized by the function itself at interior quantiles."""
    a, s = tf.origin, tf.support_end
    lo = a
    if isinstance(family, PowerThreshold):
        lo = max(lo, family.shift)
    hi = s if hi_x is None else hi_x
    if isinstance(family, DecreasingLinearThreshold):
        hi = min(hi, family.ceiling - 0.02 * (s - a))
    lo = lo + 0.02 * (hi - lo)
    out = []
    for q in fractions:
        x = lo + q * (hi - lo)
        if not lo <= x <= s:
            continue
        v = tf.eval(x)
        if v <= 0.0:
            continue
        try:
            out.append(family.theta_inverse(x, v))
        except (SingularAbscissaError, BundleError):
            continue
    return out


def _pair_thetas(
    tf: TransformedFunction,
    tg: TransformedFunction,
    family: ThresholdFamily,
    fractions: Sequence[float] = (0.3, 0.55, 0.8),
) -> list[float]:
    """Per quantile, the larger of the two realized thetas.

    For decreasing transforms against a power family that value is
    admissible for both functions of a dominated pair.
    """
    cf = _psi_candidates(tf, family, fractions)
    cg = _psi_candidates(tg, family, fractions)
    return [max(a, b) for a, b in zip(cf, cg)] if cf and cg else cf or cg


# --------------------------------------------------------------------------
# root side: sign of D(x) locates the solution
# --------------------------------------------------------------------------


def check_root_side(
    k: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    x_samples: Sequence[float],
    cfg: SolveConfig = DEFAULT_CONFIG,
    name: str = "root-side",
) -> VerificationReport:
    """For monotone D, D(x)'s sign tells on which side of x the solution lies.

    Decreasing D: D(x) > 0 iff m > x and D(x) < 0 iff m < x; increasing D
    swaps the conclusions.  Both directions of each equivalence are
    asserted; samples where neither side fires count as vacuous.
    """
    tf = op if isinstance(op, TransformedFunction) else apply(op, k)
    trials = len(x_samples)
    d_mono = classify_difference(tf, family, theta)
    if d_mono is Monotonicity.NON_MONOTONE:
        return VerificationReport(name=name, trials=trials, satisfied=0)
    m = _try_solve(tf, family, theta, cfg)
    if m is None:
        return VerificationReport(name=name, trials=trials, satisfied=0)
    flip = -1.0 if d_mono is Monotonicity.INCREASING else 1.0
    failures: list[Counterexample] = []
    satisfied = 0
    for x in x_samples:
        d = (tf.eval(x) - family.value(x, theta)) * flip
        fired = False
        if d > _SIGN_EPS:
            fired = True
            if not m > x - _X_EPS:
                failures.append(
                    Counterexample(
                        inputs=f"D(x)>0 should put m above x={x:.6g}",
                        lhs=m,
                        rhs=x,
                        slack=_X_EPS,
                        theta=theta,
                    )
                )
        elif d < -_SIGN_EPS:
            fired = True
            if not m < x + _X_EPS:
                failures.append(
                    Counterexample(
                        inputs=f"D(x)<0 should put m below x={x:.6g}",
                        lhs=m,
                        rhs=x,
                        slack=_X_EPS,
                        theta=theta,
                    )
                )
        # converse directions of the equivalences
        if x < m - _X_EPS:
            fired = True
            if not d >= -_SIGN_EPS:
                failures.append(
                    Counterexample(
                        inputs=f"m above x={x:.6g} should force D(x)>=0",
                        lhs=d,
                        rhs=0.0,
                        slack=_SIGN_EPS,
                        theta=theta,
                    )
                )
        elif x > m + _X_EPS:
            fired = True
            if not d <= _SIGN_EPS:
                failures.append(
                    Counterexample(
                        inputs=f"m below x={x:.6g} should force D(x)<=0",
                        lhs=d,
                        rhs=0.0,
                        slack=_SIGN_EPS,
                        theta=theta,
                    )
                )
        if fired:
            satisfied += 1
    return VerificationReport(
        name=name, trials=trials, satisfied=satisfied, failures=tuple(failures)
    )


# --------------------------------------------------------------------------
# dominance order between two functions
# --------------------------------------------------------------------------


def check_dominance_order(
    k: RankFrequencyFunction,
    f: RankFrequencyFunction,
    op: OperatorSpec,
    family: ThresholdFamily,
    theta: float,
    cfg: SolveConfig = DEFAULT_CONFIG,
    name: str = "dominance-order",
) -> VerificationReport:
    """Pointwise order of transforms carries to solutions (or reverses).

    The premise (T(k) vs T(f), strict or weak, either direction) is
    established on a grid before anything is asserted; decreasing D
    preserves the order of solutions, increasing D reverses it.
    """
    tk = apply(op, k)
    tf = apply(op, f)
    xs = np.linspace(tk.origin, tk.support_end, 512)
    gap = tk.eval_many(xs) - tf.eval_many(xs)
    gmin, gmax = float(gap.min()), float(gap.max())
    if gmin > _STRICT_GAP:
        premise = "gt"
    elif gmin >= -_STRICT_GAP:
        premise = "geq"
    elif gmax < -_STRICT_GAP:
        premise = "lt"
    elif gmax <= _STRICT_GAP:
        premise = "leq"
    else:
        return VerificationReport(name=name, trials=1, satisfied=0)
    d_mono = classify_difference(tk, family, theta)
    if d_mono is Monotonicity.NON_MONOTONE:
        return VerificationReport(name=name, trials=1, satisfied=0)
    mk = _try_solve(tk, family, theta, cfg)
    mf = _try_solve(tf, family, theta, cfg)
    if mk is None or mf is None:
        return VerificationReport(name=name, trials=1, satisfied=0)
    reverse = d_mono is Monotonicity.INCREASING
    # expected relation of mk vs mf
    bigger = premise in ("gt", "geq")
    if reverse:
        bigger = not bigger
    strict = premise in ("gt", "lt")
    if strict:
        ok = mk - mf > _STRICT_GAP if bigger else mf - mk > _STRICT_GAP
    else:
        ok = mk >= mf - _X_EPS if bigger else mf >= mk - _X_EPS
    failures = ()
    if not ok:
        failures = (
            Counterexample(
                inputs=f"premise={premise} d={d_mono.value} k={k.digest()} f={f.digest()}",
                lhs=mk,
                rhs=mf,
                slack=_STRICT_GAP if strict else _X_EPS,
                theta=theta,
            ),
        )
    return VerificationReport(name=name, trials=1, satisfied=1, failures=failures)


# --------------------------------------------------------------------------
# theta monotonicity of the bundle
# --------------------------------------------------------------------------


def check_theta_monotonicity(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    theta: float,
    theta_prime: float,
    cfg: SolveConfig = DEFAULT_CONFIG,
    name: str = "theta-monotonicity",
) -> VerificationReport:
    """Raising theta moves the solution down for decreasing D, up for increasing D.

    (Both shipped families increase in theta, so those are the two live
    branches.)  Requires theta < theta_prime and successful solves at
    both; anything else is vacuous.
    """
    if not theta < theta_prime:
        raise ValueError("need theta < theta_prime")
    tf = op if isinstance(op, TransformedFunction) else apply(op, f)
    d1 = classify_difference(tf, family, theta)
    d2 = classify_difference(tf, family, theta_prime)
    if d1 is not d2 or d1 is Monotonicity.NON_MONOTONE:
        return VerificationReport(name=name, trials=1, satisfied=0)
    m = _try_solve(tf, family, theta, cfg)
    m_prime = _try_solve(tf, family, theta_prime, cfg)
    if m is None or m_prime is None:
        return VerificationReport(name=name, trials=1, satisfied=0)
    if d1 is Monotonicity.DECREASING:
        ok = m - m_prime > _STRICT_GAP
        label = "expected m(theta') < m(theta)"
    else:
        ok = m_prime - m > _STRICT_GAP
        label = "expected m(theta) < m(theta')"
    failures = ()
    if not ok:
        failures = (
            Counterexample(
                inputs=f"{label}; f={f.digest()} theta'={theta_prime:.6g}",
                lhs=m,
                rhs=m_prime,
                slack=_STRICT_GAP,
                theta=theta,
            ),
        )
    return VerificationReport(name=name, trials=1, satisfied=1, failures=failures)


# --------------------------------------------------------------------------
# the two gap bounds
# --------------------------------------------------------------------------


def check_threshold_gap_bound(
    f: RankFrequencyFunction,
    schedule: Sequence[RankFrequencyFunction],
    op: OperatorSpec,
    family: ThresholdFamily,
    theta: float,
    cfg: SolveConfig = DEFAULT_CONFIG,
    slack: float = 1e-9,
    name: str = "threshold-gap-bound",
) -> VerificationReport:
    """|A(m_n) - A(m)| <= |T(f_n)(m) - T(f)(m)| under the first gap hypothesis.

    The hypothesis, checked per schedule member: T(f_n) decreases while A
    increases in x, or T(f_n) increases while A decreases in x.  Members
    failing it (or failing to solve) are vacuous.
    """
    tf = apply(op, f)
    trials = len(schedule)
    m = _try_solve(tf, family, theta, cfg)
    if m is None:
        return VerificationReport(name=name, trials=trials, satisfied=0)
    a_m = family.value(m, theta)
    t_m = tf.eval(m)
    satisfied = 0
    failures: list[Counterexample] = []
    for i, fn in enumerate(schedule, start=1):
        tfn = apply(op, fn)
        hyp = (
            tfn.monotonicity is Monotonicity.DECREASING and family.increasing_in_x
        ) or (tfn.monotonicity is Monotonicity.INCREASING and not family.increasing_in_x)
        if not hyp:
            continue
        mn = _try_solve(tfn, family, theta, cfg)
        if mn is None:
            continue
        lhs = abs(family.value(mn, theta) - a_m)
        rhs = abs(tfn.eval(m) - t_m)
        satisfied += 1
        if lhs > rhs + slack:
            failures.append(
                Counterexample(
                    inputs=f"schedule#{i} f={f.digest()}",
                    lhs=lhs,
                    rhs=rhs,
                    slack=slack,
                    theta=theta,
                )
            )
    return VerificationReport(
        name=name, trials=trials, satisfied=satisfied, failures=tuple(failures)
    )


def check_transform_gap_bound(
    f: RankFrequencyFunction,
    schedule: Sequence[RankFrequencyFunction],
    op: OperatorSpec,
    family: ThresholdFamily,
    theta: float,
    cfg: SolveConfig = DEFAULT_CONFIG,
    slack: float = 1e-9,
    x_window: tuple[float, float] | None = None,
    name: str = "transform-gap-bound",
) -> VerificationReport:
    """|T(f_n)(m) - T(f)(m)| <= |A(m_n) - A(m)| under the second gap hypothesis.

    Per member: T(f_n) increases while its difference with A decreases,
    or T(f_n) decreases while the difference increases.  ``x_window``
    restricts both the solves and the difference classification to a
    sub-interval on which the hypothesis is certifiable.
    """
    tf = apply(op, f)
    trials = len(schedule)
    m = _try_solve(tf, family, theta, cfg, x_window=x_window)
    if m is None:
        return VerificationReport(name=name, trials=trials, satisfied=0)
    a_m = family.value(m, theta)
    t_m = tf.eval(m)
    satisfied = 0
    failures: list[Counterexample] = []
    for i, fn in enumerate(schedule, start=1):
        tfn = apply(op, fn)
        d_mono = classify_difference(tfn, family, theta, x_window=x_window)
        hyp = (
            tfn.monotonicity is Monotonicity.INCREASING
            and d_mono is Monotonicity.DECREASING
        ) or (
            tfn.monotonicity is Monotonicity.DECREASING
            and d_mono is Monotonicity.INCREASING
        )
        if not hyp:
            continue
        mn = _try_solve(tfn, family, theta, cfg, x_window=x_window)
        if mn is None:
            continue
        lhs = abs(tfn.eval(m) - t_m)
        rhs = abs(family.value(mn, theta) - a_m)
        satisfied += 1
        if lhs > rhs + slack:
            failures.append(
                Counterexample(
                    inputs=f"schedule#{i} f={f.digest()}",
                    lhs=lhs,
                    rhs=rhs,
                    slack=slack,
                    theta=theta,
                )
            )
    return VerificationReport(
        name=name, trials=trials, satisfied=satisfied, failures=tuple(failures)
    )


# --------------------------------------------------------------------------
# convergence of bundles
# --------------------------------------------------------------------------


def check_convergence_pointwise(
    f: RankFrequencyFunction,
    sequence: Callable[[int], RankFrequencyFunction],
    op: OperatorSpec,
    family: ThresholdFamily,
    theta_grid: Sequence[float],
    n_max: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    name: str = "convergence-pointwise",
) -> VerificationReport:
    """Solutions follow a pointwise-convergent sequence, theta by theta.

    The terminal gap must fall below 10 * abs_tol_x + C / n_max where C
    is the observed first-member gap; the transformed values at the base
    solution (the reconstruction of the limit on the range of the
    bundle) must shrink proportionally too.
    """
    tf = apply(op, f)
    trials = len(theta_grid)
    satisfied = 0
    failures: list[Counterexample] = []
    f1 = sequence(1)
    fn = sequence(n_max)
    tf1 = apply(op, f1)
    tfn = apply(op, fn)
    for theta in theta_grid:
        m = _try_solve(tf, family, theta, cfg)
        m1 = _try_solve(tf1, family, theta, cfg)
        mn = _try_solve(tfn, family, theta, cfg)
        if m is None or m1 is None or mn is None:
            continue
        satisfied += 1
        first_gap = abs(m1 - m)
        tol = 10.0 * cfg.abs_tol_x + first_gap / n_max
        gap = abs(mn - m)
        if gap > tol:
            failures.append(
                Counterexample(
                    inputs=f"solution gap at n={n_max}, f={f.digest()}",
                    lhs=gap,
                    rhs=tol,
                    slack=0.0,
                    theta=theta,
                )
            )
        tv1 = abs(tf1.eval(m) - tf.eval(m))
        tvn = abs(tfn.eval(m) - tf.eval(m))
        tv_tol = 2.0 * tv1 / n_max + 1e-12
        if tvn > tv_tol:
            failures.append(
                Counterexample(
                    inputs=f"transform gap at base solution, n={n_max}, f={f.digest()}",
                    lhs=tvn,
                    rhs=tv_tol,
                    slack=0.0,
                    theta=theta,
                )
            )
    return VerificationReport(
        name=name, trials=trials, satisfied=satisfied, failures=tuple(failures)
    )


def check_convergence_uniform(
    f: RankFrequencyFunction,
    sequence: Callable[[int], RankFrequencyFunction],
    op: OperatorSpec,
    family: ThresholdFamily,
    theta_min: float,
    grid_size: int,
    n_max: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    theta_max: float | None = None,
    n_values: Sequence[int] | None = None,
    jitter: float = 1e-9,
    name: str = "convergence-uniform",
) -> VerificationReport:
    """Sup over a theta grid bounded away from zero shrinks monotonically.

    Checks that the sup-gap sequence is non-increasing (within jitter)
    along ``n_values`` (geometrically spaced by default) and that the
    final sup meets the first-member-calibrated tolerance.
    """
    if not theta_min > 0:
        raise ValueError("theta_min must be positive")
    hi = theta_max if theta_max is not None else 10.0 * theta_min
    thetas = np.linspace(theta_min, hi, grid_size)
    if n_values is None:
        vals = []
        n = 1
        while n < n_max:
            vals.append(n)
            n *= 2
        vals.append(n_max)
        n_values = vals
    tf = apply(op, f)
    base: dict[float, float] = {}
    for theta in thetas:
        m = _try_solve(tf, family, float(theta), cfg)
        if m is not None:
            base[float(theta)] = m
    trials = len(n_values)
    if not base:
        return VerificationReport(name=name, trials=trials, satisfied=0)
    sups: list[float] = []
    failures: list[Counterexample] = []
    satisfied = 0
    for n in n_values:
        tfn = apply(op, sequence(n))
        gaps = []
        for theta, m in base.items():
            mn = _try_solve(tfn, family, theta, cfg)
            if mn is not None:
                gaps.append(abs(mn - m))
        if not gaps:
            continue
        satisfied += 1
        sups.append(max(gaps))
    for i in range(1, len(sups)):
        if sups[i] > sups[i - 1] + jitter:
            failures.append(
                Counterexample(
                    inputs=f"sup-gap rose between checked indices {i - 1} and {i}",
                    lhs=sups[i],
                    rhs=sups[i - 1],
                    slack=jitter,
                )
            )
    if sups:
        tol = 10.0 * cfg.abs_tol_x + sups[0] / n_values[-1]
        if sups[-1] > tol:
            failures.append(
                Counterexample(
                    inputs=f"terminal sup-gap at n={n_values[-1]}",
                    lhs=sups[-1],
                    rhs=tol,
                    slack=0.0,
                )
            )
    return VerificationReport(
        name=name, trials=trials, satisfied=satisfied, failures=tuple(failures)
    )


# --------------------------------------------------------------------------
# impact axioms
# --------------------------------------------------------------------------


def check_impact_axioms(
    op: OperatorSpec,
    family: ThresholdFamily,
    master_seed: int,
    trials: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    function_gen: Callable[[np.random.Generator], RankFrequencyFunction] | None = None,
    pair_theta_fn: Callable[
        [TransformedFunction, TransformedFunction, ThresholdFamily], list[float]
    ] | None = None,
    name: str = "impact-axioms",
) -> VerificationReport:
    """Randomized audit of the four impact axioms for one configuration.

    Per trial: the zero function maps to a zero solution and nonzero
    functions never do (zero-iff-zero); dominated pairs keep their order
    (order preservation); strict dominance on a prefix forces strictly
    larger solutions for every theta realized on that prefix (strict
    prefix order); equality on a prefix forces equal solutions there
    (prefix equality).  Theta draws a function cannot solve make the
    sub-check vacuous.
    """
    failures: list[Counterexample] = []
    satisfied = 0
    attempted = 0
    pick_thetas = pair_theta_fn or _pair_thetas
    children = np.random.SeedSequence(master_seed).spawn(trials)
    for idx, child in enumerate(children):
        rng = np.random.default_rng(child)
        sub_seed = int(child.generate_state(1, dtype=np.uint64)[0])
        f = (
            function_gen(rng)
            if function_gen is not None
            else random_function(sub_seed)
        )
        if f.is_zero():
            continue
        tf = apply(op, f)
        a, s = f.support_start, f.support_end

        # zero-iff-zero
        attempted += 1
        zero = zero_like(f)
        m_zero = _try_solve(apply(op, zero), family, 1.0, cfg)
        satisfied += 1
        if m_zero is None or m_zero != a:
            failures.append(
                Counterexample(
                    inputs=f"zero-iff-zero: zero function trial#{idx}",
                    lhs=m_zero if m_zero is not None else math.nan,
                    rhs=a,
                    slack=0.0,
                    seed=sub_seed,
                )
            )
        for theta in _psi_candidates(tf, family):
            m = _try_solve(tf, family, theta, cfg)
            if m is None:
                continue
            if not m > _STRICT_GAP:
                failures.append(
                    Counterexample(
                        inputs=f"zero-iff-zero: nonzero f solved to zero trial#{idx}",
                        lhs=m,
                        rhs=0.0,
                        slack=_STRICT_GAP,
                        seed=sub_seed,
                        theta=theta,
                    )
                )

        # order preservation on a dominated pair
        attempted += 1
        mode = PerturbMode.MULTIPLICATIVE if rng.random() < 0.5 else PerturbMode.ADDITIVE
        delta = float(rng.uniform(0.05, 0.5))
        g = perturb(f, mode, delta)
        if leq(f, g):
            tg = apply(op, g)
            fired = False
            for theta in pick_thetas(tf, tg, family):
                mf = _try_solve(tf, family, theta, cfg)
                mg = _try_solve(tg, family, theta, cfg)
                if mf is None or mg is None:
                    continue
                fired = True
                if not mf <= mg + _SIGN_EPS:
                    failures.append(
                        Counterexample(
                            inputs=f"order-preservation trial#{idx} mode={mode.value} delta={delta:.4g}",
                            lhs=mf,
                            rhs=mg,
                            slack=_SIGN_EPS,
                            seed=sub_seed,
                            theta=theta,
                        )
                    )
            satisfied += 1 if fired else 0

        # strict prefix order
        attempted += 1
        a_cut = a + float(rng.uniform(0.25, 0.6)) * (s - a)
        a_end = a_cut + float(rng.uniform(0.15, 0.35)) * (s - a_cut)
        height = float(rng.uniform(0.1, 0.5)) * (1.0 + 0.2 * f.eval(a))
        g = prefix_bump(f, a_cut, a_end, height)
        if lt_on_prefix(f, g, a_cut):
            tg = apply(op, g)
            fired = False
            thetas = _psi_candidates(tf, family, hi_x=a_cut) + _psi_candidates(
                tg, family, hi_x=a_cut
            )
            for theta in thetas:
                mf = _try_solve(tf, family, theta, cfg)
                mg = _try_solve(tg, family, theta, cfg)
                if mf is None or mg is None:
                    continue
                fired = True
                if not mg - mf > _STRICT_GAP:
                    failures.append(
                        Counterexample(
                            inputs=f"strict-prefix-order trial#{idx} a_cut={a_cut:.4g}",
                            lhs=mf,
                            rhs=mg,
                            slack=_STRICT_GAP,
                            seed=sub_seed,
                            theta=theta,
                        )
                    )
            satisfied += 1 if fired else 0

        # prefix equality
        attempted += 1
        if f.eval(a_cut) > 0:
            g = flatten_tail(f, a_cut, softening=float(rng.uniform(0.3, 0.7)))
            if eq_on_prefix(f, g, a_cut):
                tg = apply(op, g)
                fired = False
                for theta in _psi_candidates(tf, family, hi_x=a_cut):
                    mf = _try_solve(tf, family, theta, cfg)
                    mg = _try_solve(tg, family, theta, cfg)
                    if mf is None or mg is None:
                        continue
                    fired = True
                    if abs(mf - mg) > cfg.abs_tol_x:
                        failures.append(
                            Counterexample(
                                inputs=f"prefix-equality trial#{idx} a_cut={a_cut:.4g}",
                                lhs=mf,
                                rhs=mg,
                                slack=cfg.abs_tol_x,
                                seed=sub_seed,
                                theta=theta,
                            )
                        )
                satisfied += 1 if fired else 0
    return VerificationReport(
        name=name, trials=attempted, satisfied=satisfied, failures=tuple(failures)
    )


# --------------------------------------------------------------------------
# the data-driven property suite
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    master_seed: int = 20240810
    trials: int = 40
    slack: float = 1e-9
    solver: SolveConfig = field(default_factory=SolveConfig)
    schedule_length: int = 25
    convergence_n_max: int = 200
    include_reversal_in_impact: bool = False


@dataclass(frozen=True)
class SuiteResult:
    reports: tuple[VerificationReport, ...]

    @property
    def any_fail(self) -> bool:
        return any(r.verdict is Verdict.FAIL for r in self.reports)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "vacuous": 0}
        for r in self.reports:
            out[r.verdict.value] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "counts": self.counts(),
            "reports": [r.to_dict() for r in self.reports],
        }


_STOCK_SETTINGS: tuple[tuple[str, OperatorKind, float], ...] = (
    ("identity-power1", OperatorKind.IDENTITY, 1.0),
    ("identity-power0.5", OperatorKind.IDENTITY, 0.5),
    ("identity-power2", OperatorKind.IDENTITY, 2.0),
    ("averaging-power1", OperatorKind.AVERAGING, 1.0),
    ("averaging-power2", OperatorKind.AVERAGING, 2.0),
)


def _sub_seeds(master: int, label: str, count: int) -> list[int]:
    root = np.random.SeedSequence(master, spawn_key=(abs(hash(label)) % (2**31),))
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in root.spawn(count)]


def _nonzero_random(seed: int) -> RankFrequencyFunction:
    f = random_function(seed)
    if f.is_zero():  # astronomically unlikely; regenerate deterministically
        f = random_function(seed + 1)
    return f


def _suite_report_names(cfg: SuiteConfig) -> list[str]:
    names = [f"operator-contract/{k.value}" for k in OperatorKind]
    for label, _, _ in _STOCK_SETTINGS:
        names += [
            f"root-side/{label}",
            f"dominance-order/{label}",
            f"theta-monotonicity/{label}",
        ]
    names += [
        "root-side/reversal",
        "dominance-order/reversal",
        "theta-monotonicity/reversal",
        "threshold-gap-bound",
        "transform-gap-bound",
    ]
    for label in ("h", "g"):
        names += [f"convergence-pointwise/{label}", f"convergence-uniform/{label}"]
    names += [f"impact-axioms/{label}" for label, _, _ in _STOCK_SETTINGS]
    if cfg.include_reversal_in_impact:
        names.append("impact-axioms/reversal")
    names.append("monotone-difference-forward")
    return names


def run_property_suite(config: SuiteConfig | None = None) -> SuiteResult:
    """Run every check over randomized inputs; deterministic per master seed."""
    cfg = config or SuiteConfig()
    if cfg.trials == 0:
        return SuiteResult(
            reports=tuple(
                VerificationReport(name=n, trials=0, satisfied=0)
                for n in _suite_report_names(cfg)
            )
        )
    solver_cfg = cfg.solver
    reports: list[VerificationReport] = []
    reversal = ReversalFamily()

    # operator contracts
    for kind in OperatorKind:
        samples = [_nonzero_random(s) for s in _sub_seeds(cfg.master_seed, f"contract-{kind.value}", 12)]
        reports.append(check_operator_contract(OperatorSpec(kind, 0.0), samples))

    # root side, dominance order, theta monotonicity over stock settings
    for label, op_kind, p in _STOCK_SETTINGS:
        sub = _sub_seeds(cfg.master_seed, f"rootside-{label}", cfg.trials)
        per = []
        for seed in sub:
            f = _nonzero_random(seed)
            op = OperatorSpec(op_kind, 0.0)
            family = PowerThreshold(p=p, shift=0.0)
            tf = apply(op, f)
            thetas = _psi_candidates(tf, family, fractions=(0.5,))
            if not thetas:
                continue
            xs = np.linspace(f.support_start, f.support_end, 11)[1:-1]
            per.append(
                check_root_side(f, tf, family, thetas[0], xs.tolist(), solver_cfg)
            )
        reports.append(VerificationReport.merge(f"root-side/{label}", per))

        sub = _sub_seeds(cfg.master_seed, f"dominance-{label}", cfg.trials)
        per = []
        for seed in sub:
            f = _nonzero_random(seed)
            rng = np.random.default_rng(seed)
            mode = PerturbMode.MULTIPLICATIVE if rng.random() < 0.5 else PerturbMode.ADDITIVE
            delta = float(rng.uniform(0.05, 0.4))
            k = perturb(f, mode, delta)
            op = OperatorSpec(op_kind, 0.0)
            family = PowerThreshold(p=p, shift=0.0)
            thetas = _pair_thetas(apply(op, f), apply(op, k), family, fractions=(0.5,))
            if not thetas:
                continue
            per.append(check_dominance_order(k, f, op, family, thetas[0], solver_cfg))
        reports.append(VerificationReport.merge(f"dominance-order/{label}", per))

        sub = _sub_seeds(cfg.master_seed, f"thetamono-{label}", cfg.trials)
        per = []
        for seed in sub:
            f = _nonzero_random(seed)
            op = OperatorSpec(op_kind, 0.0)
            family = PowerThreshold(p=p, shift=0.0)
            thetas = _psi_candidates(apply(op, f), family, fractions=(0.6,))
            if not thetas:
                continue
            per.append(
                check_theta_monotonicity(
                    f, op, family, thetas[0], 1.7 * thetas[0], solver_cfg
                )
            )
        reports.append(VerificationReport.merge(f"theta-monotonicity/{label}", per))

    # reversal branches of the same three checks
    rev_f = reversal.function()
    rev_a = reversal.threshold()
    rev_op = reversal.operator()
    theta_r = reversal.theta()
    xs = np.linspace(0.5, reversal.span - 0.5, 9)
    reports.append(
        check_root_side(
            rev_f, rev_op, rev_a, theta_r, xs.tolist(), solver_cfg, name="root-side/reversal"
        )
    )
    k_r = perturb(rev_f, PerturbMode.MULTIPLICATIVE, 0.2)
    reports.append(
        check_dominance_order(
            k_r,
            rev_f,
            rev_op,
            rev_a,
            reversal.theta(scale_max=0.2),
            solver_cfg,
            name="dominance-order/reversal",
        )
    )
    lo_w, hi_w = reversal.theta_window()
    reports.append(
        check_theta_monotonicity(
            rev_f,
            rev_op,
            rev_a,
            lo_w + 0.3 * (hi_w - lo_w),
            lo_w + 0.7 * (hi_w - lo_w),
            solver_cfg,
            name="theta-monotonicity/reversal",
        )
    )

    # gap bounds
    reports.append(
        threshold_gap_bound_batch(
            cfg.master_seed, cfg.trials, cfg.schedule_length, solver_cfg, cfg.slack
        )
    )
    reports.append(
        transform_gap_bound_batch(
            cfg.master_seed, cfg.trials, cfg.schedule_length, solver_cfg, cfg.slack
        )
    )

    # convergence
    line = RankFrequencyFunction([(0.0, 10.0), (10.0, 0.0)])
    for label, op_kind in (("h", OperatorKind.IDENTITY), ("g", OperatorKind.AVERAGING)):
        op = OperatorSpec(op_kind, 0.0)
        family = PowerThreshold(p=1.0, shift=0.0)
        reports.append(
            check_convergence_pointwise(
                line,
                multiplicative_sequence(line),
                op,
                family,
                [0.5, 1.0, 2.0, 5.0],
                cfg.convergence_n_max,
                solver_cfg,
                name=f"convergence-pointwise/{label}",
            )
        )
        reports.append(
            check_convergence_uniform(
                line,
                additive_sequence(line),
                op,
                family,
                theta_min=0.5,
                grid_size=8,
                n_max=cfg.convergence_n_max,
                cfg=solver_cfg,
                name=f"convergence-uniform/{label}",
            )
        )

    # impact axioms on the stock settings
    for label, op_kind, p in _STOCK_SETTINGS:
        reports.append(
            check_impact_axioms(
                OperatorSpec(op_kind, 0.0),
                PowerThreshold(p=p, shift=0.0),
                _sub_seeds(cfg.master_seed, f"impact-{label}", 1)[0],
                cfg.trials,
                solver_cfg,
                name=f"impact-axioms/{label}",
            )
        )
    if cfg.include_reversal_in_impact:
        reports.append(reversal_impact_report(cfg.master_seed, cfg.trials, solver_cfg))

    # sufficiency: settings whose difference decreases everywhere satisfy the axioms
    reports.append(
        monotone_difference_forward_batch(cfg.master_seed, max(cfg.trials // 2, 5), solver_cfg)
    )
    return SuiteResult(reports=tuple(reports))


def threshold_gap_bound_batch(
    master_seed: int,
    trials: int,
    schedule_length: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    slack: float = 1e-9,
    name: str = "threshold-gap-bound",
) -> VerificationReport:
    """Randomized instances of the first gap bound across both branches."""
    per: list[VerificationReport] = []
    seeds = _sub_seeds(master_seed, "gap13", trials)
    for i, seed in enumerate(seeds):
        f = _nonzero_random(seed)
        rng = np.random.default_rng(seed)
        branch = i % 3
        if branch in (0, 1):
            op = OperatorSpec(
                OperatorKind.IDENTITY if branch == 0 else OperatorKind.AVERAGING, 0.0
            )
            family = PowerThreshold(p=float(rng.choice([1.0, 2.0])), shift=0.0)
            if rng.random() < 0.5:
                schedule = [
                    perturb(f, PerturbMode.MULTIPLICATIVE, 1.0 / n)
                    for n in range(1, schedule_length + 1)
                ]
            else:
                schedule = [
                    perturb(f, PerturbMode.ADDITIVE, 1.0 / n)
                    for n in range(1, schedule_length + 1)
                ]
            theta = _theta_for_schedule(f, schedule, op, family)
            if theta is None:
                continue
        else:
            # increasing transform against a decreasing threshold
            op = OperatorSpec(OperatorKind.INTEGRAL, 0.0)
            family = DecreasingLinearThreshold(ceiling=2.0 * f.support_end)
            schedule = [
                perturb(f, PerturbMode.MULTIPLICATIVE, 1.0 / n)
                for n in range(1, schedule_length + 1)
            ]
            total = f.integral(f.support_start, f.support_end)
            if total <= 0:
                continue
            theta = 0.45 * total / (family.ceiling - f.support_end)
        per.append(check_threshold_gap_bound(f, schedule, op, family, theta, cfg, slack))
    return VerificationReport.merge(name, per)


def transform_gap_bound_batch(
    master_seed: int,
    trials: int,
    schedule_length: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    slack: float = 1e-9,
    name: str = "transform-gap-bound",
) -> VerificationReport:
    """Randomized instances of the second gap bound across both branches."""
    per: list[VerificationReport] = []
    seeds = _sub_seeds(master_seed, "gap14", trials)
    for i, seed in enumerate(seeds):
        rng = np.random.default_rng(seed)
        if i % 2 == 0:
            # increasing transform, decreasing difference on a steep-power window
            f = _nonzero_random(seed)
            op = OperatorSpec(OperatorKind.INTEGRAL, 0.0)
            family = PowerThreshold(p=2.0, shift=0.0)
            schedule = [
                perturb(f, PerturbMode.MULTIPLICATIVE, 1.0 / n)
                for n in range(1, schedule_length + 1)
            ]
            total = f.integral(f.support_start, f.support_end)
            if total <= 0:
                continue
            s = f.support_end
            theta = 2.4 * total / (s * s)
            window = steep_power_window(f, 2.0, theta, envelope_scale=2.0)
            if window is None:
                continue
            per.append(
                check_transform_gap_bound(
                    f, schedule, op, family, theta, cfg, slack, x_window=window
                )
            )
        else:
            # decreasing transform, increasing difference: the reversal family
            fam = ReversalFamily(
                span=10.0,
                intercept=float(rng.uniform(8.0, 12.0)),
                slope=float(rng.uniform(0.03, 0.08)),
            )
            f = fam.function()
            kappa = 0.4
            schedule = [
                perturb(f, PerturbMode.MULTIPLICATIVE, kappa / n)
                for n in range(1, schedule_length + 1)
            ]
            lo, hi = fam.theta_window(scale_max=kappa)
            if not lo < hi:
                continue
            theta = lo + 0.5 * (hi - lo)
            per.append(
                check_transform_gap_bound(
                    f, schedule, fam.operator(), fam.threshold(), theta, cfg, slack
                )
            )
    return VerificationReport.merge(name, per)


def _theta_for_schedule(
    f: RankFrequencyFunction,
    schedule: Sequence[RankFrequencyFunction],
    op: OperatorSpec,
    family: PowerThreshold,
) -> float | None:
    """A theta admissible for the base function and the whole schedule.

    For decreasing transforms against a power family the binding
    constraint is the largest right-endpoint realized theta.
    """
    tf = apply(op, f)
    s = tf.support_end
    denom = (s - family.shift) ** family.p
    floor_theta = tf.eval(s) / denom
    for fn in schedule:
        floor_theta = max(floor_theta, apply(op, fn).eval(s) / denom)
    cands = _psi_candidates(tf, family, fractions=(0.5,))
    if not cands:
        return None
    return max(1.05 * floor_theta, cands[0])


def reversal_impact_report(
    master_seed: int,
    trials: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    name: str = "impact-axioms/reversal",
) -> VerificationReport:
    """Impact audit of the order-reversing configuration; expected to fail."""

    def gen(rng: np.random.Generator) -> RankFrequencyFunction:
        fam = ReversalFamily(
            span=10.0,
            intercept=float(rng.uniform(8.0, 12.0)),
            slope=float(rng.uniform(0.03, 0.08)),
        )
        return fam.function()

    ceiling = 20.0

    def pick(
        tf: TransformedFunction, tg: TransformedFunction, family: ThresholdFamily
    ) -> list[float]:
        wf = increasing_difference_window(tf.source, ceiling)
        wg = increasing_difference_window(tg.source, ceiling)
        if wf is None or wg is None:
            return []
        lo = max(wf[0], wg[0])
        hi = min(wf[1], wg[1])
        if not lo < hi:
            return []
        return [lo + 0.5 * (hi - lo)]

    return check_impact_axioms(
        OperatorSpec(OperatorKind.IDENTITY, 0.0),
        DecreasingLinearThreshold(ceiling=ceiling),
        master_seed,
        trials,
        cfg,
        function_gen=gen,
        pair_theta_fn=pick,
        name=name,
    )


def monotone_difference_forward_batch(
    master_seed: int,
    trials: int,
    cfg: SolveConfig = DEFAULT_CONFIG,
    name: str = "monotone-difference-forward",
) -> VerificationReport:
    """Configurations whose difference decreases everywhere satisfy the axioms."""
    per: list[VerificationReport] = []
    seeds = _sub_seeds(master_seed, "thm3fwd", trials)
    for i, seed in enumerate(seeds):
        label, op_kind, p = _STOCK_SETTINGS[i % len(_STOCK_SETTINGS)]
        op = OperatorSpec(op_kind, 0.0)
        family = PowerThreshold(p=p, shift=0.0)
        f = _nonzero_random(seed)
        thetas = _psi_candidates(apply(op, f), family)
        if not thetas or not check_decreasing_difference(f, op, family, thetas):
            continue
        per.append(
            check_impact_axioms(
                op, family, seed, 1, cfg, name=f"{name}/{label}"
            )
        )
    return VerificationReport.merge(name, per)
