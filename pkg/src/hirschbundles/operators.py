"""The three function-to-function operators applied before thresholding.

Identity leaves f alone; Integral maps f to I(f)(x) = integral of f from
the origin a to x; Averaging maps f to mu(f)(x) = I(f)(x) / (x - a) with
the continuity value mu(f)(a) = f(a).  For piecewise-linear sources all
three are exactly evaluable: Identity stays piecewise-linear, Integral is
piecewise-quadratic, Averaging is the quadratic divided by (x - a).

mu preserves the decreasing shape of its input while I increases; that
difference decides which branch of every monotonicity result downstream
applies, so each transformed function carries a monotonicity
classification certified at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .errors import DomainError, OriginMismatchError
from .funcspace import PerturbMode, RankFrequencyFunction, perturb
from .reporting import Counterexample, VerificationReport

# Relative width of the left-edge band where Averaging switches to its
# continuity value f(a) instead of evaluating the 0/0-prone quotient.
_AVERAGING_EDGE = 1e-9

# Tolerance for slope/difference sign decisions in classification.
_MONO_TOL = 1e-12

_CLASSIFY_GRID = 1024


class OperatorKind(Enum):
    IDENTITY = "identity"
    AVERAGING = "averaging"
    INTEGRAL = "integral"


class Monotonicity(Enum):
    DECREASING = "decreasing"
    INCREASING = "increasing"
    NON_MONOTONE = "non_monotone"


class CertificationMethod(Enum):
    SEGMENT_DERIVATIVE = "segment_derivative"
    GRID_SAMPLE = "grid_sample"


@dataclass(frozen=True)
class OperatorSpec:
    """Which operator to apply; origin must equal the function's support start."""

    kind: OperatorKind
    origin: float = 0.0


@dataclass(frozen=True)
class TransformedFunction:
    """Exactly evaluable T(f) with a build-time monotonicity certificate."""

    source: RankFrequencyFunction
    kind: OperatorKind
    monotonicity: Monotonicity
    certified_by: CertificationMethod

    @property
    def origin(self) -> float:
        return self.source.support_start

    @property
    def support_end(self) -> float:
        return self.source.support_end

    @cached_property
    def _span(self) -> float:
        return self.support_end - self.origin

    def eval(self, x: float) -> float:
        if x < self.origin or x > self.support_end:
            raise DomainError(f"x={x} outside [{self.origin}, {self.support_end}]")
        return float(self.eval_many(np.array([x]))[0])

    def eval_many(self, x: np.ndarray) -> np.ndarray:
        """Vectorized evaluation; callers guarantee x lies in [a, S]."""
        f = self.source
        if self.kind is OperatorKind.IDENTITY:
            return f.eval_many(x)
        idx = np.clip(np.searchsorted(f.xs, x, side="right") - 1, 0, len(f.xs) - 2)
        dx = x - f.xs[idx]
        integ = f.cumulative[idx] + f.ys[idx] * dx + f.slopes[idx] * dx * dx / 2.0
        integ = np.where(x == self.support_end, f.cumulative[-1], integ)
        if self.kind is OperatorKind.INTEGRAL:
            return integ
        rel = x - self.origin
        edge = rel < _AVERAGING_EDGE * self._span
        safe = np.where(edge, 1.0, rel)
        return np.where(edge, f.ys[0], integ / safe)


def apply(op: OperatorSpec, f: RankFrequencyFunction) -> TransformedFunction:
    """Build the exactly evaluable T(f), classifying its monotonicity."""
    if op.origin != f.support_start:
        raise OriginMismatchError(
            f"operator origin {op.origin} != support start {f.support_start}"
        )
    mono, method = _classify(op.kind, f)
    return TransformedFunction(source=f, kind=op.kind, monotonicity=mono, certified_by=method)


def t_eval(tf: TransformedFunction, x: float) -> float:
    return tf.eval(x)


def classify_monotonicity(tf: TransformedFunction) -> Monotonicity:
    return tf.monotonicity


def _constant_default(kind: OperatorKind) -> Monotonicity:
    # Constant transforms count as decreasing (non-strict convention) so
    # that constant inputs route through the classical branch; an
    # integral is only constant when the source is identically zero.
    return Monotonicity.DECREASING


def _classify(
    kind: OperatorKind, f: RankFrequencyFunction
) -> tuple[Monotonicity, CertificationMethod]:
    if kind is OperatorKind.IDENTITY:
        # sources are decreasing by construction
        return Monotonicity.DECREASING, CertificationMethod.SEGMENT_DERIVATIVE
    if kind is OperatorKind.INTEGRAL:
        if f.is_zero():
            return _constant_default(kind), CertificationMethod.SEGMENT_DERIVATIVE
        return Monotonicity.INCREASING, CertificationMethod.SEGMENT_DERIVATIVE
    # Averaging: sign of mu' equals sign of N(x) = f(x)(x-a) - I(f)(x).
    # N is monotone on each linear segment (N' = slope * (x-a)), so its
    # extrema sit at breakpoints.
    a = f.support_start
    n_vals = f.ys * (f.xs - a) - f.cumulative
    scale = max(1.0, float(f.ys[0]) * (f.support_end - a))
    if float(n_vals.max()) <= _MONO_TOL * scale:
        return Monotonicity.DECREASING, CertificationMethod.SEGMENT_DERIVATIVE
    if float(n_vals.min()) >= -_MONO_TOL * scale:
        return Monotonicity.INCREASING, CertificationMethod.SEGMENT_DERIVATIVE
    # mixed numerator signs: fall back to sampling mu itself
    xs = np.linspace(a, f.support_end, _CLASSIFY_GRID)
    tf = TransformedFunction(
        source=f,
        kind=OperatorKind.AVERAGING,
        monotonicity=Monotonicity.NON_MONOTONE,
        certified_by=CertificationMethod.GRID_SAMPLE,
    )
    diffs = np.diff(tf.eval_many(xs))
    if bool((diffs <= _MONO_TOL).all()):
        return Monotonicity.DECREASING, CertificationMethod.GRID_SAMPLE
    if bool((diffs >= -_MONO_TOL).all()):
        return Monotonicity.INCREASING, CertificationMethod.GRID_SAMPLE
    return Monotonicity.NON_MONOTONE, CertificationMethod.GRID_SAMPLE


def check_operator_contract(
    op: OperatorSpec,
    sample_functions: list[RankFrequencyFunction],
    grid_points: int = 256,
) -> VerificationReport:
    """Assert the contract every operator must honor.

    (a) T(f) >= 0 everywhere; (b) T(f) vanishes identically iff f does;
    (c) restriction monotonicity: f < g pointwise implies
    T(f) < T(g) on (support_start, a_cut] for prefix cuts a_cut.
    Violations become report failures, never exceptions.
    """
    if not sample_functions:
        raise ValueError("need at least one sample function")
    first = sample_functions[0]
    zero = RankFrequencyFunction(
        [(first.support_start, 0.0), (first.support_end, 0.0)]
    )
    samples = list(sample_functions) + [zero]
    failures: list[Counterexample] = []
    satisfied = 0
    for i, f in enumerate(samples):
        tf = apply(op, f)
        vals = tf.eval_many(np.linspace(f.support_start, f.support_end, grid_points))
        satisfied += 1
        if float(vals.min()) < -_MONO_TOL:
            failures.append(
                Counterexample(
                    inputs=f"positivity sample#{i} ({f.digest()})",
                    lhs=float(vals.min()),
                    rhs=0.0,
                    slack=_MONO_TOL,
                )
            )
        transformed_zero = bool((vals == 0.0).all())
        if transformed_zero != f.is_zero():
            failures.append(
                Counterexample(
                    inputs=f"zero-iff-zero sample#{i} ({f.digest()})",
                    lhs=float(np.abs(vals).max()),
                    rhs=0.0,
                    slack=0.0,
                )
            )
    # strict restriction monotonicity on dominated pairs g = f + 0.5
    for i, f in enumerate(sample_functions):
        g = perturb(f, PerturbMode.ADDITIVE, 0.5)
        tf, tg = apply(op, f), apply(op, g)
        a, s = f.support_start, f.support_end
        for frac in (0.25, 0.5, 0.75):
            a_cut = a + frac * (s - a)
            pts = np.linspace(a, a_cut, grid_points)[1:]
            gap = tg.eval_many(pts) - tf.eval_many(pts)
            satisfied += 1
            if float(gap.min()) <= 0.0:
                failures.append(
                    Counterexample(
                        inputs=f"strict-restriction sample#{i} a_cut={a_cut:.6g}",
                        lhs=float(gap.min()),
                        rhs=0.0,
                        slack=0.0,
                    )
                )
    return VerificationReport(
        name=f"operator-contract/{op.kind.value}",
        trials=satisfied,
        satisfied=satisfied,
        failures=tuple(failures),
    )
