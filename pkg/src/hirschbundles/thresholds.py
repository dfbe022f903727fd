"""Threshold families A(x, theta), their theta-inverse, and admissible ranges.

A threshold family is positive, continuous, and injective in each
variable separately.  Two concrete families ship:

* ``PowerThreshold``: A(x, theta) = theta * (x - shift)**p with p > 0.
  shift = 0 gives the classical h-index line (p = 1) and its power
  variants; shift = support_start gives the averaged (g-type) forms.
* ``DecreasingLinearThreshold``: A(x, theta) = theta * (ceiling - x),
  a test family whose x-profile decreases; it exercises the
  order-reversing branches of the monotonicity results.

For a fixed x inside the bijection region, theta -> A(x, theta) is
invertible; composing that inverse with T(f) yields psi_f, the map from
an abscissa to the unique theta whose solution lands there.  The image
of psi_f is exactly the set of admissible thetas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    DomainError,
    NonPositiveThetaError,
    SingularAbscissaError,
    ZeroFunctionError,
    ZeroValueError,
)
from .funcspace import RankFrequencyFunction
from .operators import Monotonicity, OperatorSpec, TransformedFunction, apply

_RANGE_GRID = 1024


@dataclass(frozen=True)
class PowerThreshold:
    """A(x, theta) = theta * (x - shift)**p; increasing in x for x > shift."""

    p: float
    shift: float = 0.0

    def __post_init__(self) -> None:
        if not self.p > 0:
            raise ValueError("exponent p must be positive")
        if self.shift < 0:
            raise ValueError("shift must be non-negative")

    increasing_in_x = True

    def _check_x(self, x: float) -> None:
        if x < self.shift:
            raise DomainError(f"x={x} below shift {self.shift}")

    def value(self, x: float, theta: float) -> float:
        _check_theta(theta)
        self._check_x(x)
        return theta * (x - self.shift) ** self.p

    def value_many(self, x: np.ndarray, theta: float) -> np.ndarray:
        _check_theta(theta)
        return theta * np.power(x - self.shift, self.p)

    def theta_inverse(self, x: float, value: float) -> float:
        if value < 0:
            raise DomainError("threshold values are non-negative")
        if x == self.shift:
            raise SingularAbscissaError(f"theta-inverse undefined at x = shift = {x}")
        self._check_x(x)
        return value / (x - self.shift) ** self.p

    def theta_inverse_many(self, x: np.ndarray, values: np.ndarray) -> np.ndarray:
        return values / np.power(x - self.shift, self.p)

    def describe(self) -> str:
        return f"power(p={self.p:g},shift={self.shift:g})"


@dataclass(frozen=True)
class DecreasingLinearThreshold:
    """A(x, theta) = theta * (ceiling - x); decreasing in x on [0, ceiling)."""

    ceiling: float

    def __post_init__(self) -> None:
        if not self.ceiling > 0:
            raise ValueError("ceiling must be positive")

    increasing_in_x = False

    def _check_x(self, x: float) -> None:
        if x < 0 or x > self.ceiling:
            raise DomainError(f"x={x} outside [0, {self.ceiling}]")

    def value(self, x: float, theta: float) -> float:
        _check_theta(theta)
        self._check_x(x)
        if x == self.ceiling:
            raise DomainError("A must stay positive: x = ceiling excluded")
        return theta * (self.ceiling - x)

    def value_many(self, x: np.ndarray, theta: float) -> np.ndarray:
        _check_theta(theta)
        return theta * (self.ceiling - x)

    def theta_inverse(self, x: float, value: float) -> float:
        if value < 0:
            raise DomainError("threshold values are non-negative")
        if x == self.ceiling:
            raise SingularAbscissaError(f"theta-inverse undefined at x = ceiling = {x}")
        self._check_x(x)
        return value / (self.ceiling - x)

    def theta_inverse_many(self, x: np.ndarray, values: np.ndarray) -> np.ndarray:
        return values / (self.ceiling - x)

    def describe(self) -> str:
        return f"declin(ceiling={self.ceiling:g})"


ThresholdFamily = Union[PowerThreshold, DecreasingLinearThreshold]


def _check_theta(theta: float) -> None:
    if not theta > 0:
        raise NonPositiveThetaError(f"theta must be positive, got {theta}")


def a_eval(family: ThresholdFamily, x: float, theta: float) -> float:
    return family.value(x, theta)


def a_inverse_theta(family: ThresholdFamily, x: float, value: float) -> float:
    return family.theta_inverse(x, value)


def _as_transformed(
    f: RankFrequencyFunction, op: OperatorSpec | TransformedFunction
) -> TransformedFunction:
    if isinstance(op, TransformedFunction):
        return op
    return apply(op, f)


def psi(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
    x: float,
) -> float:
    """The theta whose solution sits at x: the theta-inverse of T(f)(x).

    Solving at theta = psi(f, T, A, x) recovers x (within solver
    tolerance); raises if the inverse is singular at x or T(f)(x) = 0.
    """
    tf = _as_transformed(f, op)
    value = tf.eval(x)
    if value == 0.0:
        raise ZeroValueError(f"T(f)({x}) = 0 maps to theta = 0, which is excluded")
    return family.theta_inverse(x, value)


@dataclass(frozen=True)
class AdmissibleRange:
    """The set of thetas for which the defining equation has a solution.

    ``theta_min`` is None when every positive theta is admissible (the
    range is open at zero).  ``certified`` is True when the endpoints are
    analytic consequences of endpoint monotonicity and False when they
    were estimated on a grid.
    """

    theta_min: float | None
    theta_max: float
    certified: bool

    def __post_init__(self) -> None:
        if self.theta_min is not None:
            if not self.theta_min > 0:
                raise ValueError("theta_min must be positive or None")
            if math.isfinite(self.theta_max) and self.theta_min > self.theta_max:
                raise ValueError("theta_min must not exceed theta_max")

    def contains(self, theta: float) -> bool:
        if theta <= 0:
            return False
        if self.theta_min is not None and theta < self.theta_min:
            return False
        return theta <= self.theta_max


def admissible_range(
    f: RankFrequencyFunction,
    op: OperatorSpec | TransformedFunction,
    family: ThresholdFamily,
) -> AdmissibleRange:
    """Image of psi_f over the domain interior.

    When T(f) decreases and the family is a power family, psi_f is
    strictly decreasing, so the image follows from its endpoint values
    and the result is certified.  Otherwise a grid min/max estimate is
    returned with ``certified=False``.
    """
    tf = _as_transformed(f, op)
    if f.is_zero():
        raise ZeroFunctionError("the zero function admits no positive theta")
    a, s = tf.origin, tf.support_end
    if isinstance(family, PowerThreshold) and tf.monotonicity is Monotonicity.DECREASING:
        end_val = tf.eval(s)
        lo = end_val / (s - family.shift) ** family.p
        theta_min = lo if lo > 0.0 else None
        if a > family.shift:
            theta_max = tf.eval(a) / (a - family.shift) ** family.p
        else:
            theta_max = math.inf
        return AdmissibleRange(theta_min=theta_min, theta_max=theta_max, certified=True)
    # grid estimate over the bijection region interior
    lo_x, hi_x = a, s
    span = s - a
    if isinstance(family, PowerThreshold):
        lo_x = max(lo_x, family.shift) + 1e-9 * span
    else:
        hi_x = min(hi_x, family.ceiling) - 1e-9 * span
    xs = np.linspace(lo_x, hi_x, _RANGE_GRID)
    vals = tf.eval_many(xs)
    mask = vals > 0.0
    if not bool(mask.any()):
        raise ZeroFunctionError("T(f) vanishes on the sampled interior")
    thetas = family.theta_inverse_many(xs[mask], vals[mask])
    return AdmissibleRange(
        theta_min=float(thetas.min()),
        theta_max=float(thetas.max()),
        certified=False,
    )
