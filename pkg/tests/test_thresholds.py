import math

import numpy as np
import pytest

from hirschbundles.errors import (
    DomainError,
    NonPositiveThetaError,
    NoRootError,
    SingularAbscissaError,
    ZeroFunctionError,
    ZeroValueError,
)
from hirschbundles.funcspace import RankFrequencyFunction, random_function
from hirschbundles.operators import OperatorKind, OperatorSpec, apply
from hirschbundles.solver import solve_bundle_point
from hirschbundles.thresholds import (
    DecreasingLinearThreshold,
    PowerThreshold,
    a_eval,
    a_inverse_theta,
    admissible_range,
    psi,
)

IDENTITY = OperatorSpec(OperatorKind.IDENTITY, 0.0)
AVERAGING = OperatorSpec(OperatorKind.AVERAGING, 0.0)
INTEGRAL = OperatorSpec(OperatorKind.INTEGRAL, 0.0)


class TestEvaluation:
    def test_linear(self):
        assert a_eval(PowerThreshold(1.0, 0.0), 4.0, 1.0) == 4.0

    def test_square(self):
        assert a_eval(PowerThreshold(2.0, 0.0), 3.0, 2.0) == 18.0

    def test_decreasing_linear(self):
        assert a_eval(DecreasingLinearThreshold(20.0), 5.0, 1.0) == 15.0

    def test_theta_must_be_positive(self):
        with pytest.raises(NonPositiveThetaError):
            a_eval(PowerThreshold(1.0, 0.0), 1.0, 0.0)

    def test_power_domain(self):
        with pytest.raises(DomainError):
            a_eval(PowerThreshold(2.0, 1.0), 0.5, 1.0)

    def test_declin_positive_domain(self):
        with pytest.raises(DomainError):
            a_eval(DecreasingLinearThreshold(20.0), 20.0, 1.0)

    def test_power_strictly_monotone_in_both_arguments(self):
        rng = np.random.default_rng(3)
        fam = PowerThreshold(1.7, 0.0)
        for _ in range(100):
            x1, x2 = sorted(rng.uniform(0.01, 50.0, 2))
            t1, t2 = sorted(rng.uniform(0.01, 10.0, 2))
            if x1 == x2 or t1 == t2:
                continue
            assert fam.value(x1, t1) < fam.value(x2, t1)
            assert fam.value(x1, t1) < fam.value(x1, t2)

    def test_declin_monotonicity(self):
        rng = np.random.default_rng(4)
        fam = DecreasingLinearThreshold(30.0)
        for _ in range(100):
            x1, x2 = sorted(rng.uniform(0.0, 29.0, 2))
            t1, t2 = sorted(rng.uniform(0.01, 10.0, 2))
            if x1 == x2 or t1 == t2:
                continue
            assert fam.value(x1, t1) > fam.value(x2, t1)
            assert fam.value(x1, t1) < fam.value(x1, t2)


class TestThetaInverse:
    def test_linear_inverse(self):
        assert a_inverse_theta(PowerThreshold(1.0, 0.0), 4.0, 4.0) == 1.0

    def test_square_round_trip(self):
        fam = PowerThreshold(2.0, 0.0)
        assert a_inverse_theta(fam, 3.0, a_eval(fam, 3.0, 2.0)) == 2.0

    def test_singular_abscissa(self):
        with pytest.raises(SingularAbscissaError):
            a_inverse_theta(PowerThreshold(1.0, 0.0), 0.0, 5.0)
        with pytest.raises(SingularAbscissaError):
            a_inverse_theta(DecreasingLinearThreshold(20.0), 20.0, 5.0)

    def test_round_trip_random(self):
        rng = np.random.default_rng(11)
        for fam in (PowerThreshold(0.5, 0.0), PowerThreshold(2.0, 1.0), DecreasingLinearThreshold(25.0)):
            for _ in range(200):
                x = float(rng.uniform(1.5, 20.0))
                theta = float(rng.uniform(0.01, 50.0))
                back = a_inverse_theta(fam, x, a_eval(fam, x, theta))
                assert back == pytest.approx(theta, rel=1e-12)


class TestPsi:
    def test_identity_line(self, line):
        assert psi(line, IDENTITY, PowerThreshold(1.0, 0.0), 5.0) == 1.0

    def test_averaging_line(self, line):
        val = psi(line, AVERAGING, PowerThreshold(1.0, 0.0), 20.0 / 3.0)
        assert val == pytest.approx(1.0, rel=1e-12)

    def test_round_trip_through_solver(self):
        cfgs = [
            (IDENTITY, PowerThreshold(1.0, 0.0)),
            (IDENTITY, PowerThreshold(2.0, 0.0)),
            (AVERAGING, PowerThreshold(1.0, 0.0)),
        ]
        for seed in range(20):
            f = random_function(seed)
            if f.is_zero():
                continue
            for op, fam in cfgs:
                x = f.support_start + 0.6 * (f.support_end - f.support_start)
                tf = apply(op, f)
                if tf.eval(x) <= 0:
                    continue
                theta = psi(f, op, fam, x)
                m, _ = solve_bundle_point(f, op, fam, theta)
                assert m == pytest.approx(x, abs=1e-8)

    def test_zero_value_excluded(self, line):
        with pytest.raises(ZeroValueError):
            psi(line, IDENTITY, PowerThreshold(1.0, 0.0), 10.0)  # f(10) = 0


class TestAdmissibleRange:
    def test_line_all_theta(self, line):
        r = admissible_range(line, IDENTITY, PowerThreshold(1.0, 0.0))
        assert r.theta_min is None
        assert math.isinf(r.theta_max)
        assert r.certified

    def test_constant_identity(self, const4):
        r = admissible_range(const4, IDENTITY, PowerThreshold(1.0, 0.0))
        assert r.theta_min == 0.5
        assert r.certified

    def test_constant_averaging(self, const4):
        r = admissible_range(const4, AVERAGING, PowerThreshold(1.0, 0.0))
        assert r.theta_min == 0.5
        assert r.certified

    def test_zero_function_rejected(self):
        zero = RankFrequencyFunction([(0.0, 0.0), (2.0, 0.0)])
        with pytest.raises(ZeroFunctionError):
            admissible_range(zero, IDENTITY, PowerThreshold(1.0, 0.0))

    def test_grid_estimated_path_not_certified(self, const4):
        r = admissible_range(const4, INTEGRAL, PowerThreshold(1.0, 0.0))
        assert not r.certified
        # integral of a constant against a line realizes a single theta
        assert r.theta_min == pytest.approx(4.0, rel=1e-6)
        assert r.theta_max == pytest.approx(4.0, rel=1e-6)

    def test_psi_decreasing_certifies_endpoint(self):
        # the certificate behind the analytic path: psi decreases on a grid
        for seed in range(30):
            f = random_function(seed)
            if f.is_zero():
                continue
            fam = PowerThreshold(1.0, 0.0)
            tf = apply(IDENTITY, f)
            a, s = f.support_start, f.support_end
            xs = np.linspace(a + 0.02 * (s - a), s, 200)
            vals = tf.eval_many(xs)
            mask = vals > 0
            thetas = vals[mask] / xs[mask]
            assert (np.diff(thetas) <= 1e-9).all()

    def test_sampled_range_solvable_and_below_min_fails(self, const4):
        fam = PowerThreshold(1.0, 0.0)
        r = admissible_range(const4, IDENTITY, fam)
        for theta in (r.theta_min, 2 * r.theta_min, 10 * r.theta_min):
            m, _ = solve_bundle_point(const4, IDENTITY, fam, theta)
            assert const4.support_start <= m <= const4.support_end
        with pytest.raises(NoRootError):
            solve_bundle_point(const4, IDENTITY, fam, 0.999 * r.theta_min)

    def test_sampled_certified_ranges_solvable_on_random_functions(self):
        fam = PowerThreshold(1.0, 0.0)
        for seed in range(30):
            f = random_function(seed)
            if f.is_zero():
                continue
            for op in (IDENTITY, AVERAGING):
                r = admissible_range(f, op, fam)
                assert r.certified
                base = r.theta_min if r.theta_min is not None else 1e-3
                for theta in (base, 3 * base, 50 * base):
                    m, _ = solve_bundle_point(f, op, fam, theta)
                    assert f.support_start <= m <= f.support_end
                if r.theta_min is not None:
                    with pytest.raises(NoRootError):
                        solve_bundle_point(f, op, fam, 0.9 * r.theta_min)

    def test_power_value_zero_iff_abscissa_zero(self):
        fam = PowerThreshold(2.0, 0.0)
        for theta in (0.5, 1.0, 7.0):
            assert a_eval(fam, 0.0, theta) == 0.0
            for x in (0.1, 1.0, 13.0):
                assert a_eval(fam, x, theta) > 0.0
