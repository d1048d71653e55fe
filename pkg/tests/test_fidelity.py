"""Average fidelity, no-cloning threshold, and the budgeted optimum."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvteleport import (
    InvalidBudgetError,
    NegativeLambdaError,
    UniformLimitError,
    UnphysicalChannelError,
)
from cvteleport.fidelity import (
    SECURITY_TOL,
    Alphabet,
    avg_fidelity,
    boundary_noise,
    f_opt,
    is_secure,
    no_cloning_threshold,
    optimal_channel,
    s_ab_min,
    security_report,
    tau_opt,
)
from cvteleport.gaussian import Direction
from cvteleport.teleport import SteeringBudget, transmissivity_window

SQRT2M1 = 0.41421356237309515  # sqrt(2) - 1

# frozen high-precision reference values (50-digit arithmetic)
THRESH_02 = 0.75
THRESH_1 = 0.92099142644072825
THRESH_BREAK = 0.8284271247461901
TAU_OPT_BA = 0.73423395951712854
Y_OPT_BA = 0.49217174154445133
F_OPT_BA = 0.82262051643584594
TAU_OPT_BA_S0 = 0.69444444444444444
TAU_OPT_AB = 0.82644628099173554
F_OPT_AB = 0.81370191178573258
S_AB_MIN_02 = 0.27763173659827949
S_AB_MIN_06 = 0.66024635191333414
FAVG_SPEC_CHANNEL = 0.82260667377741064
FAVG_TAU1 = 0.7310582799660789


class TestAvgFidelity:
    def test_identity_channel_is_perfect(self):
        for lam in (0.1, 0.5, 2.0):
            assert avg_fidelity(1.0, 0.0, lam) == pytest.approx(1.0, abs=1e-15)

    def test_frozen_values(self):
        assert avg_fidelity(0.73423, 0.49221, 0.2) == pytest.approx(
            FAVG_SPEC_CHANNEL, abs=1e-14
        )
        assert avg_fidelity(1.0, 0.73576, 0.2) == pytest.approx(
            FAVG_TAU1, abs=1e-14
        )

    def test_classical_benchmark(self):
        # measure-and-prepare channel (tau=1, y=2): F = 2 lam / (4 lam)...
        # the uniform-limit value 1/2 is approached as lam -> 0
        assert avg_fidelity(1.0, 2.0, 1e-9) == pytest.approx(0.5, abs=1e-8)

    def test_decreasing_in_noise(self):
        fs = [avg_fidelity(0.8, y, 0.3) for y in np.linspace(0.2, 2.0, 12)]
        assert all(x > y for x, y in zip(fs, fs[1:]))

    def test_uniform_limit_rejected(self):
        with pytest.raises(UniformLimitError):
            avg_fidelity(1.0, 0.5, 0.0)

    def test_negative_lambda_rejected(self):
        with pytest.raises(NegativeLambdaError):
            avg_fidelity(1.0, 0.5, -0.2)

    def test_unphysical_channel_rejected(self):
        with pytest.raises(UnphysicalChannelError):
            avg_fidelity(0.5, 0.2, 0.5)

    @given(
        tau=st.floats(0.05, 2.5),
        extra=st.floats(0.0, 2.0),
        lam=st.floats(0.01, 5.0),
    )
    @settings(max_examples=300, deadline=None)
    def test_bounded_in_unit_interval(self, tau, extra, lam):
        f = avg_fidelity(tau, abs(1 - tau) + extra, lam)
        assert 0.0 < f <= 1.0 + 1e-12


class TestThreshold:
    def test_frozen_values(self):
        assert no_cloning_threshold(0.2) == pytest.approx(THRESH_02, abs=1e-14)
        assert no_cloning_threshold(1.0) == pytest.approx(THRESH_1, abs=1e-14)

    def test_uniform_limit_value(self):
        assert no_cloning_threshold(0.0) == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_continuous_at_breakpoint(self):
        lo = no_cloning_threshold(SQRT2M1 * (1 - 1e-12))
        hi = no_cloning_threshold(SQRT2M1 * (1 + 1e-12))
        assert lo == pytest.approx(hi, abs=1e-9)
        assert no_cloning_threshold(SQRT2M1) == pytest.approx(
            THRESH_BREAK, abs=1e-12
        )

    def test_monotone_increasing(self):
        lams = np.linspace(0.01, 3.0, 200)
        ts = [no_cloning_threshold(l) for l in lams]
        assert all(x < y for x, y in zip(ts, ts[1:]))

    def test_negative_rejected(self):
        with pytest.raises(NegativeLambdaError):
            no_cloning_threshold(-0.1)


class TestOptimalChannel:
    def test_fixed_sba_example(self):
        tau, y, clamped = optimal_channel(0.2, 0.4, Direction.B_TO_A)
        assert tau == pytest.approx(TAU_OPT_BA, abs=1e-14)
        assert y == pytest.approx(Y_OPT_BA, abs=1e-14)
        assert not clamped

    def test_fixed_sab_example(self):
        tau, y, clamped = optimal_channel(0.2, 0.6, Direction.A_TO_B)
        assert tau == pytest.approx(TAU_OPT_AB, abs=1e-14)
        assert y == pytest.approx(math.exp(-0.6), abs=1e-14)
        assert not clamped

    def test_zero_budget_tangency(self):
        assert tau_opt(0.2, 0.0, Direction.B_TO_A) == pytest.approx(
            TAU_OPT_BA_S0, abs=1e-14
        )

    def test_infinite_budget_identity(self):
        tau, y, clamped = optimal_channel(0.5, math.inf, Direction.B_TO_A)
        assert (tau, y, clamped) == (1.0, 0.0, False)
        assert f_opt(0.5, math.inf, Direction.B_TO_A) == 1.0

    def test_clamped_at_large_lambda(self):
        # tangency moves below the window start: infinite-energy optimum
        tau, y, clamped = optimal_channel(2.0, 0.1, Direction.B_TO_A)
        assert clamped
        assert tau == pytest.approx(1.0 / (1.0 + math.exp(-0.1)), abs=1e-14)
        tau_ab, y_ab, clamped_ab = optimal_channel(50.0, 0.6, Direction.A_TO_B)
        assert clamped_ab
        assert tau_ab == pytest.approx(1.0 - math.exp(-0.6), abs=1e-14)

    def test_optimum_sits_on_accessible_boundary(self):
        for direction, s in (
            (Direction.B_TO_A, 0.4),
            (Direction.A_TO_B, 0.6),
        ):
            tau, y, _ = optimal_channel(0.2, s, direction)
            assert y == pytest.approx(
                boundary_noise(s, tau, direction), abs=1e-14
            )

    def test_unclamped_optimum_inside_window(self):
        for direction, s in (
            (Direction.B_TO_A, 0.4),
            (Direction.A_TO_B, 0.6),
        ):
            tau, _, clamped = optimal_channel(0.2, s, direction)
            assert not clamped
            lo, hi = transmissivity_window(direction, s)
            assert lo < tau < hi

    def test_budget_validation(self):
        with pytest.raises(InvalidBudgetError):
            optimal_channel(0.2, -0.1, Direction.B_TO_A)
        with pytest.raises(InvalidBudgetError):
            f_opt(0.2, math.nan, Direction.B_TO_A)


class TestFOpt:
    def test_frozen_values(self):
        assert f_opt(0.2, 0.4, Direction.B_TO_A) == pytest.approx(
            F_OPT_BA, abs=1e-14
        )
        assert f_opt(0.2, 0.6, Direction.A_TO_B) == pytest.approx(
            F_OPT_AB, abs=1e-14
        )

    def test_zero_budget_reduces_to_threshold(self):
        for lam in np.linspace(0.01, 3.0, 200):
            assert f_opt(lam, 0.0, Direction.B_TO_A) == pytest.approx(
                no_cloning_threshold(lam), abs=1e-12
            )

    def test_equals_fidelity_at_optimal_channel(self):
        for lam in (0.05, 0.2, SQRT2M1, 1.0, 2.5):
            for s in (0.1, 0.4, 1.0, 3.0):
                for direction in (Direction.B_TO_A, Direction.A_TO_B):
                    tau, y, _ = optimal_channel(lam, s, direction)
                    assert f_opt(lam, s, direction) == pytest.approx(
                        avg_fidelity(tau, y, lam), abs=1e-12
                    )

    def test_increasing_in_budget(self):
        budgets = np.linspace(0.0, 4.0, 50)
        for direction in (Direction.B_TO_A, Direction.A_TO_B):
            start = 0 if direction is Direction.B_TO_A else 1
            fs = [f_opt(0.7, s, direction) for s in budgets[start:]]
            assert all(x < y for x, y in zip(fs, fs[1:]))

    def test_large_budget_stays_finite(self):
        # overflow guard: e^{2s} formulations would blow up here
        f = f_opt(0.5, 600.0, Direction.B_TO_A)
        assert 0.99 < f <= 1.0
        f = f_opt(0.5, 600.0, Direction.A_TO_B)
        assert 0.99 < f <= 1.0


class TestSabMin:
    def test_frozen_values(self):
        assert s_ab_min(0.2) == pytest.approx(S_AB_MIN_02, abs=1e-14)
        assert s_ab_min(0.6) == pytest.approx(S_AB_MIN_06, abs=1e-14)

    def test_saturates_at_log2(self):
        for lam in (2 * SQRT2M1 + 1e-9, 1.5, 10.0, 1e6):
            assert s_ab_min(lam) == pytest.approx(math.log(2.0), abs=1e-9)

    def test_continuity_at_breakpoints(self):
        for bp in (SQRT2M1, 2 * SQRT2M1):
            lo = s_ab_min(bp * (1 - 1e-12))
            hi = s_ab_min(bp * (1 + 1e-12))
            assert lo == pytest.approx(hi, abs=1e-9)

    def test_security_identity(self):
        for lam in np.linspace(0.01, 3.0, 100):
            assert f_opt(lam, s_ab_min(lam), Direction.A_TO_B) == pytest.approx(
                no_cloning_threshold(lam), abs=1e-9
            )

    def test_below_minimum_is_insecure(self):
        for lam in (0.2, 0.6, 1.5):
            s = s_ab_min(lam)
            f_below = f_opt(lam, s * 0.9, Direction.A_TO_B)
            f_above = f_opt(lam, s * 1.1, Direction.A_TO_B)
            thr = no_cloning_threshold(lam)
            assert f_below < thr
            assert f_above > thr


class TestScanOracle:
    def _scan(self, lam, s, direction, n=100_000):
        # brute force along the budget line; it is a physical channel
        # exactly inside the window, whose endpoints linspace includes
        lo, hi = transmissivity_window(direction, s)
        taus = np.linspace(lo, hi, n)
        line = (
            math.exp(-s) * taus
            if direction is Direction.B_TO_A
            else np.full_like(taus, math.exp(-s))
        )
        fs = 2.0 * lam / (
            2.0 * (1.0 - np.sqrt(taus)) ** 2 + lam * (1.0 + line + taus)
        )
        k = int(np.argmax(fs))
        return taus[k], float(fs[k]), (taus[1] - taus[0])

    def test_matches_closed_form(self, rng):
        for _ in range(12):
            lam = rng.uniform(0.05, 3.0)
            s = rng.uniform(0.05, 2.5)
            direction = (
                Direction.B_TO_A if rng.uniform() < 0.5 else Direction.A_TO_B
            )
            tau_scan, f_scan, res = self._scan(lam, s, direction)
            assert tau_opt(lam, s, direction) == pytest.approx(
                tau_scan, abs=2 * res
            )
            assert f_opt(lam, s, direction) == pytest.approx(f_scan, abs=1e-6)


class TestAlphabet:
    def test_pdf_peak(self):
        assert Alphabet(0.5).pdf(0.0) == pytest.approx(0.5 / math.pi, abs=1e-15)

    def test_pdf_normalization(self):
        lam = 0.7
        grid = np.linspace(-6, 6, 301)
        dx = grid[1] - grid[0]
        vals = [
            Alphabet(lam).pdf(complex(x, y)) for x in grid for y in grid
        ]
        assert sum(vals) * dx * dx == pytest.approx(1.0, abs=1e-6)

    def test_mean_photon(self):
        assert Alphabet(0.25).mean_photon_number == pytest.approx(4.0)

    def test_uniform_limit_descriptor(self):
        # lam = 0 constructs, but anything requiring normalization raises
        flat = Alphabet(0.0)
        with pytest.raises(UniformLimitError):
            flat.pdf(0.0)
        with pytest.raises(UniformLimitError):
            flat.mean_photon_number

    def test_negative_lambda(self):
        with pytest.raises(NegativeLambdaError):
            Alphabet(-1.0)


class TestSecurity:
    def test_guard_band(self):
        assert not is_secure(0.75, 0.75)
        assert not is_secure(0.75 + 1e-13, 0.75)
        assert is_secure(0.75 + 1e-11, 0.75)
        assert SECURITY_TOL == 1e-12

    def test_report_fields(self):
        rep = security_report(1.0, 0.3, 0.2, SteeringBudget(s_ba=0.4))
        assert rep.tau == 1.0
        assert rep.y == 0.3
        assert rep.f_avg == pytest.approx(avg_fidelity(1.0, 0.3, 0.2))
        assert rep.threshold == pytest.approx(THRESH_02)
        assert rep.secure
        # y = 0.3 sits below the budget line e^{-0.4} tau ~ 0.67
        assert not rep.accessible
        assert rep.mc is None

    def test_boundary_exactness_not_secure(self):
        # the zero-budget optimum only reaches the threshold
        f = f_opt(0.2, 0.0, Direction.B_TO_A)
        assert not is_secure(f, no_cloning_threshold(0.2))

    def test_insecure_report(self):
        rep = security_report(1.0, 2.5, 0.2)
        assert not rep.secure
