import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadland import stl
from quadland.stl import NEG_SENTINEL, Trace, parse_formula, robustness, robustness_series

from .oracles import bool_oracle, make_trace, random_trace, rob_oracle


class TestAtomic:
    def test_margin_above_zero_threshold(self):
        trace = make_trace(xs=[300.0])
        assert robustness(parse_formula("x > 0"), trace, 0) == 300.0

    def test_less_than_margin(self):
        trace = make_trace(xs=[300.0])
        assert robustness(parse_formula("x < 1250"), trace, 0) == 950.0

    def test_speed_and_angle_dimensions(self):
        trace = make_trace(xs=[0.0], speeds=[10.0], phis=[-3.0])
        assert robustness(parse_formula("||v|| < 15"), trace, 0) == 5.0
        # the angle dimension reads |phi|, so the sign drops
        assert robustness(parse_formula("|phi| < 5"), trace, 0) == 2.0


class TestConjunction:
    def test_landing_component_sample(self, specs):
        # Table values: l1 = 100, l2 = 100, l3 = 5, l4 = 5 -> min is 5
        trace = make_trace(xs=[750.0], speeds=[10.0], phis=[0.0])
        assert robustness(specs["L"], trace, 0) == 5.0

    def test_pointwise_min_of_children(self, specs):
        rng = random.Random(7)
        trace = random_trace(rng, max_len=60)
        series = robustness_series(specs["S"], trace)
        child_series = [robustness_series(specs[n], trace) for n in ("s1", "s2", "s3", "s4")]
        for i, value in enumerate(series):
            assert value == min(cs[i] for cs in child_series)


class TestUntil:
    # Hand-evaluated fixture: left margins [5,4,3,2,1], right margins [-1,0,2,1,3],
    # window [0, 0.06] = 3 steps at dt 0.02.
    FORMULA = parse_formula("(x > 0) until[0,0.06] (y > 0)")
    TRACE = make_trace(xs=[5, 4, 3, 2, 1], ys=[-1, 0, 2, 1, 3])

    def test_hand_evaluated_values(self):
        assert robustness(self.FORMULA, self.TRACE, 0) == 2.0
        assert robustness_series(self.FORMULA, self.TRACE) == [2.0, 2.0, 2.0, 2.0, 3.0]

    def test_matches_enumeration_oracle(self):
        for t in range(len(self.TRACE)):
            assert robustness(self.FORMULA, self.TRACE, t) == rob_oracle(self.FORMULA, self.TRACE, t)

    def test_empty_window_sentinel(self):
        f = parse_formula("(x > 0) until[2,3] (y > 0)")
        assert robustness(f, self.TRACE, 0) == NEG_SENTINEL

    def test_window_clipped_at_trace_end(self):
        f = parse_formula("(x > 0) until[0,100] (y > 0)")
        # candidate window survives clipping; value from the oracle definition
        assert robustness(f, self.TRACE, 3) == rob_oracle(f, self.TRACE, 3)

    def test_bounds_rounding(self):
        # lower rounds up, upper rounds down
        assert stl.bounds_to_steps(0.01, 0.05, 0.02) == (1, 2)
        assert stl.bounds_to_steps(0.0, 120.0, 0.02) == (0, 6000)
        assert stl.bounds_to_steps(0.04, 0.04, 0.02) == (2, 2)


class TestSeries:
    def test_constant_trace_constant_series(self):
        trace = make_trace(xs=[100.0] * 8)
        assert robustness_series(parse_formula("x > 40"), trace) == [60.0] * 8

    def test_series_matches_per_step_robustness(self, specs):
        rng = random.Random(11)
        trace = random_trace(rng, max_len=50)
        for name in ("s1", "l3", "S", "L", "full"):
            series = robustness_series(specs[name], trace)
            assert len(series) == len(trace)
            for t in range(len(trace)):
                assert series[t] == robustness(specs[name], trace, t)

    def test_random_trace_matches_oracle_exactly(self, specs):
        rng = random.Random(13)
        trace = random_trace(rng, max_len=100)
        for name in ("s1", "s2", "s3", "s4", "l1", "l2", "l3", "l4", "S", "L"):
            series = robustness_series(specs[name], trace)
            for t in range(len(trace)):
                assert series[t] == rob_oracle(specs[name], trace, t), (name, t)


class TestValidation:
    def test_empty_trace_rejected(self):
        with pytest.raises(ValueError):
            Trace([], dt=0.02)

    def test_non_uniform_spacing_rejected(self):
        samples = [
            stl.Sample(t=0.0, x=0, y=0, speed=0, phi=0),
            stl.Sample(t=0.05, x=0, y=0, speed=0, phi=0),
        ]
        with pytest.raises(ValueError):
            Trace(samples, dt=0.02)

    def test_index_out_of_range(self):
        trace = make_trace(xs=[1.0, 2.0])
        with pytest.raises(IndexError):
            robustness(parse_formula("x > 0"), trace, 2)


# --- properties ---------------------------------------------------------------

_small_traces = st.integers(min_value=2, max_value=40)


@given(seed=st.integers(0, 10_000), delta=st.floats(min_value=1e-3, max_value=500.0))
@settings(max_examples=60, deadline=None)
def test_shift_monotonicity(seed, delta):
    rng = random.Random(seed)
    trace = random_trace(rng, max_len=25)
    shifted = make_trace(
        xs=[s.x + delta for s in trace.samples],
        ys=[s.y for s in trace.samples],
        speeds=[s.speed for s in trace.samples],
        phis=[s.phi for s in trace.samples],
    )
    above = parse_formula("x > 100")
    below = parse_formula("x < 100")
    for t in range(len(trace)):
        assert robustness(above, shifted, t) == pytest.approx(
            robustness(above, trace, t) + delta, abs=1e-9
        )
        assert robustness(below, shifted, t) == pytest.approx(
            robustness(below, trace, t) - delta, abs=1e-9
        )


@given(seed=st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_sign_soundness_on_fragment(seed, specs):
    rng = random.Random(seed)
    trace = random_trace(rng, max_len=30)
    for name in ("s1", "l4", "S", "L", "full"):
        f = specs[name]
        for t in range(len(trace)):
            rho = robustness(f, trace, t)
            if rho > 0:
                assert bool_oracle(f, trace, t), (name, t)
            elif rho < 0:
                assert not bool_oracle(f, trace, t), (name, t)


@given(seed=st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_until_agrees_with_definitional_oracle(seed):
    rng = random.Random(seed)
    trace = random_trace(rng, max_len=35)
    lower = rng.choice([0.0, 0.02, 0.1, 0.25])
    upper = lower + rng.choice([0.0, 0.04, 0.3, 2.0])
    f = stl.UntilBounded(
        parse_formula("x > 600 and y > 300"), lower, upper, parse_formula("||v|| < 20")
    )
    for t in range(len(trace)):
        assert robustness(f, trace, t) == rob_oracle(f, trace, t)
