"""Quantitative semantics over discrete-time traces.

Semantics are discrete only: a trace is a uniformly sampled sequence and
time bounds convert to step indices (no interpolation between samples).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from quadland.stl.formula import Atomic, Comparator, Conjunction, Dimension, Formula, UntilBounded

# Stand-in for the -inf an empty until window would produce; keeps reports finite.
NEG_SENTINEL = -1e9

_SPACING_TOL = 1e-9


@dataclass(frozen=True)
class Sample:
    """One trace point. ``phi`` is the signed rotation angle in degrees."""

    t: float
    x: float
    y: float
    speed: float
    phi: float

    def __post_init__(self) -> None:
        if self.speed < 0:
            raise ValueError(f"speed must be nonnegative, got {self.speed}")

    def value(self, dimension: Dimension) -> float:
        if dimension is Dimension.X:
            return self.x
        if dimension is Dimension.Y:
            return self.y
        if dimension is Dimension.SPEED:
            return self.speed
        return abs(self.phi)


class Trace:
    """Non-empty sequence of samples at fixed spacing ``dt``."""

    def __init__(self, samples: Sequence[Sample], dt: float = 0.02):
        samples = tuple(samples)
        if not samples:
            raise ValueError("trace must contain at least one sample")
        if dt <= 0:
            raise ValueError(f"dt must be positive, got {dt}")
        for i in range(1, len(samples)):
            gap = samples[i].t - samples[i - 1].t
            if gap <= 0:
                raise ValueError(f"timestamps must strictly increase (sample {i})")
            if abs(gap - dt) > _SPACING_TOL:
                raise ValueError(f"non-uniform spacing at sample {i}: {gap} != {dt}")
        self.samples = samples
        self.dt = dt

    def __len__(self) -> int:
        return len(self.samples)


def bounds_to_steps(lower: float, upper: float, dt: float) -> tuple[int, int]:
    """Convert time bounds in seconds to step indices.

    Fractional bounds round conservatively (lower up, upper down); the small
    epsilon keeps exact multiples of dt from being eaten by float noise.
    """
    lo = math.ceil(lower / dt - 1e-9)
    hi = math.floor(upper / dt + 1e-9)
    return max(lo, 0), hi


def _margin(atom: Atomic, sample: Sample) -> float:
    value = sample.value(atom.dimension)
    if atom.comparator is Comparator.GT:
        return value - atom.constant
    return atom.constant - value


def until_from_series(
    left_series: Sequence[float],
    right_series: Sequence[float],
    lower_steps: int,
    upper_steps: int,
    t_index: int,
) -> float:
    """Bounded-until robustness at ``t_index`` from child robustness series.

    Implements max over t' in [t+lower, t+upper] of
    min(right[t'], min over t'' in [t, t') of left[t'']), on step indices.
    """
    n = len(right_series)
    if len(left_series) != n:
        raise ValueError("child series lengths differ")
    if not 0 <= t_index < n:
        raise IndexError(f"t_index {t_index} outside series of length {n}")
    t_hi = min(t_index + upper_steps, n - 1)
    t_lo = t_index + lower_steps
    best: float | None = None
    running_left_min = math.inf
    for t_prime in range(t_index, t_hi + 1):
        if t_prime >= t_lo:
            candidate = min(right_series[t_prime], running_left_min)
            if best is None or candidate > best:
                best = candidate
        running_left_min = min(running_left_min, left_series[t_prime])
    return NEG_SENTINEL if best is None else best


def robustness_series(f: Formula, trace: Trace) -> list[float]:
    """Robustness at every step; element i equals ``robustness(f, trace, i)``."""
    if isinstance(f, Atomic):
        return [_margin(f, s) for s in trace.samples]
    if isinstance(f, Conjunction):
        child_series = [robustness_series(c, trace) for c in f.children]
        return [min(values) for values in zip(*child_series)]
    if isinstance(f, UntilBounded):
        left = robustness_series(f.left, trace)
        right = robustness_series(f.right, trace)
        lo, hi = bounds_to_steps(f.lower, f.upper, trace.dt)
        return [until_from_series(left, right, lo, hi, t) for t in range(len(trace))]
    raise TypeError(f"not a formula: {f!r}")


def robustness(f: Formula, trace: Trace, t_index: int) -> float:
    """Robustness of ``f`` over ``trace`` evaluated at step ``t_index``."""
    if not 0 <= t_index < len(trace):
        raise IndexError(f"t_index {t_index} outside trace of length {len(trace)}")
    if isinstance(f, Atomic):
        return _margin(f, trace.samples[t_index])
    if isinstance(f, Conjunction):
        return min(robustness(c, trace, t_index) for c in f.children)
    if isinstance(f, UntilBounded):
        left = robustness_series(f.left, trace)
        right = robustness_series(f.right, trace)
        lo, hi = bounds_to_steps(f.lower, f.upper, trace.dt)
        return until_from_series(left, right, lo, hi, t_index)
    raise TypeError(f"not a formula: {f!r}")
