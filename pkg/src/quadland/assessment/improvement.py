"""Improvement-area selection, annotation placement, and overall score.

Selection priority: window contact first, then landing speed/angle for
unsafe landings, then efficiency for slow successful trials, otherwise
smoothness. Speed and angle violations are compared after normalizing each
by the magnitude of its worst attainable value, so m/s and degrees weigh
comparably.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum

from quadland.sim.config import SimConfig
from quadland.sim.episode import LandingOutcome, Trajectory
from quadland.sim.monitor import COMPONENT_NAMES, component_ranges, component_series, default_specs
from quadland.assessment.report import RobustnessReport

DEFAULT_EFFICIENCY_THRESHOLD = 45.0  # seconds; ~1.5x a competent landing time


class ImprovementArea(Enum):
    AVOID_LEFT_EDGE = "AvoidLeftEdge"
    AVOID_RIGHT_EDGE = "AvoidRightEdge"
    AVOID_BOTTOM_EDGE = "AvoidBottomEdge"
    AVOID_TOP_EDGE = "AvoidTopEdge"
    LANDING_SPEED = "LandingSpeed"
    LANDING_ANGLE = "LandingAngle"
    EFFICIENCY = "Efficiency"
    SMOOTHNESS = "Smoothness"


_EDGE_AREAS = {
    "s1": ImprovementArea.AVOID_LEFT_EDGE,
    "s2": ImprovementArea.AVOID_RIGHT_EDGE,
    "s3": ImprovementArea.AVOID_BOTTOM_EDGE,
    "s4": ImprovementArea.AVOID_TOP_EDGE,
}


@dataclass(frozen=True)
class AnnotationPoint:
    x: float
    y: float
    step_index: int


def _safety_series(trajectory: Trajectory, config: SimConfig) -> dict[str, list[float]]:
    if trajectory.samples and trajectory.samples[0].rob is not None:
        return {n: [s.rob[n] for s in trajectory.samples] for n in COMPONENT_NAMES[:4]}
    series = component_series(trajectory, default_specs(), config)
    return {n: series[n] for n in COMPONENT_NAMES[:4]}


def select_improvement_area(
    report: RobustnessReport,
    trajectory: Trajectory,
    config: SimConfig,
    efficiency_threshold: float = DEFAULT_EFFICIENCY_THRESHOLD,
) -> ImprovementArea:
    """Pick the single area the next trial should focus on."""
    contacted = [name for name in COMPONENT_NAMES[:4] if report.component(name) <= 0.0]
    if contacted:
        if len(contacted) == 1:
            return _EDGE_AREAS[contacted[0]]
        series = _safety_series(trajectory, config)
        # A component the series never shows at zero (possible for reports not
        # derived from this trajectory) sorts last.
        first_step = {
            name: next((i for i, v in enumerate(series[name]) if v <= 0.0), len(trajectory))
            for name in contacted
        }
        # Earliest contact wins; simultaneous contacts fall back to s1..s4 order.
        winner = min(contacted, key=lambda name: (first_step[name], name))
        return _EDGE_AREAS[winner]

    if report.outcome is LandingOutcome.UNSAFE:
        ranges = component_ranges(config)
        speed_violation = report.l3 / abs(ranges["l3"][0])
        angle_violation = report.l4 / abs(ranges["l4"][0])
        if speed_violation < angle_violation:
            return ImprovementArea.LANDING_SPEED
        return ImprovementArea.LANDING_ANGLE

    if report.outcome is LandingOutcome.SAFE and report.duration > efficiency_threshold:
        return ImprovementArea.EFFICIENCY
    return ImprovementArea.SMOOTHNESS


def annotation_point(
    trajectory: Trajectory,
    report: RobustnessReport,
    area: ImprovementArea,
    config: SimConfig,
) -> AnnotationPoint:
    """Where the trajectory image's highlight circle goes.

    Crashes mark the crash site; unsafe landings mark the worst landing-speed
    or landing-angle robustness within the final 50 samples (the whole
    trajectory when shorter); safe landings mark the busiest control moment.
    Ties resolve to the earliest step.
    """
    if not trajectory.samples:
        raise ValueError("trajectory has no samples")
    samples = trajectory.samples

    if report.outcome is LandingOutcome.CRASH:
        index = len(samples) - 1
    elif report.outcome is LandingOutcome.UNSAFE:
        if area not in (ImprovementArea.LANDING_SPEED, ImprovementArea.LANDING_ANGLE):
            raise ValueError(f"area {area} inconsistent with an unsafe landing")
        name = "l3" if area is ImprovementArea.LANDING_SPEED else "l4"
        start = max(0, len(samples) - 50)
        if samples[0].rob is not None:
            values = [s.rob[name] for s in samples]
        else:
            values = component_series(trajectory, default_specs(), config)[name]
        index = min(range(start, len(samples)), key=lambda i: (values[i], i))
    else:
        effort = [s.throttle + abs(s.attitude) for s in samples]
        index = max(range(len(samples)), key=lambda i: (effort[i], -i))

    chosen = samples[index]
    return AnnotationPoint(x=chosen.x, y=chosen.y, step_index=index)


def overall_score(report: RobustnessReport, config: SimConfig | None = None) -> int:
    """0-100 summary: mean of the components normalized by their attainable
    ranges, rounded half-up. Monotone in every component."""
    ranges = component_ranges(config if config is not None else SimConfig())
    total = 0.0
    for name in COMPONENT_NAMES:
        lo, hi = ranges[name]
        fraction = (report.component(name) - lo) / (hi - lo)
        total += min(1.0, max(0.0, fraction))
    mean = total / len(COMPONENT_NAMES)
    return int(Decimal(100 * mean).quantize(Decimal("1"), rounding=ROUND_HALF_UP))
