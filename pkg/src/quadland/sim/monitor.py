"""Per-component robustness over trajectories.

Each avoidance predicate is judged at the drone edge nearest its boundary
(the drone is a 40x25 box, so e.g. the right-edge margin is measured from
x + drone_width); the landing-pad predicates use the left edge. This is the
geometry that gives every component its fixed robustness range.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from math import hypot

from quadland import stl
from quadland.sim.config import SimConfig
from quadland.sim.episode import Trajectory, TrajectorySample

COMPONENT_NAMES = ("s1", "s2", "s3", "s4", "l1", "l2", "l3", "l4")

# (dx, dy) added to the lower-left corner before evaluating the component.
_EDGE_OFFSETS = {
    "s1": ("zero", "zero"),
    "s2": ("width", "zero"),
    "s3": ("zero", "zero"),
    "s4": ("zero", "height"),
    "l1": ("zero", "zero"),
    "l2": ("zero", "zero"),
    "l3": ("zero", "zero"),
    "l4": ("zero", "zero"),
}


def _offsets(name: str, config: SimConfig) -> tuple[float, float]:
    dx_kind, dy_kind = _EDGE_OFFSETS[name]
    dx = config.drone_width if dx_kind == "width" else 0.0
    dy = config.drone_height if dy_kind == "height" else 0.0
    return dx, dy


@lru_cache(maxsize=1)
def _default_spec_text() -> str:
    return resources.files("quadland.data").joinpath("landing.spec").read_text(encoding="utf-8")


def default_specs() -> dict[str, stl.Formula]:
    """The packaged landing-task specifications (parsed fresh each call)."""
    return stl.parse_spec_source(_default_spec_text())


def _require(specs: dict[str, stl.Formula], name: str) -> stl.Formula:
    try:
        return specs[name]
    except KeyError:
        raise KeyError(f"specification set is missing formula {name!r}") from None


def _component_trace(trajectory: Trajectory, name: str, config: SimConfig) -> stl.Trace:
    dx, dy = _offsets(name, config)
    samples = [
        stl.Sample(t=s.t, x=s.x + dx, y=s.y + dy, speed=hypot(s.vx, s.vy), phi=s.phi)
        for s in trajectory.samples
    ]
    return stl.Trace(samples, dt=trajectory.dt)


def component_series(
    trajectory: Trajectory, specs: dict[str, stl.Formula], config: SimConfig
) -> dict[str, list[float]]:
    """Robustness series for s1..l4 plus the pointwise S and L conjunctions."""
    series: dict[str, list[float]] = {}
    for name in COMPONENT_NAMES:
        formula = _require(specs, name)
        series[name] = stl.robustness_series(formula, _component_trace(trajectory, name, config))
    series["S"] = [min(vs) for vs in zip(*(series[n] for n in COMPONENT_NAMES[:4]))]
    series["L"] = [min(vs) for vs in zip(*(series[n] for n in COMPONENT_NAMES[4:]))]
    return series


def full_spec_robustness(
    series: dict[str, list[float]], specs: dict[str, stl.Formula], dt: float
) -> float:
    """Robustness of the overall task formula at the start of the trial."""
    full = _require(specs, "full")
    if not isinstance(full, stl.UntilBounded):
        raise ValueError("the 'full' specification must be a bounded until")
    lo, hi = stl.bounds_to_steps(full.lower, full.upper, dt)
    return stl.until_from_series(series["S"], series["L"], lo, hi, 0)


def attach_robustness(
    trajectory: Trajectory, specs: dict[str, stl.Formula], config: SimConfig
) -> dict[str, list[float]]:
    """Fill each sample's ``rob`` dict; returns the series for reuse."""
    series = component_series(trajectory, specs, config)
    keys = COMPONENT_NAMES + ("S", "L")
    for i, sample in enumerate(trajectory.samples):
        sample.rob = {k: series[k][i] for k in keys}
    return series


def component_robustness(
    x: float,
    y: float,
    speed: float,
    phi: float,
    specs: dict[str, stl.Formula],
    config: SimConfig,
) -> dict[str, float]:
    """Per-component robustness of a single state (lower-left position)."""
    sample = TrajectorySample(t=0.0, x=x, y=y, vx=speed, vy=0.0, phi=phi, throttle=0.0, attitude=0)
    trajectory = Trajectory(samples=[sample], dt=config.dt)
    series = component_series(trajectory, specs, config)
    return {name: series[name][0] for name in COMPONENT_NAMES}


def component_ranges(config: SimConfig) -> dict[str, tuple[float, float]]:
    """Attainable robustness range per component under the clamped geometry."""
    x_span = config.window_width - config.drone_width
    y_span = config.window_height - config.drone_height
    return {
        "s1": (0.0, x_span),
        "s2": (0.0, x_span),
        "s3": (0.0, y_span),
        "s4": (0.0, y_span),
        "l1": (-config.pad_x_min, x_span - config.pad_x_min),
        "l2": (config.pad_x_max - x_span, config.pad_x_max),
        "l3": (config.speed_limit - config.max_speed, config.speed_limit),
        "l4": (config.angle_limit - config.max_angle, config.angle_limit),
    }
