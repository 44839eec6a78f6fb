"""Deterministic scripted pilots.

A proportional pilot closes the loop against the simulator and returns the
open-loop input log it flew; replaying that log reproduces the flight
exactly. Used for demos, integration tests, and scripted episodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from quadland.sim.config import SimConfig
from quadland.sim.dynamics import ControlInput, SimState
from quadland.sim.episode import EpisodeRunner


@dataclass(frozen=True)
class PilotParams:
    target_x: float | None = None  # lower-left target; pad center when unset
    cruise_y: float = 380.0
    horizontal_gain: float = 0.50
    tilt_gain: float = 2.5
    max_vx: float = 30.0
    max_tilt: float = 25.0
    descent_gain: float = 0.22
    min_sink: float = 2.5
    max_sink: float = 14.0
    climb_gain: float = 0.15
    throttle_gain: float = 0.08
    approach_radius: float = 300.0
    level_out_height: float = 50.0


def _clamp(value: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, value))


def pilot_control(state: SimState, config: SimConfig, params: PilotParams) -> ControlInput:
    """One control frame toward a slow, level touchdown on the target."""
    target_x = (
        params.target_x
        if params.target_x is not None
        else (config.pad_x_min + config.pad_x_max - config.drone_width) / 2.0
    )
    error_x = target_x - state.x
    desired_vx = _clamp(params.horizontal_gain * error_x, -params.max_vx, params.max_vx)
    desired_phi = _clamp(
        params.tilt_gain * (desired_vx - state.vx), -params.max_tilt, params.max_tilt
    )
    if state.y < params.level_out_height:
        # Square up before touchdown: kill lateral speed, then level the tilt.
        desired_phi = _clamp(-1.5 * state.vx, -8.0, 8.0) if abs(state.vx) > 0.5 else 0.0

    deadband = config.rotation_rate * config.dt * 0.6
    if desired_phi > state.phi + deadband:
        attitude = 1
    elif desired_phi < state.phi - deadband:
        attitude = -1
    else:
        attitude = 0

    if abs(error_x) > params.approach_radius:
        desired_vy = _clamp(params.climb_gain * (params.cruise_y - state.y), -5.0, 5.0)
    else:
        sink = _clamp(params.descent_gain * state.y + params.min_sink, params.min_sink, params.max_sink)
        desired_vy = -sink

    hover = config.gravity / config.thrust_gain
    throttle = _clamp(
        hover / max(0.2, math.cos(math.radians(state.phi)))
        + params.throttle_gain * (desired_vy - state.vy),
        0.0,
        1.0,
    )
    return ControlInput(throttle, attitude)


def fly_pilot(
    config: SimConfig, params: PilotParams | None = None, max_frames: int | None = None
) -> list[ControlInput]:
    """Fly the pilot closed-loop; returns the input log for open-loop replay."""
    params = params or PilotParams()
    limit = max_frames if max_frames is not None else config.max_steps
    runner = EpisodeRunner(config)
    inputs: list[ControlInput] = []
    while not runner.done and len(inputs) < limit:
        control = pilot_control(runner.state, config, params)
        runner.feed(control)
        inputs.append(control)
    return inputs


def hover_script(config: SimConfig, frames: int) -> list[ControlInput]:
    """Exact hover: thrust balances gravity, so the drone never moves."""
    throttle = config.gravity / config.thrust_gain
    return [ControlInput(throttle, 0)] * frames


def fast_landing_params() -> PilotParams:
    """Reaches the pad but sinks too fast: an unsafe landing."""
    return replace(PilotParams(), descent_gain=0.2, min_sink=16.0, max_sink=26.0, level_out_height=25.0)


def leisurely_params() -> PilotParams:
    """Safe but slow (over the efficiency threshold)."""
    return replace(
        PilotParams(),
        horizontal_gain=0.35,
        tilt_gain=2.0,
        max_vx=26.0,
        descent_gain=0.15,
        min_sink=2.0,
        max_sink=12.0,
        approach_radius=220.0,
        level_out_height=60.0,
    )
