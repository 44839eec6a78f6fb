"""Quadrotor state stepping.

Semi-implicit Euler at fixed dt: determinism and exact replayability matter
more than integration accuracy here. Replaying the same inputs reproduces
positions, velocities, and angles bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from quadland.sim.config import SimConfig


@dataclass(frozen=True)
class ControlInput:
    """One 50 Hz control frame: throttle in [0, 1], attitude in {-1, 0, +1}."""

    throttle: float
    attitude: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.throttle <= 1.0:
            raise ValueError(f"throttle must be in [0, 1], got {self.throttle}")
        if self.attitude not in (-1, 0, 1):
            raise ValueError(f"attitude must be -1, 0, or +1, got {self.attitude}")


IDLE = ControlInput(0.0, 0)


@dataclass(frozen=True)
class SimState:
    """Drone state; ``x``/``y`` locate the lower-left corner, phi is degrees."""

    x: float
    y: float
    vx: float
    vy: float
    phi: float
    t: float

    @property
    def speed(self) -> float:
        return math.hypot(self.vx, self.vy)


def initial_state(config: SimConfig) -> SimState:
    """Fixed start: at rest, level, above and left of the pad."""
    return SimState(x=config.start_x, y=config.start_y, vx=0.0, vy=0.0, phi=0.0, t=0.0)


def step(state: SimState, control: ControlInput, config: SimConfig) -> SimState:
    """Advance one tick. Positions are not clamped here; the episode loop
    detects boundary contact and clamps at the terminal sample."""
    phi = state.phi + control.attitude * config.rotation_rate * config.dt
    phi = max(-config.max_angle, min(config.max_angle, phi))

    thrust = control.throttle * config.thrust_gain
    rad = math.radians(phi)
    vx = state.vx + thrust * math.sin(rad) * config.dt
    vy = state.vy + (thrust * math.cos(rad) - config.gravity) * config.dt
    speed = math.hypot(vx, vy)
    if speed > config.max_speed:
        scale = config.max_speed / speed
        vx *= scale
        vy *= scale

    return SimState(
        x=state.x + vx * config.dt,
        y=state.y + vy * config.dt,
        vx=vx,
        vy=vy,
        phi=phi,
        t=state.t + config.dt,
    )
