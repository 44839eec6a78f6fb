"""Episode replay and landing-outcome classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from quadland.sim.config import SimConfig
from quadland.sim.dynamics import IDLE, ControlInput, SimState, initial_state, step


class LandingOutcome(Enum):
    SAFE = "Safe"
    UNSAFE = "Unsafe"
    CRASH = "Crash"


class Termination(Enum):
    PAD = "pad"
    FLOOR = "floor"
    LEFT_WALL = "left_wall"
    RIGHT_WALL = "right_wall"
    TOP = "top"
    TIMEOUT = "timeout"
    INPUT_EXHAUSTED = "input_exhausted"


@dataclass
class TrajectorySample:
    """One 50 Hz log row: post-step state plus the control that produced it.

    ``rob`` holds per-component robustness (s1..s4, l1..l4, S, L) once
    attached; the initial sample carries idle controls.
    """

    t: float
    x: float
    y: float
    vx: float
    vy: float
    phi: float
    throttle: float
    attitude: int
    rob: dict[str, float] | None = None

    @property
    def speed(self) -> float:
        return (self.vx * self.vx + self.vy * self.vy) ** 0.5


@dataclass
class Trajectory:
    samples: list[TrajectorySample] = field(default_factory=list)
    dt: float = 0.02
    termination: Termination | None = None

    @property
    def duration(self) -> float:
        return self.samples[-1].t if self.samples else 0.0

    @property
    def final(self) -> TrajectorySample:
        return self.samples[-1]

    def input_log(self) -> list[ControlInput]:
        """Recover the control inputs that produced this trajectory."""
        return [ControlInput(s.throttle, s.attitude) for s in self.samples[1:]]

    def __len__(self) -> int:
        return len(self.samples)


def _contact(x: float, y: float, config: SimConfig) -> Termination | None:
    """Boundary contact for an (unclamped) lower-left position, bottom first."""
    if y <= 0.0:
        footprint_on_pad = x >= config.pad_x_min and x + config.drone_width <= config.pad_x_max
        return Termination.PAD if footprint_on_pad else Termination.FLOOR
    if x <= 0.0:
        return Termination.LEFT_WALL
    if x >= config.window_width - config.drone_width:
        return Termination.RIGHT_WALL
    if y >= config.window_height - config.drone_height:
        return Termination.TOP
    return None


def _clamp(value: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, value))


class EpisodeRunner:
    """Incremental episode: feed one control frame at a time.

    Both batch replay and the live input stream drive this runner, so a
    replayed log reproduces a live trial sample for sample.
    """

    def __init__(self, config: SimConfig):
        self.config = config
        self.state = initial_state(config)
        self.samples: list[TrajectorySample] = [_to_sample(self.state, IDLE)]
        self.termination: Termination | None = None

    @property
    def done(self) -> bool:
        return self.termination is not None

    @property
    def steps_taken(self) -> int:
        return len(self.samples) - 1

    def feed(self, control: ControlInput) -> TrajectorySample:
        if self.done:
            raise RuntimeError("episode already terminated")
        config = self.config
        state = step(self.state, control, config)
        contact = _contact(state.x, state.y, config)
        if contact is not None:
            state = SimState(
                x=_clamp(state.x, 0.0, config.window_width - config.drone_width),
                y=_clamp(state.y, 0.0, config.window_height - config.drone_height),
                vx=state.vx,
                vy=state.vy,
                phi=state.phi,
                t=state.t,
            )
            self.termination = contact
        elif self.steps_taken + 1 == config.max_steps:
            self.termination = Termination.TIMEOUT
        self.state = state
        sample = _to_sample(state, control)
        self.samples.append(sample)
        return sample

    def finish(self, specs: dict | None = None) -> Trajectory:
        """Close out the episode (exhausted input counts as terminal) and
        attach per-component robustness unless ``specs`` is an empty dict."""
        termination = self.termination if self.termination is not None else Termination.INPUT_EXHAUSTED
        trajectory = Trajectory(samples=self.samples, dt=self.config.dt, termination=termination)
        if specs != {}:
            from quadland.sim.monitor import attach_robustness, default_specs

            attach_robustness(trajectory, specs if specs is not None else default_specs(), self.config)
        return trajectory


def run_episode(
    input_log: Sequence[ControlInput],
    config: SimConfig,
    specs: dict | None = None,
) -> Trajectory:
    """Replay a control log from the fixed initial state.

    Stops at the first boundary contact, at the 120 s cap, or when the log
    runs out. Samples include per-component robustness unless ``specs`` is
    explicitly passed as an empty dict.
    """
    if len(input_log) > config.max_steps:
        raise ValueError(f"input log exceeds the trial cap ({len(input_log)} > {config.max_steps} steps)")
    runner = EpisodeRunner(config)
    for control in input_log:
        runner.feed(control)
        if runner.done:
            break
    return runner.finish(specs)


def _to_sample(state: SimState, control: ControlInput) -> TrajectorySample:
    return TrajectorySample(
        t=state.t,
        x=state.x,
        y=state.y,
        vx=state.vx,
        vy=state.vy,
        phi=state.phi,
        throttle=control.throttle,
        attitude=control.attitude,
    )


def detect_termination(samples: Sequence[TrajectorySample], config: SimConfig) -> Termination:
    """Re-derive the terminal event for a loaded sample log."""
    final = samples[-1]
    contact = _contact(final.x, final.y, config)
    if contact is not None:
        return contact
    if final.t >= config.trial_cap - config.dt / 2:
        return Termination.TIMEOUT
    return Termination.INPUT_EXHAUSTED


def classify_outcome(trajectory: Trajectory, config: SimConfig) -> LandingOutcome:
    """Label a terminated trajectory Safe, Unsafe, or Crash.

    Safe needs pad contact below both thresholds; pad contact violating
    speed or angle is Unsafe; every other termination (walls, floor off the
    pad, timeout, abandoned input) is a crash.
    """
    if trajectory.termination is None:
        raise ValueError("trajectory has not terminated")
    if trajectory.termination is not Termination.PAD:
        return LandingOutcome.CRASH
    final = trajectory.final
    if final.speed < config.speed_limit and abs(final.phi) < config.angle_limit:
        return LandingOutcome.SAFE
    return LandingOutcome.UNSAFE
