"""Deterministic fixed-timestep 2D quadrotor simulation and outcome labeling."""

from quadland.sim.config import SimConfig, load_config, save_config
from quadland.sim.dynamics import ControlInput, SimState, initial_state, step
from quadland.sim.episode import (
    EpisodeRunner,
    LandingOutcome,
    Termination,
    Trajectory,
    TrajectorySample,
    classify_outcome,
    detect_termination,
    run_episode,
)
from quadland.sim.logio import read_trajectory_log, trajectory_log_lines, write_trajectory_log
from quadland.sim.monitor import (
    COMPONENT_NAMES,
    attach_robustness,
    component_ranges,
    component_robustness,
    component_series,
    default_specs,
)

__all__ = [
    "SimConfig",
    "load_config",
    "save_config",
    "ControlInput",
    "SimState",
    "initial_state",
    "step",
    "EpisodeRunner",
    "LandingOutcome",
    "Termination",
    "Trajectory",
    "TrajectorySample",
    "classify_outcome",
    "detect_termination",
    "run_episode",
    "read_trajectory_log",
    "trajectory_log_lines",
    "write_trajectory_log",
    "COMPONENT_NAMES",
    "attach_robustness",
    "component_ranges",
    "component_robustness",
    "component_series",
    "default_specs",
]
