"""Simulation configuration."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path

CONFIG_VERSION = 1


@dataclass(frozen=True)
class SimConfig:
    """Geometry, thresholds, and dynamics constants.

    Positions are window units with the origin at the bottom-left; ``x``/``y``
    in the state refer to the drone's lower-left corner. Dynamics constants
    (gravity, thrust_gain, rotation_rate) are tuned for gameplay feel, not
    physical fidelity; the speed and angle caps bound the reachable state
    space so every landing component has a fixed robustness range.
    """

    window_width: float = 1250.0
    window_height: float = 600.0
    pad_x_min: float = 650.0
    pad_x_max: float = 850.0
    speed_limit: float = 15.0
    angle_limit: float = 5.0
    trial_cap: float = 120.0
    dt: float = 0.02
    drone_width: float = 40.0
    drone_height: float = 25.0
    gravity: float = 20.0
    thrust_gain: float = 40.0
    rotation_rate: float = 60.0
    max_speed: float = 32.0
    max_angle: float = 29.0
    start_x: float = 150.0
    start_y: float = 400.0

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0 and f.name not in ("start_x", "start_y"):
                raise ValueError(f"{f.name} must be positive")
        if not 0 <= self.pad_x_min < self.pad_x_max <= self.window_width:
            raise ValueError("landing pad must lie within the window")
        if abs(self.dt - 1.0 / 50.0) > 1e-12:
            raise ValueError("sampling is fixed at 50 Hz (dt = 0.02)")
        if not 0 <= self.start_x <= self.window_width - self.drone_width:
            raise ValueError("start_x outside the window")
        if not 0 <= self.start_y <= self.window_height - self.drone_height:
            raise ValueError("start_y outside the window")

    @property
    def max_steps(self) -> int:
        return round(self.trial_cap / self.dt)

    def to_json(self) -> dict:
        doc = {"version": CONFIG_VERSION}
        doc.update(asdict(self))
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "SimConfig":
        doc = dict(doc)
        version = doc.pop("version", None)
        if version != CONFIG_VERSION:
            raise ValueError(f"unsupported config version {version!r}")
        return cls(**doc)


def save_config(config: SimConfig, path: str | Path) -> None:
    Path(path).write_text(json.dumps(config.to_json(), indent=2) + "\n", encoding="utf-8")


def load_config(path: str | Path) -> SimConfig:
    return SimConfig.from_json(json.loads(Path(path).read_text(encoding="utf-8")))
