"""Trajectory logs as JSON lines, one sample per line.

Floats serialize via repr so a written log reloads bit-identically.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from quadland.sim.config import SimConfig
from quadland.sim.episode import Trajectory, TrajectorySample, detect_termination

_ROB_KEYS = ("s1", "s2", "s3", "s4", "l1", "l2", "l3", "l4", "S", "L")


def _sample_doc(sample: TrajectorySample) -> dict:
    doc = {
        "t": sample.t,
        "x": sample.x,
        "y": sample.y,
        "vx": sample.vx,
        "vy": sample.vy,
        "phi": sample.phi,
        "throttle": sample.throttle,
        "attitude": sample.attitude,
    }
    if sample.rob is not None:
        doc["rob"] = {k: sample.rob[k] for k in _ROB_KEYS}
    return doc


def trajectory_log_lines(trajectory: Trajectory) -> Iterator[str]:
    for sample in trajectory.samples:
        yield json.dumps(_sample_doc(sample), separators=(",", ":"))


def write_trajectory_log(trajectory: Trajectory, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in trajectory_log_lines(trajectory):
            fh.write(line + "\n")


def _parse_lines(lines: Iterable[str]) -> list[TrajectorySample]:
    samples = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        doc = json.loads(line)
        samples.append(
            TrajectorySample(
                t=doc["t"],
                x=doc["x"],
                y=doc["y"],
                vx=doc["vx"],
                vy=doc["vy"],
                phi=doc["phi"],
                throttle=doc["throttle"],
                attitude=doc["attitude"],
                rob=doc.get("rob"),
            )
        )
    if not samples:
        raise ValueError("trajectory log contains no samples")
    return samples


def read_trajectory_log(path: str | Path, config: SimConfig) -> Trajectory:
    with open(path, encoding="utf-8") as fh:
        samples = _parse_lines(fh)
    return Trajectory(samples=samples, dt=config.dt, termination=detect_termination(samples, config))
