"""Robustness reports for completed trials.

Safety components are worst cases over the approach (for pad landings the
touchdown sample is excluded, where the bottom margin is trivially zero);
landing components are read at the terminal sample.
"""

from __future__ import annotations

from dataclasses import dataclass

from quadland import stl
from quadland.sim.config import SimConfig
from quadland.sim.episode import LandingOutcome, Termination, Trajectory, classify_outcome
from quadland.sim.monitor import COMPONENT_NAMES, component_series, full_spec_robustness


@dataclass(frozen=True)
class RobustnessReport:
    s1: float
    s2: float
    s3: float
    s4: float
    l1: float
    l2: float
    l3: float
    l4: float
    S: float
    L: float
    full: float
    outcome: LandingOutcome
    duration: float

    def component(self, name: str) -> float:
        return getattr(self, name)

    def to_json(self) -> dict:
        doc = {name: getattr(self, name) for name in COMPONENT_NAMES}
        doc.update(
            S=self.S,
            L=self.L,
            full=self.full,
            outcome=self.outcome.value,
            duration=self.duration,
        )
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "RobustnessReport":
        fields = {name: doc[name] for name in COMPONENT_NAMES}
        return cls(
            **fields,
            S=doc["S"],
            L=doc["L"],
            full=doc["full"],
            outcome=LandingOutcome(doc["outcome"]),
            duration=doc["duration"],
        )


def assess(
    trajectory: Trajectory, specs: dict[str, stl.Formula], config: SimConfig
) -> RobustnessReport:
    """Aggregate a terminated trajectory into a robustness report."""
    outcome = classify_outcome(trajectory, config)
    series = component_series(trajectory, specs, config)

    pad_landing = trajectory.termination is Termination.PAD
    values: dict[str, float] = {}
    for name in COMPONENT_NAMES[:4]:
        window = series[name][:-1] if pad_landing and len(trajectory) > 1 else series[name]
        values[name] = min(window)
    for name in COMPONENT_NAMES[4:]:
        values[name] = series[name][-1]

    return RobustnessReport(
        **values,
        S=min(values[n] for n in COMPONENT_NAMES[:4]),
        L=min(values[n] for n in COMPONENT_NAMES[4:]),
        full=full_spec_robustness(series, specs, trajectory.dt),
        outcome=outcome,
        duration=trajectory.duration,
    )
