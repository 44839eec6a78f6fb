"""Summary statistics and the feedback-condition enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from quadland.assessment.improvement import overall_score
from quadland.assessment.report import RobustnessReport
from quadland.sim.config import SimConfig
from quadland.sim.episode import LandingOutcome


class FeedbackCondition(Enum):
    BASELINE = "Baseline"
    TEXT = "Text"
    MULTIMODAL = "Multimodal"


@dataclass(frozen=True)
class SummaryStats:
    """The baseline condition's table: outcome, score, and touchdown numbers."""

    outcome: LandingOutcome
    score: int
    final_speed: float
    final_angle: float
    duration: float

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "score": self.score,
            "final_speed": self.final_speed,
            "final_angle": self.final_angle,
            "duration": self.duration,
        }


def summarize(report: RobustnessReport, config: SimConfig | None = None) -> SummaryStats:
    """Derive summary stats from a report; the landing margins give back the
    touchdown speed and absolute angle."""
    config = config if config is not None else SimConfig()
    return SummaryStats(
        outcome=report.outcome,
        score=overall_score(report, config),
        final_speed=config.speed_limit - report.l3,
        final_angle=config.angle_limit - report.l4,
        duration=report.duration,
    )
