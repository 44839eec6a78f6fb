"""Prompt assembly for feedback generation.

The bundle carries the four content parts every generator receives: what the
task is, which area to address (with its robustness context), the annotated
trajectory image, and what each element of the feedback must contain.
"""

from __future__ import annotations

from dataclasses import dataclass

from quadland.assessment.improvement import ImprovementArea
from quadland.assessment.report import RobustnessReport
from quadland.feedback.artifacts import summarize
from quadland.feedback.render import AnnotatedImage
from quadland.sim.config import SimConfig

ELEMENT_INSTRUCTIONS = (
    "Write one short paragraph of feedback for the pilot containing all five "
    "elements below.\n"
    "- Reflection: give specific detail about what happened and ask a question "
    "that makes the pilot think back over the flight.\n"
    "- Motivation: express confidence in the pilot's ability to improve.\n"
    "- Timely: speak about the attempt that just ended, not piloting in general.\n"
    "- Actionable: give a concrete suggestion tied to the throttle and rotation "
    "controls.\n"
    "- Manageable: stay between 60 and 160 words so the advice is easy to absorb."
)


def task_description(config: SimConfig) -> str:
    return (
        "The pilot flies a simulated 2D quadrotor with two keyboard controls: "
        "throttle (vertical force) and attitude (rotation, which tilts thrust "
        "sideways). The goal is to land on the pad between x="
        f"{config.pad_x_min:.0f} and x={config.pad_x_max:.0f} at the bottom of a "
        f"{config.window_width:.0f}x{config.window_height:.0f} window, touching "
        f"down slower than {config.speed_limit:.0f} m/s with a tilt within "
        f"±{config.angle_limit:.0f} degrees, within {config.trial_cap:.0f} "
        "seconds. Touching any window edge away from the pad is a crash."
    )


@dataclass(frozen=True)
class PromptBundle:
    task_description: str
    improvement_area: str
    trajectory_image: AnnotatedImage
    element_instructions: str
    area: ImprovementArea
    context: dict[str, str]


def _area_context(
    report: RobustnessReport, area: ImprovementArea, image: AnnotatedImage, config: SimConfig
) -> str:
    spot = f"({image.annotation.x:.0f}, {image.annotation.y:.0f})"
    duration = f"{report.duration:.1f}"
    summary = summarize(report, config)
    if area is ImprovementArea.AVOID_LEFT_EDGE:
        return f"Area of improvement: avoid the left edge. The drone contacted it at {spot} after {duration} s."
    if area is ImprovementArea.AVOID_RIGHT_EDGE:
        return f"Area of improvement: avoid the right edge. The drone contacted it at {spot} after {duration} s."
    if area is ImprovementArea.AVOID_BOTTOM_EDGE:
        return (
            f"Area of improvement: avoid the ground away from the pad. "
            f"The drone hit the floor at {spot} after {duration} s."
        )
    if area is ImprovementArea.AVOID_TOP_EDGE:
        return f"Area of improvement: avoid the top edge. The drone contacted it at {spot} after {duration} s."
    if area is ImprovementArea.LANDING_SPEED:
        return (
            f"Area of improvement: landing speed. Touchdown speed was "
            f"{summary.final_speed:.1f} m/s against the {config.speed_limit:.0f} m/s "
            f"limit (margin {report.l3:.1f}); the worst moment is circled at {spot}."
        )
    if area is ImprovementArea.LANDING_ANGLE:
        return (
            f"Area of improvement: landing angle. Touchdown tilt was "
            f"{summary.final_angle:.1f} degrees against the ±{config.angle_limit:.0f} "
            f"degree limit (margin {report.l4:.1f}); the worst moment is circled at {spot}."
        )
    if area is ImprovementArea.EFFICIENCY:
        return (
            f"Area of improvement: efficiency. The landing was safe but took "
            f"{duration} s; the busiest control moment is circled at {spot}."
        )
    return (
        f"Area of improvement: smoothness. The landing was safe (score {summary.score}); "
        f"the busiest control moment is circled at {spot}."
    )


def build_prompt(
    report: RobustnessReport,
    area: ImprovementArea,
    image: AnnotatedImage | None,
    config: SimConfig,
) -> PromptBundle:
    """Assemble the deterministic prompt bundle for one trial."""
    if image is None:
        raise ValueError("an annotated trajectory image is required to build the prompt")
    summary = summarize(report, config)
    context = {
        "outcome": report.outcome.value,
        "score": str(summary.score),
        "duration": f"{report.duration:.1f}",
        "final_speed": f"{summary.final_speed:.1f}",
        "final_angle": f"{summary.final_angle:.1f}",
        "speed_limit": f"{config.speed_limit:.0f}",
        "angle_limit": f"{config.angle_limit:.0f}",
        "speed_over": f"{max(0.0, summary.final_speed - config.speed_limit):.1f}",
        "angle_over": f"{max(0.0, summary.final_angle - config.angle_limit):.1f}",
        "spot_x": f"{image.annotation.x:.0f}",
        "spot_y": f"{image.annotation.y:.0f}",
    }
    return PromptBundle(
        task_description=task_description(config),
        improvement_area=_area_context(report, area, image, config),
        trajectory_image=image,
        element_instructions=ELEMENT_INSTRUCTIONS,
        area=area,
        context=context,
    )
