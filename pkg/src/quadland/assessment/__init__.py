"""Trajectory assessment: robustness report, improvement area, score."""

from quadland.assessment.improvement import (
    AnnotationPoint,
    ImprovementArea,
    annotation_point,
    overall_score,
    select_improvement_area,
)
from quadland.assessment.report import RobustnessReport, assess

__all__ = [
    "AnnotationPoint",
    "ImprovementArea",
    "annotation_point",
    "overall_score",
    "select_improvement_area",
    "RobustnessReport",
    "assess",
]
