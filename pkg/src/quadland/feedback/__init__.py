"""Feedback artifacts: summary stats, generated text, annotated trajectory image."""

from quadland.feedback.artifacts import FeedbackCondition, SummaryStats, summarize
from quadland.feedback.elements import ElementCoverage, validate_elements
from quadland.feedback.prompt import PromptBundle, build_prompt
from quadland.feedback.providers import (
    FeedbackProviderError,
    FeedbackText,
    RemoteProvider,
    TemplateProvider,
    generate_feedback,
)
from quadland.feedback.render import AnnotatedImage, render_trajectory_image

__all__ = [
    "FeedbackCondition",
    "SummaryStats",
    "summarize",
    "ElementCoverage",
    "validate_elements",
    "PromptBundle",
    "build_prompt",
    "FeedbackProviderError",
    "FeedbackText",
    "RemoteProvider",
    "TemplateProvider",
    "generate_feedback",
    "AnnotatedImage",
    "render_trajectory_image",
]
