"""Keyword heuristics for the five formative-feedback elements."""

from __future__ import annotations

import re
from dataclasses import dataclass

# Manageable: detailed but not overwhelming.
WORD_BUDGET = (60, 160)

_MOTIVATION_CUES = (
    "you can do",
    "you're capable",
    "you are capable",
    "keep at it",
    "keep going",
    "keep practicing",
    "well done",
    "nice work",
    "good work",
    "great job",
    "you've got this",
    "you have the",
    "you clearly have",
    "within reach",
    "getting closer",
    "real progress",
    "coming along",
    "hard part",
)

_TIMELY_CUES = (
    "this trial",
    "this attempt",
    "this run",
    "this landing",
    "this touchdown",
    "that last",
    "you just",
    "just now",
    "just flew",
    "latest trial",
    "latest attempt",
)

_ACTION_VERBS = (
    "try",
    "ease",
    "easing",
    "reduce",
    "reducing",
    "increase",
    "add",
    "adding",
    "apply",
    "adjust",
    "hold",
    "holding",
    "feather",
    "feathering",
    "level",
    "leveling",
    "cut",
    "cutting",
    "use",
    "using",
    "tap",
    "tapping",
    "smooth",
    "smoothing",
    "slow",
    "bleed",
    "counter",
    "nudge",
    "nudging",
    "commit",
    "committing",
)

_CONTROL_TERMS = ("throttle", "rotation", "attitude", "tilt")


@dataclass(frozen=True)
class ElementCoverage:
    reflection: bool
    motivation: bool
    timely: bool
    actionable: bool
    manageable: bool

    def all_present(self) -> bool:
        return all(
            (self.reflection, self.motivation, self.timely, self.actionable, self.manageable)
        )

    def to_json(self) -> dict[str, bool]:
        return {
            "reflection": self.reflection,
            "motivation": self.motivation,
            "timely": self.timely,
            "actionable": self.actionable,
            "manageable": self.manageable,
        }


def _has_word(words: set[str], candidates: tuple[str, ...]) -> bool:
    return any(c in words for c in candidates)


def validate_elements(text: str) -> ElementCoverage:
    """Per-element coverage verdict for a feedback paragraph.

    Reflection wants a question; motivation an encouraging phrase; timely a
    reference to the trial that just ended; actionable an action verb paired
    with a control term (throttle/rotation); manageable a word count inside
    the budget.
    """
    lowered = text.lower()
    words = set(re.findall(r"[a-z0-9''\-]+", lowered))
    word_count = len(re.findall(r"[a-z0-9''\-]+", lowered))

    return ElementCoverage(
        reflection="?" in text,
        motivation=any(cue in lowered for cue in _MOTIVATION_CUES),
        timely=any(cue in lowered for cue in _TIMELY_CUES),
        actionable=_has_word(words, _ACTION_VERBS) and _has_word(words, _CONTROL_TERMS),
        manageable=WORD_BUDGET[0] <= word_count <= WORD_BUDGET[1],
    )
