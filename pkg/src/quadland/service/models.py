"""Wire schemas for the session API."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class SessionCreated(BaseModel):
    id: str
    condition: Literal["Baseline", "Text", "Multimodal"]
    created_at: float


class TrialStarted(BaseModel):
    session: str
    trial: int


class InputFrame(BaseModel):
    """One client control frame; ``t`` is the client-side timestamp."""

    t: float
    throttle: float = Field(ge=0.0, le=1.0)
    attitude: Literal[-1, 0, 1]


class StateFrame(BaseModel):
    """Authoritative simulation state echoed back per input frame."""

    trial: int
    t: float
    x: float
    y: float
    vx: float
    vy: float
    phi: float
    speed: float
    terminated: bool
    outcome: Optional[Literal["Safe", "Unsafe", "Crash"]] = None


class SummaryOut(BaseModel):
    outcome: Literal["Safe", "Unsafe", "Crash"]
    score: int = Field(ge=0, le=100)
    final_speed: float
    final_angle: float
    duration: float


class FeedbackPayload(BaseModel):
    """Condition-filtered feedback for one trial.

    Baseline carries only the summary; Text only the paragraph; Multimodal
    the paragraph plus the annotated SVG.
    """

    session: str
    trial: int
    condition: Literal["Baseline", "Text", "Multimodal"]
    summary: Optional[SummaryOut] = None
    text: Optional[str] = None
    image_svg: Optional[str] = None


class SurveyIn(BaseModel):
    motivation: int = Field(ge=1, le=5)
    manageable: int = Field(ge=1, le=5)
    actionable: int = Field(ge=1, le=5)
    timely: int = Field(ge=1, le=5)
    reflection: int = Field(ge=1, le=5)


class ExitSurveyIn(BaseModel):
    gender_identity: str
    age: int = Field(ge=18, le=120)
    drone_experience: str
    video_game_frequency: str
    helpfulness: int = Field(ge=1, le=5)
    strategy: str


class Acknowledgment(BaseModel):
    ok: bool = True
    detail: str = ""
