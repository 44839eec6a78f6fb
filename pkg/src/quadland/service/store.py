"""Session state, trial lifecycle, and append-only persistence.

The server is authoritative: clients send control frames, the server
simulates at the fixed tick and logs trajectory plus robustness at 50 Hz.
Each session persists as an append-only JSON-lines event log; an index file
carries creation order so condition assignment and exports are stable.
"""

from __future__ import annotations

import json
import os
import random
import threading
import time
from dataclasses import dataclass
from pathlib import Path

from quadland import stl
from quadland.assessment import (
    AnnotationPoint,
    ImprovementArea,
    RobustnessReport,
    annotation_point,
    assess,
    select_improvement_area,
)
from quadland.feedback import (
    FeedbackCondition,
    FeedbackText,
    RemoteProvider,
    SummaryStats,
    TemplateProvider,
    build_prompt,
    generate_feedback,
    render_trajectory_image,
    summarize,
)
from quadland.service.settings import ServiceSettings
from quadland.sim import (
    ControlInput,
    EpisodeRunner,
    SimConfig,
    Trajectory,
    default_specs,
    load_config,
    read_trajectory_log,
    run_episode,
    write_trajectory_log,
)
from quadland.sim.episode import LandingOutcome

MAX_TRIALS = 20
CONDITION_ORDER = (
    FeedbackCondition.BASELINE,
    FeedbackCondition.TEXT,
    FeedbackCondition.MULTIMODAL,
)

RATING_KEYS = ("motivation", "manageable", "actionable", "timely", "reflection")


class StoreError(Exception):
    pass


class NotFoundError(StoreError):
    pass


class ConflictError(StoreError):
    pass


@dataclass
class SurveyResponse:
    motivation: int
    manageable: int
    actionable: int
    timely: int
    reflection: int

    def __post_init__(self) -> None:
        for key in RATING_KEYS:
            value = getattr(self, key)
            if value not in (1, 2, 3, 4, 5):
                raise ValueError(f"rating {key}={value!r} outside 1..5")

    def to_json(self) -> dict:
        return {key: getattr(self, key) for key in RATING_KEYS}


@dataclass
class TrialRecord:
    index: int
    trajectory_file: str
    report: RobustnessReport
    summary: SummaryStats
    area: ImprovementArea
    annotation: AnnotationPoint
    text: FeedbackText | None
    image_svg: str
    trial_seconds: float
    completed_at: float
    feedback_delivered_at: float | None = None
    survey: SurveyResponse | None = None
    review_seconds: float | None = None


@dataclass
class LiveTrial:
    index: int
    runner: EpisodeRunner


class Session:
    def __init__(self, session_id: str, condition: FeedbackCondition, created_at: float):
        self.id = session_id
        self.condition = condition
        self.created_at = created_at
        self.records: list[TrialRecord] = []
        self.exit_survey: dict | None = None
        self.live: LiveTrial | None = None
        self.lock = threading.RLock()
        self.feedback_ready: dict[int, threading.Event] = {}

    def record_for(self, trial: int) -> TrialRecord:
        for record in self.records:
            if record.index == trial:
                return record
        raise NotFoundError(f"session {self.id} has no completed trial {trial}")


class SessionStore:
    def __init__(self, settings: ServiceSettings):
        self.settings = settings
        self.config = (
            load_config(settings.sim_config_file) if settings.sim_config_file else SimConfig()
        )
        self.specs = (
            stl.load_spec_file(settings.spec_file) if settings.spec_file else default_specs()
        )
        self.template_provider = (
            TemplateProvider.from_file(settings.template_file)
            if settings.template_file
            else TemplateProvider()
        )
        self.provider = (
            RemoteProvider(settings.provider_url, credential_env=settings.provider_credential_env)
            if settings.provider_url
            else self.template_provider
        )
        self._rng = random.Random(settings.assignment_seed)
        self._lock = threading.RLock()
        self.sessions: dict[str, Session] = {}
        self._session_order: list[str] = []

        self.data_dir = Path(settings.data_dir)
        self.sessions_dir = self.data_dir / "sessions"
        self.trajectories_dir = self.data_dir / "trajectories"
        self.index_path = self.data_dir / "index.json"
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self.trajectories_dir.mkdir(parents=True, exist_ok=True)
        self._load()

    # ------------------------------------------------------------------ setup

    def _load(self) -> None:
        if not self.index_path.exists():
            return
        index = json.loads(self.index_path.read_text(encoding="utf-8"))
        for session_id in index["sessions"]:
            path = self.sessions_dir / f"{session_id}.jsonl"
            session = self._replay_events(path)
            self.sessions[session.id] = session
            self._session_order.append(session.id)

    def _replay_events(self, path: Path) -> Session:
        session: Session | None = None
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                event = json.loads(line)
                kind = event["event"]
                if kind == "created":
                    session = Session(
                        event["id"], FeedbackCondition(event["condition"]), event["created_at"]
                    )
                    continue
                assert session is not None, f"event before creation in {path}"
                if kind == "trial":
                    record = _record_from_json(event["record"])
                    session.records.append(record)
                    ready = threading.Event()
                    ready.set()
                    session.feedback_ready[record.index] = ready
                elif kind == "feedback_delivered":
                    session.record_for(event["trial"]).feedback_delivered_at = event["at"]
                elif kind == "survey":
                    record = session.record_for(event["trial"])
                    record.survey = SurveyResponse(**event["ratings"])
                    record.review_seconds = event["review_seconds"]
                elif kind == "exit_survey":
                    session.exit_survey = event["data"]
        if session is None:
            raise StoreError(f"no creation event in {path}")
        return session

    def _append_event(self, session_id: str, event: dict) -> None:
        path = self.sessions_dir / f"{session_id}.jsonl"
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, separators=(",", ":")) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def _write_index(self) -> None:
        tmp = self.index_path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps({"sessions": self._session_order}), encoding="utf-8")
        os.replace(tmp, self.index_path)

    # --------------------------------------------------------------- sessions

    def create_session(self) -> Session:
        with self._lock:
            count = len(self._session_order)
            if self.settings.assignment == "round-robin":
                condition = CONDITION_ORDER[count % len(CONDITION_ORDER)]
            else:
                condition = self._rng.choice(CONDITION_ORDER)
            session_id = f"S{count + 1:04d}"
            session = Session(session_id, condition, time.time())
            event_path = self.sessions_dir / f"{session_id}.jsonl"
            try:
                self._append_event(
                    session_id,
                    {
                        "event": "created",
                        "id": session_id,
                        "condition": condition.value,
                        "created_at": session.created_at,
                    },
                )
                self._session_order.append(session_id)
                self._write_index()
            except OSError:
                self._session_order = [s for s in self._session_order if s != session_id]
                event_path.unlink(missing_ok=True)
                raise
            self.sessions[session_id] = session
            return session

    def get_session(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise NotFoundError(f"unknown session {session_id!r}")
        return session

    # ----------------------------------------------------------------- trials

    def start_trial(self, session_id: str) -> int:
        session = self.get_session(session_id)
        with session.lock:
            if session.live is not None:
                raise ConflictError(f"trial {session.live.index} is already in flight")
            if len(session.records) >= MAX_TRIALS:
                raise ConflictError(f"session {session_id} already completed {MAX_TRIALS} trials")
            index = len(session.records) + 1
            session.live = LiveTrial(index=index, runner=EpisodeRunner(self.config))
            return index

    def step_trial(self, session_id: str, trial: int, throttle: float, attitude: int) -> dict:
        """Advance the in-flight trial by one control frame."""
        session = self.get_session(session_id)
        with session.lock:
            live = session.live
            if live is None or live.index != trial:
                raise ConflictError(f"trial {trial} is not in flight")
            sample = live.runner.feed(ControlInput(throttle, attitude))
            outcome: str | None = None
            if live.runner.done:
                record = self._finalize_trial(session, live)
                outcome = record.report.outcome.value
            return {
                "trial": trial,
                "t": sample.t,
                "x": sample.x,
                "y": sample.y,
                "vx": sample.vx,
                "vy": sample.vy,
                "phi": sample.phi,
                "speed": sample.speed,
                "terminated": outcome is not None,
                "outcome": outcome,
            }

    def close_input_stream(self, session_id: str, trial: int) -> None:
        """The input stream ended early. A trial with frames completes as
        input-exhausted; one with no frames is discarded."""
        session = self.get_session(session_id)
        with session.lock:
            live = session.live
            if live is None or live.index != trial:
                return
            if live.runner.steps_taken == 0:
                session.live = None
                return
            self._finalize_trial(session, live)

    def _finalize_trial(self, session: Session, live: LiveTrial) -> TrialRecord:
        trajectory = live.runner.finish(self.specs)
        trajectory_file = f"trajectories/{session.id}_trial{live.index:02d}.jsonl"
        write_trajectory_log(trajectory, self.data_dir / trajectory_file)

        report = assess(trajectory, self.specs, self.config)
        area = select_improvement_area(report, trajectory, self.config)
        annotation = annotation_point(trajectory, report, area, self.config)
        image = render_trajectory_image(trajectory, annotation, self.config)
        summary = summarize(report, self.config)
        prompt = build_prompt(report, area, image, self.config)

        record = TrialRecord(
            index=live.index,
            trajectory_file=trajectory_file,
            report=report,
            summary=summary,
            area=area,
            annotation=annotation,
            text=None,
            image_svg=image.svg,
            trial_seconds=trajectory.duration,
            completed_at=time.time(),
        )
        session.records.append(record)
        session.live = None
        ready = threading.Event()
        session.feedback_ready[record.index] = ready

        def _generate() -> None:
            try:
                record.text = generate_feedback(
                    prompt, self.provider, fallback=self.template_provider
                )
            except Exception:
                # The feedback fetch must never hang on a generator bug.
                record.text = FeedbackText(
                    body=self.template_provider.generate(prompt),
                    provider_id="template(error-fallback)",
                )
            finally:
                self._append_event(
                    session.id, {"event": "trial", "record": _record_to_json(record)}
                )
                ready.set()

        threading.Thread(target=_generate, daemon=True).start()
        return record

    # --------------------------------------------------------------- feedback

    def wait_feedback(self, session_id: str, trial: int, timeout: float | None = None) -> TrialRecord:
        """Block until the trial's artifacts are all ready, then mark delivery."""
        session = self.get_session(session_id)
        with session.lock:
            ready = session.feedback_ready.get(trial)
            if ready is None:
                # Completed trials always have an event; reject unknown/in-flight.
                session.record_for(trial)
                raise StoreError("unreachable")
        timeout = timeout if timeout is not None else self.settings.feedback_timeout
        if not ready.wait(timeout):
            raise TimeoutError(f"feedback for trial {trial} not ready within {timeout}s")
        with session.lock:
            record = session.record_for(trial)
            if record.feedback_delivered_at is None:
                record.feedback_delivered_at = time.time()
                self._append_event(
                    session.id,
                    {
                        "event": "feedback_delivered",
                        "trial": trial,
                        "at": record.feedback_delivered_at,
                    },
                )
            return record

    def feedback_payload(self, session_id: str, trial: int, timeout: float | None = None) -> dict:
        """Condition-filtered payload; a pure function of condition and artifacts."""
        session = self.get_session(session_id)
        record = self.wait_feedback(session_id, trial, timeout)
        payload: dict = {
            "session": session_id,
            "trial": trial,
            "condition": session.condition.value,
        }
        if session.condition is FeedbackCondition.BASELINE:
            payload["summary"] = record.summary.to_json()
        elif session.condition is FeedbackCondition.TEXT:
            payload["text"] = record.text.body
        else:
            payload["text"] = record.text.body
            payload["image_svg"] = record.image_svg
        return payload

    # ---------------------------------------------------------------- surveys

    def submit_survey(self, session_id: str, trial: int, ratings: dict) -> None:
        session = self.get_session(session_id)
        with session.lock:
            record = session.record_for(trial)
            if record.feedback_delivered_at is None:
                raise ConflictError(f"feedback for trial {trial} has not been delivered")
            if record.survey is not None:
                raise ConflictError(f"trial {trial} already has a survey response")
            record.survey = SurveyResponse(**ratings)
            record.review_seconds = time.time() - record.feedback_delivered_at
            self._append_event(
                session_id,
                {
                    "event": "survey",
                    "trial": trial,
                    "ratings": record.survey.to_json(),
                    "review_seconds": record.review_seconds,
                    "at": time.time(),
                },
            )

    def submit_exit_survey(self, session_id: str, data: dict) -> None:
        session = self.get_session(session_id)
        with session.lock:
            if session.exit_survey is not None:
                raise ConflictError("exit survey already submitted")
            session.exit_survey = dict(data)
            self._append_event(session_id, {"event": "exit_survey", "data": session.exit_survey})

    # ----------------------------------------------------------------- export

    def ordered_sessions(self) -> list[Session]:
        return [self.sessions[sid] for sid in self._session_order]

    def wait_all_feedback(self, timeout: float | None = None) -> None:
        for session in self.ordered_sessions():
            for record in list(session.records):
                self.wait_feedback(session.id, record.index, timeout)

    def verify_replay(self, session_id: str, trial: int) -> bool:
        """Anti-tamper check: re-simulating the stored input log must
        reproduce the stored trajectory exactly."""
        session = self.get_session(session_id)
        record = session.record_for(trial)
        stored = read_trajectory_log(self.data_dir / record.trajectory_file, self.config)
        replayed = run_episode(stored.input_log(), self.config, self.specs)
        return _same_trajectory(stored, replayed)


def _same_trajectory(a: Trajectory, b: Trajectory) -> bool:
    if len(a) != len(b):
        return False
    for sa, sb in zip(a.samples, b.samples):
        if (sa.t, sa.x, sa.y, sa.vx, sa.vy, sa.phi, sa.throttle, sa.attitude) != (
            sb.t,
            sb.x,
            sb.y,
            sb.vx,
            sb.vy,
            sb.phi,
            sb.throttle,
            sb.attitude,
        ):
            return False
    return True


def _record_to_json(record: TrialRecord) -> dict:
    return {
        "index": record.index,
        "trajectory_file": record.trajectory_file,
        "report": record.report.to_json(),
        "summary": record.summary.to_json(),
        "area": record.area.value,
        "annotation": {
            "x": record.annotation.x,
            "y": record.annotation.y,
            "step_index": record.annotation.step_index,
        },
        "text": {"body": record.text.body, "provider_id": record.text.provider_id},
        "image_svg": record.image_svg,
        "trial_seconds": record.trial_seconds,
        "completed_at": record.completed_at,
    }


def _record_from_json(doc: dict) -> TrialRecord:
    summary_doc = doc["summary"]
    return TrialRecord(
        index=doc["index"],
        trajectory_file=doc["trajectory_file"],
        report=RobustnessReport.from_json(doc["report"]),
        summary=SummaryStats(
            outcome=LandingOutcome(summary_doc["outcome"]),
            score=summary_doc["score"],
            final_speed=summary_doc["final_speed"],
            final_angle=summary_doc["final_angle"],
            duration=summary_doc["duration"],
        ),
        area=ImprovementArea(doc["area"]),
        annotation=AnnotationPoint(
            x=doc["annotation"]["x"],
            y=doc["annotation"]["y"],
            step_index=doc["annotation"]["step_index"],
        ),
        text=FeedbackText(body=doc["text"]["body"], provider_id=doc["text"]["provider_id"]),
        image_svg=doc["image_svg"],
        trial_seconds=doc["trial_seconds"],
        completed_at=doc["completed_at"],
    )
