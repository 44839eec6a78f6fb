"""FastAPI application over the session store."""

from __future__ import annotations

from fastapi import FastAPI, Request, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import ValidationError
from starlette.concurrency import run_in_threadpool

from quadland.service.export import export_jsonl
from quadland.service.models import (
    Acknowledgment,
    ExitSurveyIn,
    FeedbackPayload,
    InputFrame,
    SessionCreated,
    SurveyIn,
    TrialStarted,
)
from quadland.service.settings import ServiceSettings
from quadland.service.store import ConflictError, NotFoundError, SessionStore


def create_app(
    settings: ServiceSettings | None = None, store: SessionStore | None = None
) -> FastAPI:
    if store is None:
        if settings is None:
            raise ValueError("create_app needs settings or a store")
        store = SessionStore(settings)

    app = FastAPI(title="quadland session service", version="0.1.0")
    app.state.store = store

    @app.exception_handler(NotFoundError)
    async def _not_found(_: Request, exc: NotFoundError) -> JSONResponse:
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(ConflictError)
    async def _conflict(_: Request, exc: ConflictError) -> JSONResponse:
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(TimeoutError)
    async def _timeout(_: Request, exc: TimeoutError) -> JSONResponse:
        return JSONResponse(status_code=504, content={"detail": str(exc)})

    @app.post("/sessions", response_model=SessionCreated, status_code=201)
    def create_session() -> SessionCreated:
        session = store.create_session()
        return SessionCreated(
            id=session.id, condition=session.condition.value, created_at=session.created_at
        )

    @app.post("/sessions/{session_id}/trials", response_model=TrialStarted, status_code=201)
    def start_trial(session_id: str) -> TrialStarted:
        index = store.start_trial(session_id)
        return TrialStarted(session=session_id, trial=index)

    @app.websocket("/sessions/{session_id}/trials/{trial}/input")
    async def trial_input(ws: WebSocket, session_id: str, trial: int) -> None:
        await ws.accept()
        try:
            store.get_session(session_id)
        except NotFoundError:
            await ws.close(code=4004, reason="unknown session")
            return
        try:
            while True:
                raw = await ws.receive_json()
                try:
                    frame = InputFrame.model_validate(raw)
                except ValidationError as exc:
                    await ws.send_json({"error": f"malformed input frame: {exc.errors()[0]['msg']}"})
                    store.close_input_stream(session_id, trial)
                    await ws.close(code=1003, reason="malformed input frame")
                    return
                try:
                    result = store.step_trial(session_id, trial, frame.throttle, frame.attitude)
                except ConflictError as exc:
                    await ws.send_json({"error": str(exc)})
                    await ws.close(code=4009, reason=str(exc))
                    return
                await ws.send_json(result)
                if result["terminated"]:
                    await ws.close()
                    return
        except WebSocketDisconnect:
            store.close_input_stream(session_id, trial)

    @app.get(
        "/sessions/{session_id}/trials/{trial}/feedback",
        response_model=FeedbackPayload,
        response_model_exclude_none=True,
    )
    async def get_feedback(session_id: str, trial: int) -> dict:
        # Thread pool keeps the blocking wait off the event loop.
        return await run_in_threadpool(store.feedback_payload, session_id, trial)

    @app.post("/sessions/{session_id}/trials/{trial}/survey", response_model=Acknowledgment)
    def submit_survey(session_id: str, trial: int, survey: SurveyIn) -> Acknowledgment:
        store.submit_survey(session_id, trial, survey.model_dump())
        return Acknowledgment(detail=f"survey stored for trial {trial}")

    @app.post("/sessions/{session_id}/exit-survey", response_model=Acknowledgment)
    def submit_exit_survey(session_id: str, survey: ExitSurveyIn) -> Acknowledgment:
        store.submit_exit_survey(session_id, survey.model_dump())
        return Acknowledgment(detail="exit survey stored")

    @app.get("/sessions/{session_id}/trials/{trial}/trajectory")
    def get_trajectory(session_id: str, trial: int) -> PlainTextResponse:
        session = store.get_session(session_id)
        record = session.record_for(trial)
        content = (store.data_dir / record.trajectory_file).read_text(encoding="utf-8")
        return PlainTextResponse(content, media_type="application/x-ndjson")

    @app.get("/export")
    def export() -> PlainTextResponse:
        return PlainTextResponse(export_jsonl(store), media_type="application/x-ndjson")

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "sessions": len(store.sessions)}

    if store.settings.static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount(
            "/app", StaticFiles(directory=store.settings.static_dir, html=True), name="app"
        )

    return app
