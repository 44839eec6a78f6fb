import json
import time

import pytest
from fastapi.testclient import TestClient

from quadland.analysis import rows_from_lines
from quadland.feedback import TemplateProvider
from quadland.service import ServiceSettings, SessionStore, create_app
from quadland.service.export import export_dataset, export_jsonl, export_rows
from quadland.service.store import ConflictError, NotFoundError
from quadland.sim.pilots import PilotParams, fast_landing_params, fly_pilot

RATINGS = dict(motivation=4, manageable=3, actionable=4, timely=3, reflection=5)


@pytest.fixture()
def store(tmp_path):
    return SessionStore(ServiceSettings(data_dir=tmp_path / "data"))


@pytest.fixture()
def client(store):
    return TestClient(create_app(store=store))


def drive_trial(store, session_id, inputs):
    """Run one trial through the store's frame interface (no WebSocket)."""
    trial = store.start_trial(session_id)
    for control in inputs:
        result = store.step_trial(session_id, trial, control.throttle, control.attitude)
        if result["terminated"]:
            break
    else:
        store.close_input_stream(session_id, trial)
    return trial, result


@pytest.fixture(scope="module")
def landing_inputs(config):
    return fly_pilot(config, PilotParams())


class TestSessionCreation:
    def test_round_robin_over_conditions(self, store):
        conditions = [store.create_session().condition.value for _ in range(9)]
        assert conditions[:3] == ["Baseline", "Text", "Multimodal"]
        assert conditions.count("Baseline") == 3
        assert conditions.count("Text") == 3
        assert conditions.count("Multimodal") == 3

    def test_first_session_is_baseline(self, store):
        assert store.create_session().condition.value == "Baseline"

    def test_failed_storage_leaves_no_record(self, tmp_path):
        store = SessionStore(ServiceSettings(data_dir=tmp_path / "data"))
        store.sessions_dir.rmdir()  # break the storage directory
        with pytest.raises(OSError):
            store.create_session()
        assert store.sessions == {}
        store.sessions_dir.mkdir()
        assert store.create_session().id == "S0001"

    def test_seeded_random_assignment(self, tmp_path):
        settings = ServiceSettings(
            data_dir=tmp_path / "a", assignment="random", assignment_seed=42
        )
        first = [SessionStore(settings).create_session().condition for _ in range(1)]
        settings_b = ServiceSettings(
            data_dir=tmp_path / "b", assignment="random", assignment_seed=42
        )
        second = [SessionStore(settings_b).create_session().condition for _ in range(1)]
        assert first == second


class TestTrialLifecycle:
    def test_trial_limit_enforced(self, store, config):
        session = store.create_session()
        # two-frame crash episodes keep this fast: drop from the start height
        inputs = fly_pilot(config, fast_landing_params())
        for expected in range(1, 21):
            trial, result = drive_trial(store, session.id, inputs)
            assert trial == expected
            assert result["terminated"]
        with pytest.raises(ConflictError):
            store.start_trial(session.id)

    def test_no_concurrent_trials_per_session(self, store):
        session = store.create_session()
        store.start_trial(session.id)
        with pytest.raises(ConflictError):
            store.start_trial(session.id)

    def test_unknown_session_rejected(self, store):
        with pytest.raises(NotFoundError):
            store.start_trial("nope")

    def test_disconnect_with_frames_records_a_crash(self, store, config):
        session = store.create_session()
        trial = store.start_trial(session.id)
        for _ in range(5):
            store.step_trial(session.id, trial, 0.5, 0)
        store.close_input_stream(session.id, trial)
        record = store.wait_feedback(session.id, trial, timeout=10)
        assert record.report.outcome.value == "Crash"
        assert session.live is None

    def test_disconnect_without_frames_discards_the_trial(self, store):
        session = store.create_session()
        trial = store.start_trial(session.id)
        store.close_input_stream(session.id, trial)
        assert session.live is None
        assert session.records == []
        assert store.start_trial(session.id) == trial  # index reusable

    def test_server_simulation_matches_batch_replay(self, store, landing_inputs):
        session = store.create_session()
        trial, result = drive_trial(store, session.id, landing_inputs)
        assert result["outcome"] == "Safe"
        assert store.verify_replay(session.id, trial)

    def test_timeout_trial_records_a_crash(self, store, config):
        from quadland.sim.pilots import hover_script

        session = store.create_session()
        trial, result = drive_trial(store, session.id, hover_script(config, config.max_steps))
        assert result["terminated"] and result["outcome"] == "Crash"
        record = session.record_for(trial)
        assert record.trial_seconds == pytest.approx(config.trial_cap, abs=config.dt)


class TestFeedbackDelivery:
    def test_payload_shape_per_condition(self, store, config, landing_inputs):
        by_condition = {}
        for _ in range(3):
            session = store.create_session()
            drive_trial(store, session.id, landing_inputs)
            by_condition[session.condition.value] = store.feedback_payload(session.id, 1)

        baseline = by_condition["Baseline"]
        assert set(baseline) == {"session", "trial", "condition", "summary"}
        assert baseline["summary"]["outcome"] == "Safe"

        text = by_condition["Text"]
        assert set(text) == {"session", "trial", "condition", "text"}
        assert text["text"]

        multimodal = by_condition["Multimodal"]
        assert set(multimodal) == {"session", "trial", "condition", "text", "image_svg"}
        assert multimodal["image_svg"].startswith("<svg")

    def test_fetch_blocks_until_generation_completes(self, tmp_path, landing_inputs):
        class SlowProvider(TemplateProvider):
            def generate(self, prompt):
                time.sleep(0.4)
                return super().generate(prompt)

        store = SessionStore(ServiceSettings(data_dir=tmp_path / "slow"))
        store.provider = SlowProvider()
        session = store.create_session()
        started = time.monotonic()
        drive_trial(store, session.id, landing_inputs)
        payload = store.feedback_payload(session.id, 1)
        elapsed = time.monotonic() - started
        assert elapsed >= 0.4
        assert payload["summary"]["outcome"] == "Safe"

    def test_unknown_trial_rejected(self, store, landing_inputs):
        session = store.create_session()
        with pytest.raises(NotFoundError):
            store.feedback_payload(session.id, 3)


class TestSurveys:
    def _completed(self, store, landing_inputs):
        session = store.create_session()
        drive_trial(store, session.id, landing_inputs)
        return session

    def test_survey_requires_delivered_feedback(self, store, landing_inputs):
        session = self._completed(store, landing_inputs)
        with pytest.raises(ConflictError):
            store.submit_survey(session.id, 1, RATINGS)
        store.feedback_payload(session.id, 1)
        store.submit_survey(session.id, 1, RATINGS)
        record = session.record_for(1)
        assert record.survey is not None
        assert record.review_seconds is not None and record.review_seconds >= 0

    def test_duplicate_survey_rejected(self, store, landing_inputs):
        session = self._completed(store, landing_inputs)
        store.feedback_payload(session.id, 1)
        store.submit_survey(session.id, 1, RATINGS)
        with pytest.raises(ConflictError):
            store.submit_survey(session.id, 1, RATINGS)

    def test_out_of_range_rating_rejected(self, store, landing_inputs):
        session = self._completed(store, landing_inputs)
        store.feedback_payload(session.id, 1)
        with pytest.raises(ValueError):
            store.submit_survey(session.id, 1, {**RATINGS, "motivation": 6})

    def test_exit_survey_once(self, store):
        session = store.create_session()
        data = dict(
            gender_identity="woman",
            age=35,
            drone_experience="none",
            video_game_frequency="weekly",
            helpfulness=4,
            strategy="came in lower each time",
        )
        store.submit_exit_survey(session.id, data)
        with pytest.raises(ConflictError):
            store.submit_exit_survey(session.id, data)
        assert session.exit_survey == data


class TestExport:
    def test_rows_and_byte_stability(self, store, config, landing_inputs):
        fast = fly_pilot(config, fast_landing_params())
        for inputs in (landing_inputs, fast):
            session = store.create_session()
            for _ in range(2):
                trial, _ = drive_trial(store, session.id, inputs)
                store.feedback_payload(session.id, trial)
            store.submit_survey(session.id, 1, RATINGS)

        rows = export_rows(store)
        assert len(rows) == 4
        assert [r["trial"] for r in rows] == [1, 2, 1, 2]
        assert rows[0]["motivation"] == 4 and rows[1]["motivation"] is None
        assert export_jsonl(store) == export_jsonl(store)

    def test_rows_round_trip_into_analysis(self, store, landing_inputs):
        session = store.create_session()
        trial, _ = drive_trial(store, session.id, landing_inputs)
        store.feedback_payload(session.id, trial)
        store.submit_survey(session.id, trial, RATINGS)
        parsed = rows_from_lines(export_jsonl(store).splitlines())
        assert len(parsed) == 1
        assert parsed[0].outcome == "Safe"
        assert parsed[0].ratings == RATINGS

    def test_empty_store_exports_nothing(self, store):
        assert export_jsonl(store) == ""

    def test_dataset_directory(self, store, landing_inputs, tmp_path):
        session = store.create_session()
        drive_trial(store, session.id, landing_inputs)
        out = tmp_path / "exported"
        rows_path = export_dataset(store, out)
        assert rows_path.exists()
        trajectory_files = list((out / "trajectories").glob("*.jsonl"))
        assert len(trajectory_files) == 1
        assert trajectory_files[0].read_text().splitlines()


class TestPersistenceReload:
    def test_store_rebuilds_from_event_log(self, tmp_path, landing_inputs):
        data_dir = tmp_path / "data"
        store = SessionStore(ServiceSettings(data_dir=data_dir))
        session = store.create_session()
        trial, _ = drive_trial(store, session.id, landing_inputs)
        store.feedback_payload(session.id, trial)
        store.submit_survey(session.id, trial, RATINGS)
        store.submit_exit_survey(
            session.id,
            dict(
                gender_identity="man",
                age=28,
                drone_experience="a few times",
                video_game_frequency="daily",
                helpfulness=5,
                strategy="watched the circle",
            ),
        )
        before = export_jsonl(store)

        reloaded = SessionStore(ServiceSettings(data_dir=data_dir))
        assert list(reloaded.sessions) == [session.id]
        restored = reloaded.sessions[session.id]
        assert restored.condition == session.condition
        assert restored.exit_survey["helpfulness"] == 5
        assert export_jsonl(reloaded) == before
        # a reloaded store keeps counting conditions where it left off
        assert reloaded.create_session().condition.value == "Text"


class TestHttpSurface:
    def test_full_trial_over_websocket(self, client, landing_inputs):
        session = client.post("/sessions").json()
        started = client.post(f"/sessions/{session['id']}/trials")
        assert started.status_code == 201
        trial = started.json()["trial"]

        with client.websocket_connect(f"/sessions/{session['id']}/trials/{trial}/input") as ws:
            for i, control in enumerate(landing_inputs):
                ws.send_json({"t": i * 0.02, "throttle": control.throttle, "attitude": control.attitude})
                frame = ws.receive_json()
                if frame["terminated"]:
                    assert frame["outcome"] == "Safe"
                    break

        feedback = client.get(f"/sessions/{session['id']}/trials/{trial}/feedback")
        assert feedback.status_code == 200
        payload = feedback.json()
        assert payload["condition"] == "Baseline"
        assert "text" not in payload and "image_svg" not in payload

        survey = client.post(f"/sessions/{session['id']}/trials/{trial}/survey", json=RATINGS)
        assert survey.status_code == 200

        trajectory = client.get(f"/sessions/{session['id']}/trials/{trial}/trajectory")
        assert trajectory.status_code == 200
        first = json.loads(trajectory.text.splitlines()[0])
        assert set(first) >= {"t", "x", "y", "vx", "vy", "phi", "throttle", "attitude", "rob"}

        export = client.get("/export")
        assert export.status_code == 200
        assert len(export.text.splitlines()) == 1

    def test_http_error_codes(self, client):
        assert client.post("/sessions/missing/trials").status_code == 404
        session = client.post("/sessions").json()
        sid = session["id"]
        assert client.get(f"/sessions/{sid}/trials/1/feedback").status_code == 404
        client.post(f"/sessions/{sid}/trials")
        assert client.post(f"/sessions/{sid}/trials").status_code == 409
        bad = client.post(f"/sessions/{sid}/trials/1/survey", json={**RATINGS, "timely": 6})
        assert bad.status_code == 422
        bad_exit = client.post(f"/sessions/{sid}/exit-survey", json={"age": 30})
        assert bad_exit.status_code == 422

    def test_malformed_frame_rejects_and_discards_trial(self, client):
        session = client.post("/sessions").json()
        sid = session["id"]
        trial = client.post(f"/sessions/{sid}/trials").json()["trial"]
        with client.websocket_connect(f"/sessions/{sid}/trials/{trial}/input") as ws:
            ws.send_json({"t": 0.0, "throttle": 2.0, "attitude": 0})
            reply = ws.receive_json()
            assert "error" in reply
        # nothing was recorded; the index is available again
        assert client.post(f"/sessions/{sid}/trials").json()["trial"] == trial

    def test_websocket_unknown_session_closed(self, client):
        with client.websocket_connect("/sessions/nope/trials/1/input") as ws:
            with pytest.raises(Exception):
                ws.send_json({"t": 0.0, "throttle": 0.0, "attitude": 0})
                ws.receive_json()

    def test_healthz(self, client):
        assert client.get("/healthz").json()["status"] == "ok"

    def test_static_client_mount(self, tmp_path):
        static = tmp_path / "webroot"
        static.mkdir()
        (static / "index.html").write_text("<html><body>trainer</body></html>")
        settings = ServiceSettings(data_dir=tmp_path / "data", static_dir=static)
        mounted = TestClient(create_app(settings))
        assert mounted.get("/app/").status_code == 200
        assert "trainer" in mounted.get("/app/").text
