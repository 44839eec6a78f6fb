"""Dataset export: trial-level rows plus trajectory files."""

from __future__ import annotations

import json
import shutil
from pathlib import Path

from quadland.service.store import RATING_KEYS, SessionStore

ROW_KEYS = ("session", "condition", "trial", "outcome", "duration", "feedback_time") + RATING_KEYS


def export_rows(store: SessionStore) -> list[dict]:
    """Trial-level rows in creation order with a stable key order.

    Verifies the all-artifacts invariant for every completed trial before
    anything is emitted.
    """
    store.wait_all_feedback()
    rows: list[dict] = []
    for session in store.ordered_sessions():
        for record in session.records:
            if record.text is None or not record.text.body or not record.image_svg:
                raise RuntimeError(
                    f"trial {record.index} of session {session.id} is missing feedback artifacts"
                )
            row = {
                "session": session.id,
                "condition": session.condition.value,
                "trial": record.index,
                "outcome": record.report.outcome.value,
                "duration": record.trial_seconds,
                "feedback_time": record.review_seconds,
            }
            for key in RATING_KEYS:
                row[key] = getattr(record.survey, key) if record.survey else None
            rows.append(row)
    return rows


def export_jsonl(store: SessionStore) -> str:
    return "".join(json.dumps(row, separators=(",", ":")) + "\n" for row in export_rows(store))


def export_dataset(store: SessionStore, out_dir: str | Path) -> Path:
    """Write rows.jsonl plus a copy of every trajectory log; returns the
    rows file path."""
    out_dir = Path(out_dir)
    trajectories = out_dir / "trajectories"
    trajectories.mkdir(parents=True, exist_ok=True)
    rows_path = out_dir / "rows.jsonl"
    rows_path.write_text(export_jsonl(store), encoding="utf-8")
    for session in store.ordered_sessions():
        for record in session.records:
            src = store.data_dir / record.trajectory_file
            shutil.copyfile(src, trajectories / Path(record.trajectory_file).name)
    return rows_path
