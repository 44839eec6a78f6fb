"""Landing tables: per-condition landing counts across trial halves."""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

RATING_KEYS = ("motivation", "manageable", "actionable", "timely", "reflection")
OUTCOMES = ("Safe", "Unsafe", "Crash")


@dataclass(frozen=True)
class TrialRow:
    session_id: str
    condition: str
    trial_index: int
    outcome: str
    duration: float
    feedback_time: float | None
    ratings: dict[str, int] | None

    def __post_init__(self) -> None:
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if not 1 <= self.trial_index <= 20:
            raise ValueError(f"trial index out of range: {self.trial_index}")
        if self.ratings is not None:
            for key in RATING_KEYS:
                value = self.ratings.get(key)
                if value not in (1, 2, 3, 4, 5):
                    raise ValueError(f"rating {key}={value!r} outside 1..5")

    def to_json(self) -> dict:
        doc: dict = {
            "session": self.session_id,
            "condition": self.condition,
            "trial": self.trial_index,
            "outcome": self.outcome,
            "duration": self.duration,
            "feedback_time": self.feedback_time,
        }
        for key in RATING_KEYS:
            doc[key] = self.ratings.get(key) if self.ratings else None
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "TrialRow":
        ratings = None
        if any(doc.get(k) is not None for k in RATING_KEYS):
            ratings = {k: doc[k] for k in RATING_KEYS}
        return cls(
            session_id=doc["session"],
            condition=doc["condition"],
            trial_index=doc["trial"],
            outcome=doc["outcome"],
            duration=doc["duration"],
            feedback_time=doc.get("feedback_time"),
            ratings=ratings,
        )


def rows_from_lines(lines: Iterable[str]) -> list[TrialRow]:
    rows = []
    for line in lines:
        line = line.strip()
        if line:
            rows.append(TrialRow.from_json(json.loads(line)))
    return rows


def read_rows(path: str | Path) -> list[TrialRow]:
    with open(path, encoding="utf-8") as fh:
        return rows_from_lines(fh)


@dataclass(frozen=True)
class HalfStats:
    mean: float
    sd: float

    def format(self) -> str:
        return f"{self.mean:.2f} ({self.sd:.2f})"


@dataclass(frozen=True)
class ConditionSummary:
    condition: str
    participants: int
    safe_first: HalfStats
    safe_second: HalfStats
    safe_improvement: HalfStats
    safe_all: HalfStats
    landed_first: HalfStats
    landed_second: HalfStats
    landed_improvement: HalfStats
    landed_all: HalfStats


def _stats(values: Sequence[float]) -> HalfStats:
    n = len(values)
    mean = sum(values) / n
    if n < 2:
        return HalfStats(mean=mean, sd=0.0)
    variance = sum((v - mean) ** 2 for v in values) / (n - 1)
    return HalfStats(mean=mean, sd=math.sqrt(variance))


def landing_table(rows: Sequence[TrialRow], trials_per_session: int = 20) -> list[ConditionSummary]:
    """Per-condition landing-count summaries over complete sessions.

    Counts per participant: safe landings (and safe+unsafe attempts that
    reached the pad) in the first half, the second half, their difference,
    and the whole session; means and sample SDs aggregate per condition.
    """
    half = trials_per_session // 2
    by_session: dict[str, list[TrialRow]] = {}
    for row in rows:
        by_session.setdefault(row.session_id, []).append(row)

    per_condition: dict[str, list[tuple[int, int, int, int]]] = {}
    for session_id in sorted(by_session):
        session_rows = sorted(by_session[session_id], key=lambda r: r.trial_index)
        if len(session_rows) != trials_per_session or [r.trial_index for r in session_rows] != list(
            range(1, trials_per_session + 1)
        ):
            warnings.warn(f"excluding incomplete session {session_id!r}", stacklevel=2)
            continue
        condition = session_rows[0].condition

        def count(outcomes: tuple[str, ...], lo: int, hi: int) -> int:
            return sum(1 for r in session_rows if lo <= r.trial_index <= hi and r.outcome in outcomes)

        safe_1 = count(("Safe",), 1, half)
        safe_2 = count(("Safe",), half + 1, trials_per_session)
        landed_1 = count(("Safe", "Unsafe"), 1, half)
        landed_2 = count(("Safe", "Unsafe"), half + 1, trials_per_session)
        per_condition.setdefault(condition, []).append((safe_1, safe_2, landed_1, landed_2))

    summaries = []
    for condition in sorted(per_condition):
        counts = per_condition[condition]
        safe_first = [c[0] for c in counts]
        safe_second = [c[1] for c in counts]
        landed_first = [c[2] for c in counts]
        landed_second = [c[3] for c in counts]
        summaries.append(
            ConditionSummary(
                condition=condition,
                participants=len(counts),
                safe_first=_stats(safe_first),
                safe_second=_stats(safe_second),
                safe_improvement=_stats([s - f for f, s in zip(safe_first, safe_second)]),
                safe_all=_stats([f + s for f, s in zip(safe_first, safe_second)]),
                landed_first=_stats(landed_first),
                landed_second=_stats(landed_second),
                landed_improvement=_stats([s - f for f, s in zip(landed_first, landed_second)]),
                landed_all=_stats([f + s for f, s in zip(landed_first, landed_second)]),
            )
        )
    return summaries


_COLUMNS = (
    ("safe_first", "Safe 1-10"),
    ("safe_second", "Safe 11-20"),
    ("safe_improvement", "Safe improv."),
    ("safe_all", "Safe all"),
    ("landed_first", "Landed 1-10"),
    ("landed_second", "Landed 11-20"),
    ("landed_improvement", "Landed improv."),
    ("landed_all", "Landed all"),
)


def summary_table(summaries: Sequence[ConditionSummary]) -> str:
    """Human-readable landing table, mean (SD) per cell."""
    header = ["Condition", "n"] + [label for _, label in _COLUMNS]
    rows = [header]
    for s in summaries:
        rows.append(
            [s.condition, str(s.participants)] + [getattr(s, attr).format() for attr, _ in _COLUMNS]
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)


def summary_csv(summaries: Sequence[ConditionSummary]) -> str:
    """CSV with separate mean/sd columns, stable column order."""
    header = ["condition", "participants"]
    for attr, _ in _COLUMNS:
        header += [f"{attr}_mean", f"{attr}_sd"]
    lines = [",".join(header)]
    for s in summaries:
        cells = [s.condition, str(s.participants)]
        for attr, _ in _COLUMNS:
            stat: HalfStats = getattr(s, attr)
            cells += [f"{stat.mean:.6g}", f"{stat.sd:.6g}"]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
