"""Synthetic cohorts for exercising the analysis pipeline without live data."""

from __future__ import annotations

import random
from typing import Sequence

from quadland.analysis.landing import TrialRow

CONDITIONS = ("Baseline", "Text", "Multimodal")


def synthesize_cohort(
    seed: int,
    participants_per_condition: int = 8,
    trials_per_session: int = 20,
) -> list[TrialRow]:
    """Random but reproducible cohort: participants improve over the session."""
    rng = random.Random(seed)
    rows: list[TrialRow] = []
    for c_index, condition in enumerate(CONDITIONS):
        for p in range(participants_per_condition):
            session_id = f"{condition.lower()}-{p:03d}"
            skill = rng.uniform(0.1, 0.6)
            growth = rng.uniform(0.0, 0.4)
            for trial in range(1, trials_per_session + 1):
                p_safe = min(0.95, skill + growth * (trial - 1) / (trials_per_session - 1))
                draw = rng.random()
                if draw < p_safe:
                    outcome = "Safe"
                elif draw < p_safe + 0.2:
                    outcome = "Unsafe"
                else:
                    outcome = "Crash"
                rows.append(
                    TrialRow(
                        session_id=session_id,
                        condition=condition,
                        trial_index=trial,
                        outcome=outcome,
                        duration=round(rng.uniform(8.0, 90.0), 2),
                        feedback_time=round(rng.uniform(5.0, 60.0), 2),
                        ratings={
                            "motivation": rng.randint(1, 5),
                            "manageable": rng.randint(1, 5),
                            "actionable": rng.randint(1, 5),
                            "timely": rng.randint(1, 5),
                            "reflection": rng.randint(1, 5),
                        },
                    )
                )
    return rows


def counts_matching_sums(total: int, participants: int, cap: int) -> list[int]:
    """Deterministic integer counts in [0, cap] with the given sum."""
    if not 0 <= total <= participants * cap:
        raise ValueError("target sum unattainable")
    base, extra = divmod(total, participants)
    counts = [base + 1 if i < extra else base for i in range(participants)]
    if any(c > cap for c in counts):
        raise ValueError("target sum unattainable without exceeding the cap")
    return counts


def cohort_from_counts(
    condition: str,
    first_half_safe: Sequence[int],
    second_half_safe: Sequence[int],
    trials_per_session: int = 20,
) -> list[TrialRow]:
    """Rows realizing exact per-participant safe-landing counts per half."""
    half = trials_per_session // 2
    rows = []
    for p, (first, second) in enumerate(zip(first_half_safe, second_half_safe)):
        session_id = f"{condition.lower()}-{p:03d}"
        for trial in range(1, trials_per_session + 1):
            if trial <= half:
                outcome = "Safe" if trial <= first else "Crash"
            else:
                outcome = "Safe" if trial - half <= second else "Crash"
            rows.append(
                TrialRow(
                    session_id=session_id,
                    condition=condition,
                    trial_index=trial,
                    outcome=outcome,
                    duration=30.0,
                    feedback_time=None,
                    ratings=None,
                )
            )
    return rows
