"""Statistical analyses over exported trial datasets."""

from quadland.analysis.landing import (
    ConditionSummary,
    HalfStats,
    TrialRow,
    landing_table,
    read_rows,
    rows_from_lines,
    summary_csv,
    summary_table,
)
from quadland.analysis.stats import (
    LikertBin,
    TestResult,
    collapse_likert,
    fisher_exact,
    kruskal_wallis,
    per_participant_mode,
    t_test,
)

__all__ = [
    "ConditionSummary",
    "HalfStats",
    "TrialRow",
    "landing_table",
    "read_rows",
    "rows_from_lines",
    "summary_csv",
    "summary_table",
    "LikertBin",
    "TestResult",
    "collapse_likert",
    "fisher_exact",
    "kruskal_wallis",
    "per_participant_mode",
    "t_test",
]
