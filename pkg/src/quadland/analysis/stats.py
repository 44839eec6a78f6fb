"""Hypothesis tests and Likert utilities.

Fisher's exact test is computed with exact rational arithmetic; the t and
Kruskal-Wallis statistics use their textbook formulas with p-values from
scipy's t and chi-square distributions.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Sequence

from scipy.stats import chi2 as _chi2
from scipy.stats import t as _student_t


@dataclass(frozen=True)
class TestResult:
    test: str
    statistic: float
    df: float | None
    p_value: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError(f"p-value outside [0, 1]: {self.p_value}")


def fisher_exact(a: int, b: int, c: int, d: int) -> TestResult:
    """Two-sided Fisher's exact test on the 2x2 table [[a, b], [c, d]].

    Sums hypergeometric probabilities of every table (with the observed
    margins) whose probability does not exceed the observed table's.
    """
    if min(a, b, c, d) < 0:
        raise ValueError("cell counts must be nonnegative")
    r1, r2 = a + b, c + d
    c1 = a + c
    n = r1 + r2
    if n == 0:
        raise ValueError("table has all-zero margins")

    denominator = comb(n, c1)
    k_min = max(0, c1 - r2)
    k_max = min(r1, c1)

    def pmf(k: int) -> Fraction:
        return Fraction(comb(r1, k) * comb(r2, c1 - k), denominator)

    p_observed = pmf(a)
    total = sum((p for k in range(k_min, k_max + 1) if (p := pmf(k)) <= p_observed), Fraction(0))

    odds_ratio = math.inf if b * c == 0 else (a * d) / (b * c)
    return TestResult(test="fisher_exact", statistic=odds_ratio, df=None, p_value=float(min(total, Fraction(1))))


def _mean(xs: Sequence[float]) -> float:
    return sum(xs) / len(xs)


def _sample_var(xs: Sequence[float]) -> float:
    m = _mean(xs)
    return sum((x - m) ** 2 for x in xs) / (len(xs) - 1)


def t_test(group_a: Sequence[float], group_b: Sequence[float]) -> TestResult:
    """Independent-samples pooled-variance t-test, two-sided."""
    na, nb = len(group_a), len(group_b)
    if na < 2 or nb < 2:
        raise ValueError("each group needs at least two samples")
    df = na + nb - 2
    mean_diff = _mean(group_a) - _mean(group_b)
    pooled_var = ((na - 1) * _sample_var(group_a) + (nb - 1) * _sample_var(group_b)) / df
    if pooled_var == 0.0:
        if mean_diff == 0.0:
            return TestResult(test="t_test", statistic=0.0, df=df, p_value=1.0)
        statistic = math.copysign(math.inf, mean_diff)
        return TestResult(test="t_test", statistic=statistic, df=df, p_value=0.0)
    statistic = mean_diff / math.sqrt(pooled_var * (1.0 / na + 1.0 / nb))
    p_value = 2.0 * float(_student_t.sf(abs(statistic), df))
    return TestResult(test="t_test", statistic=statistic, df=df, p_value=min(p_value, 1.0))


def _average_ranks(values: Sequence[float]) -> list[float]:
    n = len(values)
    order = sorted(range(n), key=lambda i: values[i])
    ranks = [0.0] * n
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[order[j + 1]] == values[order[i]]:
            j += 1
        average = (i + j) / 2.0 + 1.0
        for idx in order[i : j + 1]:
            ranks[idx] = average
        i = j + 1
    return ranks


def kruskal_wallis(groups: Sequence[Sequence[float]]) -> TestResult:
    """Kruskal-Wallis H with tie correction; chi-square p approximation."""
    if len(groups) < 2:
        raise ValueError("need at least two groups")
    sizes = [len(g) for g in groups]
    if any(s == 0 for s in sizes):
        raise ValueError("groups must be non-empty")
    n = sum(sizes)
    if n < 3:
        raise ValueError("need at least three observations in total")

    pooled = [x for g in groups for x in g]
    ranks = _average_ranks(pooled)
    df = len(groups) - 1

    h = 0.0
    offset = 0
    for size in sizes:
        rank_sum = sum(ranks[offset : offset + size])
        h += rank_sum * rank_sum / size
        offset += size
    h = 12.0 / (n * (n + 1)) * h - 3.0 * (n + 1)

    tie_counts = Counter(pooled).values()
    correction = 1.0 - sum(t**3 - t for t in tie_counts) / (n**3 - n)
    if correction == 0.0:
        # every observation identical
        return TestResult(test="kruskal_wallis", statistic=0.0, df=df, p_value=1.0)
    h /= correction
    p_value = float(_chi2.sf(h, df))
    return TestResult(test="kruskal_wallis", statistic=h, df=df, p_value=p_value)


class LikertBin(Enum):
    DISAGREE = "Disagree"
    NEUTRAL = "Neutral"
    AGREE = "Agree"


def collapse_likert(rating: int) -> LikertBin:
    """Collapse a 1-5 rating to the three-point scale used for analysis."""
    if rating in (1, 2):
        return LikertBin.DISAGREE
    if rating == 3:
        return LikertBin.NEUTRAL
    if rating in (4, 5):
        return LikertBin.AGREE
    raise ValueError(f"rating must be an integer in 1..5, got {rating!r}")


def per_participant_mode(ratings: Sequence[int]) -> int:
    """Most common rating across a participant's trials; ties break toward
    the smaller rating."""
    if not ratings:
        raise ValueError("need at least one rating")
    counts = Counter(ratings)
    return min(counts, key=lambda r: (-counts[r], r))
