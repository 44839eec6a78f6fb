"""Command-line interface for the dataset analyses."""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path

import click

from quadland.analysis.landing import landing_table, read_rows, summary_csv, summary_table
from quadland.analysis.stats import (
    TestResult,
    collapse_likert,
    fisher_exact,
    kruskal_wallis,
    t_test,
)
from quadland.analysis.synth import synthesize_cohort


def _echo_result(result: TestResult) -> None:
    df = "-" if result.df is None else f"{result.df:g}"
    click.echo(f"{result.test}: statistic={result.statistic:.6g} df={df} p={result.p_value:.6g}")


def _read_numbers(path: str) -> list[float]:
    values = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            values.append(float(line))
    return values


@click.group()
def main() -> None:
    """Analyze exported trial datasets."""


@main.command("landing-table")
@click.argument("rows_file", type=click.Path(exists=True))
@click.option("--csv", "csv_out", type=click.Path(), default=None, help="Also write a CSV file.")
def landing_table_cmd(rows_file: str, csv_out: str | None) -> None:
    """Per-condition landing counts from a JSON-lines rows file."""
    summaries = landing_table(read_rows(rows_file))
    click.echo(summary_table(summaries))
    if csv_out:
        Path(csv_out).write_text(summary_csv(summaries), encoding="utf-8")
        click.echo(f"wrote {csv_out}")


@main.command("fisher")
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.argument("c", type=int)
@click.argument("d", type=int)
def fisher_cmd(a: int, b: int, c: int, d: int) -> None:
    """Two-sided Fisher's exact test on the 2x2 table [[A, B], [C, D]]."""
    _echo_result(fisher_exact(a, b, c, d))


@main.command("ttest")
@click.argument("file_a", type=click.Path(exists=True))
@click.argument("file_b", type=click.Path(exists=True))
def ttest_cmd(file_a: str, file_b: str) -> None:
    """Pooled two-sample t-test; one number per line per file."""
    _echo_result(t_test(_read_numbers(file_a), _read_numbers(file_b)))


@main.command("kw")
@click.argument("files", type=click.Path(exists=True), nargs=-1, required=True)
def kw_cmd(files: tuple[str, ...]) -> None:
    """Kruskal-Wallis H test; one group per file, one number per line."""
    if len(files) < 2:
        raise click.UsageError("need at least two group files")
    _echo_result(kruskal_wallis([_read_numbers(f) for f in files]))


@main.command("collapse")
@click.argument("ratings_file", type=click.Path(exists=True))
def collapse_cmd(ratings_file: str) -> None:
    """Collapse 1-5 ratings (one per line) to the three-point scale."""
    bins = [collapse_likert(int(v)) for v in _read_numbers(ratings_file)]
    for b in bins:
        click.echo(b.value)
    counts = Counter(b.value for b in bins)
    click.echo(
        "counts: "
        + " ".join(f"{label}={counts.get(label, 0)}" for label in ("Disagree", "Neutral", "Agree"))
    )


@main.command("synth-cohort")
@click.option("--seed", type=int, required=True)
@click.option("--participants", type=int, default=8, show_default=True, help="Per condition.")
@click.option("--out", type=click.Path(), required=True)
def synth_cmd(seed: int, participants: int, out: str) -> None:
    """Write a reproducible synthetic rows file for pipeline testing."""
    rows = synthesize_cohort(seed, participants_per_condition=participants)
    with open(out, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row.to_json()) + "\n")
    click.echo(f"wrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
