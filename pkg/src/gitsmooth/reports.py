"""Diagram rendering, the exhaustive survey, and oracle cross-checks."""

from __future__ import annotations

__all__ = [
    "DiagramRendering", "SurveyRow", "OracleMismatch", "render", "survey",
    "survey_csv", "check_singular", "check_semistable", "check_criteria",
]

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import (
    ColumnTuple, GrassmannianContext, PartitionShape, enumerate_interval,
    format_tuple, top_tuple,
)
from .semistability import (
    is_semistable_nonempty, is_valid_witness, minimal_semistable, semistable_witness,
)
from .singular import (
    singular_components, singular_components_oracle, singular_components_via_runs,
)
from .smoothness import analyze, criterion_components, criterion_runs


@dataclass(frozen=True)
class DiagramRendering:
    ascii: str
    latex: str
    # row i (bottom first) holds the reflection indices i, i+1, ...
    filled: tuple[tuple[int, ...], ...] | None = None

    def filled_ascii(self) -> str:
        if self.filled is None:
            return ""
        rows = [" ".join(f"s{j}" for j in row) for row in reversed(self.filled) if row]
        return "\n".join(rows)


@dataclass(frozen=True)
class SurveyRow:
    w: ColumnTuple
    verdict: str
    component_count: int
    components: tuple[ColumnTuple, ...]


@dataclass(frozen=True)
class OracleMismatch:
    check: str
    w: ColumnTuple
    detail: str


def render(shape: PartitionShape, *, filled: bool = False) -> DiagramRendering:
    """
    Young diagram with the top row (row r) printed first.

    >>> render((0, 0, 2, 3)).latex
    '\\\\yng(3,2)'
    """
    top_down = [p for p in reversed(shape) if p > 0]
    ascii_rows = ["[ ]" * p for p in top_down]
    latex = f"\\yng({','.join(map(str, top_down))})" if top_down else ""
    grid = None
    if filled:
        grid = tuple(tuple(range(i, i + p)) for i, p in enumerate(shape, start=1))
    return DiagramRendering("\n".join(ascii_rows), latex, grid)


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def survey(ctx: GrassmannianContext, jobs: int = 1) -> list[SurveyRow]:
    """One row per tuple above the minimal semistable tuple, lexicographic."""
    tuples = list(enumerate_interval(minimal_semistable(ctx), top_tuple(ctx)))

    def row(w: ColumnTuple) -> SurveyRow:
        report = analyze(w, ctx)
        return SurveyRow(w, report.verdict, len(report.components), report.components)

    return _pmap(row, tuples, jobs)


def survey_csv(rows: Iterable[SurveyRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["w", "verdict", "component_count", "components"])
    for row in rows:
        writer.writerow([
            format_tuple(row.w), row.verdict, row.component_count,
            ";".join(format_tuple(v) for v in row.components),
        ])
    return buf.getvalue()


def _single_singular(w: ColumnTuple, n: int) -> list[OracleMismatch]:
    hooks = singular_components(w).as_set()
    runs = singular_components_via_runs(w).as_set()
    orbit = singular_components_oracle(w, n)
    if hooks == runs == orbit:
        return []
    detail = f"hook={sorted(hooks)} runs={sorted(runs)} orbit={sorted(orbit)}"
    return [OracleMismatch("singular", w, detail)]


def _single_semistable(w: ColumnTuple, ctx: GrassmannianContext, degree: int) -> list[OracleMismatch]:
    expected = is_semistable_nonempty(w, ctx)
    witness = semistable_witness(w, ctx, degree)
    if witness is not None and not is_valid_witness(witness, w, ctx):
        return [OracleMismatch("semistable", w, "search returned an invalid chain")]
    if (witness is not None) != expected:
        return [OracleMismatch(
            "semistable", w,
            f"criterion says {expected}, degree-{degree} witness {'found' if witness else 'absent'}",
        )]
    return []


def _single_criteria(w: ColumnTuple, ctx: GrassmannianContext) -> list[OracleMismatch]:
    if not is_semistable_nonempty(w, ctx):
        return []
    ok_c, comps = criterion_components(w, ctx)
    ok_r, rows = criterion_runs(w, ctx)
    if ok_c == ok_r:
        return []
    return [OracleMismatch("criteria", w, f"components={ok_c} {comps} rows={ok_r} {rows}")]


def check_singular(tuples: Sequence[ColumnTuple], n: int, jobs: int = 1) -> list[OracleMismatch]:
    results = _pmap(lambda w: _single_singular(w, n), tuples, jobs)
    return [m for ms in results for m in ms]


def check_semistable(
    tuples: Sequence[ColumnTuple], ctx: GrassmannianContext, degree: int = 1, jobs: int = 1,
) -> list[OracleMismatch]:
    results = _pmap(lambda w: _single_semistable(w, ctx, degree), tuples, jobs)
    return [m for ms in results for m in ms]


def check_criteria(
    tuples: Sequence[ColumnTuple], ctx: GrassmannianContext, jobs: int = 1,
) -> list[OracleMismatch]:
    results = _pmap(lambda w: _single_criteria(w, ctx), tuples, jobs)
    return [m for ms in results for m in ms]
