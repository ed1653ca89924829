"""
Smoothness of the torus quotient of X(w) for coprime (r, n).

The quotient is smooth exactly when the semistable locus avoids Sing X(w),
i.e. when no singular component dominates the minimal semistable tuple.
That is checked twice: once over the components, once by the row test
``b_j >= b_{j-1} + 2  =>  a_j >= b_{j-1} + 1``. The two must agree.
"""

from __future__ import annotations

__all__ = [
    "SMOOTH", "NOT_SMOOTH", "NO_SEMISTABLE_POINTS", "IntegrityError",
    "SmoothnessReport", "criterion_components", "criterion_runs", "analyze",
]

from dataclasses import dataclass
from typing import Any

from .core import ColumnTuple, GrassmannianContext, bruhat_leq
from .semistability import is_semistable_nonempty, minimal_semistable, require_coprime
from .singular import singular_components

SMOOTH = "smooth"
NOT_SMOOTH = "not_smooth"
NO_SEMISTABLE_POINTS = "no_semistable_points"


class IntegrityError(RuntimeError):
    """The two smoothness criteria disagreed; this is always a bug."""


@dataclass(frozen=True)
class SmoothnessReport:
    r: int
    n: int
    w: ColumnTuple
    minimal: ColumnTuple
    semistable_nonempty: bool
    verdict: str
    components: tuple[ColumnTuple, ...]
    criterion_components: bool
    dominating_components: tuple[ColumnTuple, ...]
    criterion_runs: bool
    violating_rows: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "n": self.n,
            "w": list(self.w),
            "verdict": self.verdict,
            "minimal": list(self.minimal),
            "semistable_nonempty": self.semistable_nonempty,
            "components": [list(v) for v in self.components],
            "criterion_components": self.criterion_components,
            "criterion_runs": self.criterion_runs,
            "witnesses": {
                "components": [list(v) for v in self.dominating_components],
                "rows": list(self.violating_rows),
            },
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SmoothnessReport":
        return cls(
            r=data["r"],
            n=data["n"],
            w=tuple(data["w"]),
            minimal=tuple(data["minimal"]),
            semistable_nonempty=data["semistable_nonempty"],
            verdict=data["verdict"],
            components=tuple(tuple(v) for v in data["components"]),
            criterion_components=data["criterion_components"],
            dominating_components=tuple(tuple(v) for v in data["witnesses"]["components"]),
            criterion_runs=data["criterion_runs"],
            violating_rows=tuple(data["witnesses"]["rows"]),
        )


def criterion_components(
    w: ColumnTuple, ctx: GrassmannianContext,
) -> tuple[bool, list[ColumnTuple]]:
    """True iff no singular component of X(w) lies above the minimal tuple."""
    minimal = minimal_semistable(ctx)
    bad = [v for v in singular_components(w).components if bruhat_leq(minimal, v)]
    return not bad, bad


def criterion_runs(
    w: ColumnTuple, ctx: GrassmannianContext, *, skip_vacuous: bool = False,
) -> tuple[bool, list[int]]:
    """
    Rows ``j`` (1-indexed, ``b_0 = 0``) with ``b_j >= b_{j-1} + 2`` and
    ``a_j <= b_{j-1}``. Rows ``j = 1`` and rows over an empty row can never
    fail; ``skip_vacuous`` leaves them out of the scan.
    """
    a = minimal_semistable(ctx)
    b = (0,) + tuple(w)
    bad = []
    for j in range(1, ctx.r + 1):
        if skip_vacuous and b[j - 1] == j - 1:
            continue
        if b[j] >= b[j - 1] + 2 and a[j - 1] < b[j - 1] + 1:
            bad.append(j)
    return not bad, bad


def analyze(w: ColumnTuple, ctx: GrassmannianContext) -> SmoothnessReport:
    require_coprime(ctx)
    minimal = minimal_semistable(ctx)
    nonempty = is_semistable_nonempty(w, ctx)
    comps = singular_components(w).components
    ok_components, dominating = criterion_components(w, ctx)
    ok_runs, rows = criterion_runs(w, ctx)
    if nonempty and ok_components != ok_runs:
        raise IntegrityError(
            f"criteria disagree for w={w} in G({ctx.r},{ctx.n}): "
            f"components={ok_components} {dominating}, runs={ok_runs} {rows}"
        )
    if not nonempty:
        verdict = NO_SEMISTABLE_POINTS
    elif ok_components:
        verdict = SMOOTH
    else:
        verdict = NOT_SMOOTH
    return SmoothnessReport(
        r=ctx.r,
        n=ctx.n,
        w=tuple(w),
        minimal=minimal,
        semistable_nonempty=nonempty,
        verdict=verdict,
        components=comps,
        criterion_components=ok_components,
        dominating_components=tuple(dominating),
        criterion_runs=ok_runs,
        violating_rows=tuple(rows),
    )
