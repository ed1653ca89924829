import json
from math import gcd

import pytest

from gitsmooth.core import enumerate_interval, make_context, top_tuple
from gitsmooth.semistability import NonCoprimeError, minimal_semistable
from gitsmooth.smoothness import (
    NO_SEMISTABLE_POINTS, NOT_SMOOTH, SMOOTH, IntegrityError, SmoothnessReport,
    analyze, criterion_components, criterion_runs,
)

COPRIME = [(r, n) for n in range(2, 13) for r in range(1, n) if gcd(r, n) == 1]
G49 = make_context(4, 9)


def test_criterion_components_examples():
    assert criterion_components((3, 5, 8, 9), G49) == (True, [])
    assert criterion_components((5, 7, 8, 9), G49) == (False, [(4, 5, 8, 9)])
    assert criterion_components((6, 7, 8, 9), G49) == (True, [])


def test_criterion_runs_examples():
    assert criterion_runs((5, 7, 8, 9), G49) == (False, [2])
    assert criterion_runs((3, 5, 8, 9), G49) == (True, [])
    for r, n in COPRIME:
        ctx = make_context(r, n)
        assert criterion_runs(minimal_semistable(ctx), ctx)[0]


@pytest.mark.parametrize("w, verdict", [
    ((3, 5, 8, 9), SMOOTH),
    ((5, 7, 8, 9), NOT_SMOOTH),
    ((2, 3, 8, 9), NO_SEMISTABLE_POINTS),
    ((3, 5, 7, 9), SMOOTH),
])
def test_analyze_examples(w, verdict):
    assert analyze(w, G49).verdict == verdict


def test_analyze_rejects_non_coprime():
    with pytest.raises(NonCoprimeError):
        analyze((3, 4), make_context(2, 4))


@pytest.mark.parametrize("r, n", COPRIME)
def test_equivalence_and_vacuous_rows(r, n):
    ctx = make_context(r, n)
    for w in enumerate_interval(minimal_semistable(ctx), top_tuple(ctx)):
        ok_c, _ = criterion_components(w, ctx)
        ok_r, rows = criterion_runs(w, ctx)
        assert ok_c == ok_r
        assert criterion_runs(w, ctx, skip_vacuous=True) == (ok_r, rows)
        assert 1 not in rows


@pytest.mark.parametrize("r, n", COPRIME)
def test_known_smooth(r, n):
    ctx = make_context(r, n)
    assert analyze(minimal_semistable(ctx), ctx).verdict == SMOOTH
    assert analyze(top_tuple(ctx), ctx).verdict == SMOOTH


def test_report_json_round_trip():
    for w in [(3, 5, 8, 9), (5, 7, 8, 9), (2, 3, 8, 9)]:
        report = analyze(w, G49)
        again = SmoothnessReport.from_dict(json.loads(json.dumps(report.to_dict())))
        assert again == report


def test_disagreement_raises(monkeypatch):
    import gitsmooth.smoothness as sm
    monkeypatch.setattr(sm, "criterion_runs", lambda w, ctx: (True, []))
    with pytest.raises(IntegrityError):
        sm.analyze((5, 7, 8, 9), G49)
