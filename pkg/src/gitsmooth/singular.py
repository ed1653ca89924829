"""
Singular loci of Grassmannian Schubert varieties.

Three independent routes to the irreducible components of Sing X(w):

* :func:`singular_components` removes the hook between consecutive runs of
  equal nonzero parts of the Young diagram;
* :func:`singular_components_via_runs` applies the same removal directly on
  the tuple, row by row;
* :func:`singular_components_oracle` takes the torus-fixed points of X(w)
  outside the smooth locus ``P_w wP/P`` and keeps the maximal ones.
"""

from __future__ import annotations

__all__ = [
    "StabilizerSet", "SingularLocusReport", "stabilizer_descents",
    "singular_components", "singular_components_via_runs",
    "smooth_fixed_points_oracle", "singular_components_oracle", "hook_rows",
]

from dataclasses import dataclass

from .core import (
    ColumnTuple, bruhat_leq, enumerate_interval, from_partition, run_length,
    to_partition,
)
from .words import parabolic_orbit


@dataclass(frozen=True)
class StabilizerSet:
    j_prime: frozenset[int]
    j: frozenset[int]


@dataclass(frozen=True)
class SingularLocusReport:
    components: tuple[ColumnTuple, ...]
    hook_rows: tuple[int, ...]

    def as_set(self) -> set[ColumnTuple]:
        return set(self.components)


def stabilizer_descents(w: ColumnTuple, n: int) -> StabilizerSet:
    """
    ``J'(w)`` holds the ``j <= n - 1`` with ``j = b_m`` and ``b_{m+1} != j + 1``,
    where ``b_{r+1} = n + 1``. The stabilizer of X(w) is the parabolic
    generated by the complement ``J(w)``.
    """
    padded = tuple(w) + (n + 1,)
    j_prime = frozenset(
        b for b, nxt in zip(padded, padded[1:]) if b <= n - 1 and nxt != b + 1
    )
    return StabilizerSet(j_prime, frozenset(range(1, n)) - j_prime)


def singular_components(w: ColumnTuple) -> SingularLocusReport:
    """
    For the runs ``p_1^{q_1} ... p_k^{q_k}`` of nonzero parts, the i-th
    component replaces ``p_i^{q_i}, p_{i+1}^{q_{i+1}}`` by
    ``(p_i - 1)^{q_i + 1}, p_{i+1}^{q_{i+1} - 1}``.

    ``hook_rows`` records the row that drops from ``p_{i+1}`` to ``p_i - 1``.
    """
    shape = to_partition(w)
    r = len(shape)
    runs = run_length(shape)
    zeros = r - sum(q for _, q in runs)
    components, rows = [], []
    for i in range(len(runs) - 1):
        (p, q), (p_next, q_next) = runs[i], runs[i + 1]
        new_runs = runs[:i] + [(p - 1, q + 1), (p_next, q_next - 1)] + runs[i + 2:]
        new_shape = [0] * zeros
        for part, mult in new_runs:
            new_shape.extend([part] * mult)
        components.append(from_partition(tuple(new_shape)))
        rows.append(zeros + sum(m for _, m in runs[: i + 1]) + 1)
    return SingularLocusReport(tuple(components), tuple(rows))


def hook_rows(w: ColumnTuple) -> list[int]:
    """Rows ``j >= 2`` with ``b_j >= b_{j-1} + 2`` sitting on a nonempty row."""
    return [
        j for j in range(2, len(w) + 1)
        if w[j - 1] >= w[j - 2] + 2 and w[j - 2] > j - 1
    ]


def singular_components_via_runs(w: ColumnTuple) -> SingularLocusReport:
    """
    For each hook row ``j``, let ``t`` start the maximal run of consecutive
    entries ending at ``b_{j-1}``. The component lowers ``b_t, ..., b_{j-1}``
    by one and sets the j-th entry to ``b_{j-1}``.
    """
    components, rows = [], []
    for j in hook_rows(w):
        t = j - 1
        while t > 1 and w[t - 1] == w[t - 2] + 1:
            t -= 1
        # 1-indexed rows; p < t unchanged, t <= p <= j-1 lowered, p = j set, p > j unchanged
        v = list(w)
        for p in range(t, j):
            v[p - 1] = w[p - 1] - 1
        v[j - 1] = w[j - 2]
        components.append(tuple(v))
        rows.append(j)
    return SingularLocusReport(tuple(components), tuple(rows))


def smooth_fixed_points_oracle(w: ColumnTuple, n: int) -> set[ColumnTuple]:
    """Torus-fixed points of ``P_w wP/P``: the ``W_{J(w)}``-orbit of ``w``."""
    return parabolic_orbit(stabilizer_descents(w, n).j, w, n)


def singular_components_oracle(w: ColumnTuple, n: int) -> set[ColumnTuple]:
    smooth = smooth_fixed_points_oracle(w, n)
    bottom = tuple(range(1, len(w) + 1))
    singular = [v for v in enumerate_interval(bottom, w) if v not in smooth]
    return {
        v for v in singular
        if not any(u != v and bruhat_leq(v, u) for u in singular)
    }
