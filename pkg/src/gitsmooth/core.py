"""
Combinatorics of the Grassmannian index set I(r, n).

A Schubert variety in G(r, n) is indexed by a strictly increasing tuple
``(b_1, ..., b_r)`` with entries in ``[1, n]`` (1-indexed, as written by hand).
Its Young diagram has ``b_i - i`` boxes in row ``i``, rows counted from the
bottom, so shapes are stored as non-decreasing tuples.

>>> to_partition((3, 5, 7, 9))
(2, 3, 4, 5)
>>> from_partition((3, 3, 5, 5))
(4, 5, 8, 9)
>>> run_length((4, 5, 5, 5))
[(4, 1), (5, 3)]
"""

from __future__ import annotations

__all__ = [
    "ColumnTuple", "PartitionShape", "RunEncoding", "GrassmannianContext",
    "InvalidTupleError", "make_context", "validate_tuple", "validate_shape",
    "parse_tuple", "format_tuple", "to_partition", "from_partition",
    "bruhat_leq", "run_length", "enumerate_interval", "all_tuples",
    "bottom_tuple", "top_tuple",
]

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

# strictly increasing entries in [1, n]
ColumnTuple = tuple[int, ...]

# non-decreasing box counts in [0, n - r], row 1 first
PartitionShape = tuple[int, ...]

# (part, multiplicity) pairs over the nonzero parts
RunEncoding = list[tuple[int, int]]


class InvalidTupleError(ValueError):
    """Raised for malformed (r, n) pairs, tuples or shapes."""


@dataclass(frozen=True)
class GrassmannianContext:
    r: int
    n: int
    coprime: bool = field(init=False)

    def __post_init__(self) -> None:
        if not (isinstance(self.r, int) and isinstance(self.n, int)):
            raise InvalidTupleError(f"r and n must be integers, got {self.r!r}, {self.n!r}")
        if self.r < 1:
            raise InvalidTupleError(f"r must be positive, got r={self.r}")
        if self.n <= self.r:
            raise InvalidTupleError(f"need r < n, got r={self.r}, n={self.n}")
        object.__setattr__(self, "coprime", gcd(self.r, self.n) == 1)


def make_context(r: int, n: int) -> GrassmannianContext:
    return GrassmannianContext(r, n)


def validate_tuple(w, ctx: GrassmannianContext) -> ColumnTuple:
    """Return ``w`` as a tuple of ints, or raise if it is not in I(r, n)."""
    w = tuple(int(b) for b in w)
    if len(w) != ctx.r:
        raise InvalidTupleError(f"expected {ctx.r} entries, got {len(w)}: {format_tuple(w)}")
    if any(b < 1 or b > ctx.n for b in w):
        raise InvalidTupleError(f"entries must lie in [1, {ctx.n}]: {format_tuple(w)}")
    if any(x >= y for x, y in zip(w, w[1:])):
        raise InvalidTupleError(f"entries must be strictly increasing: {format_tuple(w)}")
    return w


def validate_shape(shape, ctx: GrassmannianContext) -> PartitionShape:
    shape = tuple(int(p) for p in shape)
    if len(shape) != ctx.r:
        raise InvalidTupleError(f"expected {ctx.r} parts, got {len(shape)}")
    if any(p < 0 or p > ctx.n - ctx.r for p in shape):
        raise InvalidTupleError(f"parts must lie in [0, {ctx.n - ctx.r}]: {shape}")
    if any(x > y for x, y in zip(shape, shape[1:])):
        raise InvalidTupleError(f"parts must be non-decreasing: {shape}")
    return shape


def parse_tuple(text: str, ctx: GrassmannianContext) -> ColumnTuple:
    """Parse ``"3,5,8,9"`` (parentheses and spaces tolerated)."""
    stripped = text.strip().strip("()[]")
    try:
        entries = [int(part) for part in stripped.split(",") if part.strip()]
    except ValueError:
        raise InvalidTupleError(f"not a comma-separated list of integers: {text!r}") from None
    return validate_tuple(entries, ctx)


def format_tuple(w) -> str:
    return ",".join(str(b) for b in w)


def to_partition(w: ColumnTuple) -> PartitionShape:
    return tuple(b - i for i, b in enumerate(w, start=1))


def from_partition(shape: PartitionShape) -> ColumnTuple:
    return tuple(p + i for i, p in enumerate(shape, start=1))


def bruhat_leq(u: ColumnTuple, v: ColumnTuple) -> bool:
    """Bruhat order on I(r, n), which is the componentwise order."""
    if len(u) != len(v):
        raise InvalidTupleError(f"tuples of different length: {format_tuple(u)} vs {format_tuple(v)}")
    return all(x <= y for x, y in zip(u, v))


def run_length(shape: PartitionShape) -> RunEncoding:
    runs: RunEncoding = []
    for p in shape:
        if p == 0:
            continue
        if runs and runs[-1][0] == p:
            runs[-1] = (p, runs[-1][1] + 1)
        else:
            runs.append((p, 1))
    return runs


def enumerate_interval(lo: ColumnTuple, hi: ColumnTuple) -> Iterator[ColumnTuple]:
    """
    Yield every strictly increasing ``v`` with ``lo <= v <= hi`` componentwise,
    in lexicographic order.

    >>> list(enumerate_interval((1, 3), (2, 4)))
    [(1, 3), (1, 4), (2, 3), (2, 4)]
    """
    if len(lo) != len(hi):
        raise InvalidTupleError("bounds of different length")
    r = len(lo)
    prefix: list[int] = []

    def extend(i: int) -> Iterator[ColumnTuple]:
        if i == r:
            yield tuple(prefix)
            return
        start = lo[i] if i == 0 else max(lo[i], prefix[-1] + 1)
        for b in range(start, hi[i] + 1):
            prefix.append(b)
            yield from extend(i + 1)
            prefix.pop()

    return extend(0)


def bottom_tuple(ctx: GrassmannianContext) -> ColumnTuple:
    return tuple(range(1, ctx.r + 1))


def top_tuple(ctx: GrassmannianContext) -> ColumnTuple:
    return tuple(range(ctx.n - ctx.r + 1, ctx.n + 1))


def all_tuples(ctx: GrassmannianContext) -> Iterator[ColumnTuple]:
    return enumerate_interval(bottom_tuple(ctx), top_tuple(ctx))
