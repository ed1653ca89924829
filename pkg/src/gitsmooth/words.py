"""Reduced words, one-line permutations and the action of S_n on r-subsets."""

from __future__ import annotations

__all__ = [
    "ReducedWord", "Permutation", "canonical_reduced_word", "format_word",
    "word_to_permutation", "tuple_to_min_coset_perm", "reflect_subset",
    "parabolic_orbit",
]

from collections import deque
from typing import Iterable

from .core import ColumnTuple, InvalidTupleError

# simple reflection indices, s_j acts by swapping j and j + 1
ReducedWord = list[int]

# one-line notation (w(1), ..., w(n))
Permutation = tuple[int, ...]


def canonical_reduced_word(w: ColumnTuple) -> ReducedWord:
    """
    The word ``(s_{b_1-1} ... s_1)(s_{b_2-1} ... s_2) ... (s_{b_r-1} ... s_r)``.

    A block is empty when ``b_i - 1 < i``.

    >>> canonical_reduced_word((3, 5, 7, 9))
    [2, 1, 4, 3, 2, 6, 5, 4, 3, 8, 7, 6, 5, 4]
    """
    word: ReducedWord = []
    for i, b in enumerate(w, start=1):
        word.extend(range(b - 1, i - 1, -1))
    return word


def format_word(word: Iterable[int]) -> str:
    return " ".join(f"s{j}" for j in word) or "e"


def word_to_permutation(word: Iterable[int], n: int) -> Permutation:
    """
    Multiply the word out left to right as a product of adjacent transpositions.

    Multiplying ``x`` by ``s_j`` on the right swaps positions ``j`` and ``j + 1``
    of its one-line notation.
    """
    images = list(range(1, n + 1))
    for j in word:
        if not 1 <= j <= n - 1:
            raise InvalidTupleError(f"letter s{j} out of range for n={n}")
        images[j - 1], images[j] = images[j], images[j - 1]
    return tuple(images)


def tuple_to_min_coset_perm(w: ColumnTuple, n: int) -> Permutation:
    members = set(w)
    rest = [x for x in range(1, n + 1) if x not in members]
    return tuple(sorted(w)) + tuple(rest)


def reflect_subset(j: int, w: ColumnTuple, n: int) -> ColumnTuple:
    """Left multiplication by ``s_j`` on the coset of ``w``, seen as an r-subset."""
    if not 1 <= j <= n - 1:
        raise InvalidTupleError(f"reflection index {j} out of range for n={n}")
    members = set(w)
    if (j in members) == (j + 1 in members):
        return w
    swap = {j: j + 1, j + 1: j}
    return tuple(sorted(swap.get(b, b) for b in w))


def parabolic_orbit(J: Iterable[int], w: ColumnTuple, n: int) -> set[ColumnTuple]:
    """Orbit of ``w`` under the subgroup generated by ``{s_j : j in J}``, by BFS."""
    gens = sorted(set(J))
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for j in gens:
            u = reflect_subset(j, v, n)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen
