import pytest
from hypothesis import given, strategies as st

from gitsmooth.core import InvalidTupleError, all_tuples, bruhat_leq, make_context, to_partition
from gitsmooth.singular import stabilizer_descents
from gitsmooth.words import (
    canonical_reduced_word, format_word, parabolic_orbit, reflect_subset,
    tuple_to_min_coset_perm, word_to_permutation,
)
from oracles import brute_orbit

SMALL = [(r, n) for n in range(2, 11) for r in range(1, n)]


def filling_word(shape):
    """Label row i with s_i, s_{i+1}, ... and read right to left, bottom to top."""
    grid = [[i + c for c in range(p)] for i, p in enumerate(shape, start=1)]
    return [label for row in grid for label in reversed(row)]


@pytest.mark.parametrize("w, word", [
    ((3, 5, 7, 9), [2, 1, 4, 3, 2, 6, 5, 4, 3, 8, 7, 6, 5, 4]),
    ((3, 5, 8, 9), [2, 1, 4, 3, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4]),
    ((5, 7, 8, 9), [4, 3, 2, 1, 6, 5, 4, 3, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4]),
    ((1, 2, 3), []),
])
def test_canonical_word_examples(w, word):
    assert canonical_reduced_word(w) == word


def test_component_words_from_example_one():
    assert canonical_reduced_word((2, 3, 7, 9)) == [1, 2, 6, 5, 4, 3, 8, 7, 6, 5, 4]
    assert canonical_reduced_word((3, 4, 5, 9)) == [2, 1, 3, 2, 4, 3, 8, 7, 6, 5, 4]
    assert canonical_reduced_word((3, 5, 6, 7)) == [2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4]


def test_format_word():
    assert format_word([2, 1]) == "s2 s1"
    assert format_word([]) == "e"


def test_word_to_permutation_examples():
    assert word_to_permutation([], 4) == (1, 2, 3, 4)
    assert word_to_permutation([1], 3) == (2, 1, 3)
    perm = word_to_permutation(canonical_reduced_word((3, 5, 7, 9)), 9)
    assert sorted(perm[:4]) == [3, 5, 7, 9]
    with pytest.raises(InvalidTupleError):
        word_to_permutation([4], 4)


@pytest.mark.parametrize("w, n, perm", [
    ((3, 5, 7, 9), 9, (3, 5, 7, 9, 1, 2, 4, 6, 8)),
    ((1, 2), 4, (1, 2, 3, 4)),
    ((2, 4), 4, (2, 4, 1, 3)),
])
def test_min_coset_perm(w, n, perm):
    assert tuple_to_min_coset_perm(w, n) == perm


@pytest.mark.parametrize("r, n", SMALL)
def test_word_invariants_exhaustive(r, n):
    ctx = make_context(r, n)
    for w in all_tuples(ctx):
        word = canonical_reduced_word(w)
        assert len(word) == sum(to_partition(w))
        assert all(1 <= j <= n - 1 for j in word)
        perm = word_to_permutation(word, n)
        assert tuple(sorted(perm[:r])) == w
        # the canonical word multiplies out to the minimal coset representative
        assert perm == tuple_to_min_coset_perm(w, n)
        assert filling_word(to_partition(w)) == word


@pytest.mark.parametrize("j, w", [(3, (4, 5, 7, 9)), (4, (3, 4, 7, 9)), (2, (2, 5, 7, 9)), (1, (3, 5, 7, 9))])
def test_reflect_subset(j, w):
    assert reflect_subset(j, (3, 5, 7, 9), 9) == w


def test_reflect_subset_range():
    with pytest.raises(InvalidTupleError):
        reflect_subset(9, (3, 5, 7, 9), 9)


def test_parabolic_orbit_examples():
    assert parabolic_orbit(set(), (3, 5, 7, 9), 9) == {(3, 5, 7, 9)}
    assert parabolic_orbit({1}, (2, 3), 4) == {(2, 3), (1, 3)}
    orbit = parabolic_orbit({1, 2, 4, 6, 8}, (3, 5, 7, 9), 9)
    assert all(bruhat_leq(v, (3, 5, 7, 9)) for v in orbit)
    assert (2, 3, 7, 9) not in orbit
    assert orbit == brute_orbit({1, 2, 4, 6, 8}, (3, 5, 7, 9), 9)


@pytest.mark.parametrize("r, n", SMALL)
def test_stabilizer_orbit_stays_below(r, n):
    ctx = make_context(r, n)
    for w in all_tuples(ctx):
        J = stabilizer_descents(w, n).j
        orbit = parabolic_orbit(J, w, n)
        assert all(bruhat_leq(v, w) for v in orbit)
        for j in range(1, n):
            assert reflect_subset(j, reflect_subset(j, w, n), n) == w


@given(st.data())
def test_orbit_matches_block_counts(data):
    n = data.draw(st.integers(2, 9))
    r = data.draw(st.integers(1, n - 1))
    w = tuple(sorted(data.draw(st.sets(st.integers(1, n), min_size=r, max_size=r))))
    J = data.draw(st.sets(st.integers(1, n - 1)))
    assert parabolic_orbit(J, w, n) == brute_orbit(J, w, n)
