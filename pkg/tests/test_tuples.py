import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gfpr import tuples as T
from oracles import (consecutions_bruteforce, csf_bruteforce, inversions_bruteforce,
                     sip_bruteforce, subtuple_bruteforce)

GAMMA = (3, 4, 1, 6, 2, 3, 1, 2, 4, 5, 2)
small_tuples = st.lists(st.integers(0, 4), max_size=8).map(tuple)


def test_basic_operations():
    assert T.reverse((1, 2, 3)) == (3, 2, 1)
    assert T.shift((-4, -3, -5), 5) == (1, 2, 0)
    assert T.concat((), (0, 1)) == (0, 1)
    assert T.negate((0, 2, -1)) == (0, -2, 1)
    assert T.interval(2, 1) == ()


def test_index_tuple_range():
    t = T.IndexTuple((1, 0, 2), 0, 2)
    assert t.shift(-3).entries == (-2, -3, -1)
    assert (t.shift(-3).lo, t.shift(-3).hi) == (-3, -1)
    assert T.IndexTuple((), 0, 5).entries == ()
    with pytest.raises(ValueError):
        T.IndexTuple((3,), 0, 2)


def test_sip_fixtures():
    assert T.is_sip((0, 1, 0, 2, 1))
    assert not T.is_sip((0, 0))
    assert T.is_sip((-3, -2, -3))
    with pytest.raises(ValueError):
        T.is_sip((-1, 0))


def test_csf_fixtures():
    assert T.is_csf((1, 2, 0))
    assert T.is_csf((0, 1, 2, 3))
    # strings (2), (1), (0) end in decreasing order, so this one is in csf
    assert T.is_csf((2, 1, 0))
    assert not T.is_csf((0, 2, 1))


def test_subtuple_fixtures():
    assert T.is_subtuple((0, 1, 2), (0, 1, 0, 2, 1))
    assert not T.is_subtuple((2, 1, 0), (0, 1, 0, 2, 1))
    assert T.is_subtuple((), (3,))


def test_consecutions_and_inversions():
    assert T.consecutions_at(GAMMA, 1) == 4
    assert T.consecutions_at(GAMMA, 0) == -1
    assert T.inversions_at(GAMMA, 2) == 2
    assert T.inversions_at(GAMMA, 0) == -1
    assert T.consecutions_at((), 3) == -1
    assert T.inversions_at((0,), 0) == 0
    assert T.inversions_at((0, 1, 0, 2), 0) == 1


@settings(max_examples=300, deadline=None)
@given(small_tuples)
def test_sip_matches_definition(t):
    assert T.is_sip(t) == sip_bruteforce(t)


@settings(max_examples=300, deadline=None)
@given(small_tuples)
def test_csf_matches_bruteforce_parse(t):
    assert T.is_csf(t) == csf_bruteforce(t)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=4).map(tuple), small_tuples)
def test_subtuple_matches_combinations(a, b):
    assert T.is_subtuple(a, b) == subtuple_bruteforce(a, b)


@settings(max_examples=300, deadline=None)
@given(small_tuples, st.integers(0, 4))
def test_consecutions_match_bruteforce(t, r):
    assert T.consecutions_at(t, r) == consecutions_bruteforce(t, r)
    assert T.inversions_at(t, r) == inversions_bruteforce(t, r)
    assert T.consecutions_at(T.reverse(t), r) == T.inversions_at(t, r)


@given(small_tuples, st.integers(-10, 10))
def test_shift_and_reverse_invert(t, c):
    assert T.shift(T.shift(t, c), -c) == t
    assert T.reverse(T.reverse(t)) == t


def test_admissible_fixtures():
    assert T.admissible_tuple(2, 0).entries == (1, 2, 0)
    assert T.admissible_tuple(3, 3).entries == (0, 1, 2, 3)
    assert T.admissible_tuple(0, 0).entries == (0,)
    assert T.simple_admissible(5).entries == (4, 5, 2, 3, 0, 1)
    assert T.simple_admissible(5).q == 1
    with pytest.raises(ValueError):
        T.admissible_tuple(3, 0)
    with pytest.raises(ValueError):
        T.admissible_tuple(2, 3)


def test_symmetric_complement_fixtures():
    assert T.symmetric_complement(T.simple_admissible(2)) == (1,)
    c = T.symmetric_complement(T.admissible_tuple(3, 3))
    assert c == (0, 1, 2, 0, 1, 0)
    assert T.shift(c, -4) == (-4, -3, -2, -4, -3, -4)
    assert T.symmetric_complement(T.admissible_tuple(0, 0)) == ()


@pytest.mark.parametrize("r", range(0, 9))
def test_admissible_tuples_are_csf_permutations(r):
    for q in range(r % 2, r + 1, 2):
        a = T.admissible_tuple(r, q)
        assert sorted(a.entries) == list(range(r + 1))
        assert T.is_csf(a.entries)
        assert T.as_admissible(a.entries, r) == a


@pytest.mark.parametrize("r", range(0, 9))
def test_zero_in_simple_complement_iff_odd(r):
    assert (0 in T.symmetric_complement(T.simple_admissible(r))) == (r % 2 == 1)


def test_canonical_form_fixtures():
    assert T.is_canonical_form((), 1)
    assert T.is_canonical_form((), 0)
    assert T.is_canonical_form((0,), 2)
    assert not T.is_canonical_form((1, 0), 2)
    assert not T.is_canonical_form((0,), 1)
    assert T.is_canonical_form((1, 2, 0), 4)
    assert T.canonical_form(4, (1, 0)) == (1, 2, 0)


@pytest.mark.parametrize("r", range(0, 8))
def test_canonical_form_accepts_exactly_the_generated_tuples(r):
    generated = set()
    for starts in itertools.product(*(range(r - 2 * j + 2) for j in range(1, r // 2 + 1))):
        generated.add(T.canonical_form(r, starts))
    for t in generated:
        assert T.is_canonical_form(t, r)
    for length in range(4):
        for t in itertools.product(range(max(r - 1, 1)), repeat=length):
            assert T.is_canonical_form(t, r) == (t in generated)


def test_zr_fixtures():
    assert T.zr_simple_tuple((0, 1, 2), 0) == (1, 2, 0)
    assert T.zr_simple_tuple((0, 1), 0) == (1, 0)
    # (1:2) is a string starting at 1 with 1 < 2, so 1 is a type-1 index
    assert T.zr_simple_tuple((1, 2, 0), 1) == (2, 0, 1)
    with pytest.raises(ValueError):
        T.zr_simple_tuple((0,), 0)


def test_type1_fixtures():
    assert T.is_type1_tuple((0, 1, 2), ())
    assert T.is_type1_tuple((0, 1, 2), (0,))
    assert not T.is_type1_tuple((0,), (0,))


@pytest.mark.parametrize("k", range(1, 6))
def test_zr_keeps_the_base_set(k):
    for alpha in itertools.permutations(range(k + 1)):
        for s in range(k + 1):
            if T.is_type1_index(alpha, s):
                assert sorted(T.zr_simple_tuple(alpha, s)) == list(range(k + 1))


def test_csf_blocks_commute_to_the_permutation():
    # rearranging a permutation to its csf only swaps non-adjacent indices
    for alpha in itertools.permutations(range(5)):
        csf = T.permutation_csf(alpha)
        assert T.is_csf(csf)
        pos_a = {e: i for i, e in enumerate(alpha)}
        pos_c = {e: i for i, e in enumerate(csf)}
        for i in range(4):
            assert (pos_a[i] < pos_a[i + 1]) == (pos_c[i] < pos_c[i + 1])
