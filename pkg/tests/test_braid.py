import pytest
from hypothesis import given, strategies as st

from purebraid.braid import (BraidWord, Permutation, concat, free_reduce, is_pure,
                             project_to_permutation, reverse_word)

from oracles import braid_equal, permutation_of


@st.composite
def words(draw, min_strands=2, max_strands=6, max_len=20):
    m = draw(st.integers(min_strands, max_strands))
    letters = draw(st.lists(st.integers(1, m - 1).flatmap(lambda g: st.sampled_from((g, -g))),
                            max_size=max_len))
    return BraidWord(m, tuple(letters))


def test_parse_round_trip():
    w = BraidWord.parse("1 2 -1", 3)
    assert w.letters == (1, 2, -1)
    assert str(w) == "1 2 -1"
    assert BraidWord.parse("", 4) == BraidWord.identity(4)


@pytest.mark.parametrize("text, strands", [("0", 3), ("3", 3), ("-4", 4), ("1 x", 3)])
def test_parse_rejects(text, strands):
    with pytest.raises(ValueError):
        BraidWord.parse(text, strands)


def test_strand_mismatch():
    with pytest.raises(ValueError):
        BraidWord(3, (1,)) * BraidWord(4, (1,))
    with pytest.raises(ValueError):
        concat([BraidWord(3, (1,))], 4)


def test_power_and_inverse():
    w = BraidWord(3, (1, -2))
    assert (w ** 2).letters == (1, -2, 1, -2)
    assert (w ** -1).letters == (2, -1)
    assert (w ** 0).letters == ()
    assert w.inverse().inverse() == w


def test_free_reduce_examples():
    assert free_reduce(BraidWord(4, (1, 2, -2, -1, 3))).letters == (3,)
    assert free_reduce(BraidWord(4, (1, -1, 1))).letters == (1,)


def test_permutation_product_convention():
    s1 = Permutation.transposition(3, 1, 2)
    s2 = Permutation.transposition(3, 2, 3)
    assert (s1 * s2)(3) == s1(s2(3))
    assert (s1 * s1).is_identity()
    p = Permutation((2, 3, 1))
    assert (p * p.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_projection_small():
    assert project_to_permutation(BraidWord(3, (1,))).images == (2, 1, 3)
    assert is_pure(BraidWord(3, (1, 1)))
    assert not is_pure(BraidWord(3, (1, 2)))


@given(words())
def test_projection_matches_reference(w):
    assert project_to_permutation(w).images == permutation_of(w.strands, w.letters)


@given(words())
def test_free_reduce_is_reduced_and_equal(w):
    r = free_reduce(w)
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))
    assert braid_equal(w.strands, w.letters, r.letters)


@given(words(), words())
def test_projection_is_homomorphism(u, v):
    v = BraidWord(u.strands, tuple(g for g in v.letters if abs(g) < u.strands))
    assert project_to_permutation(u * v) == project_to_permutation(u) * project_to_permutation(v)


@given(words())
def test_reverse_is_involution(w):
    assert reverse_word(reverse_word(w)) == w
    assert len(reverse_word(w)) == len(w)
