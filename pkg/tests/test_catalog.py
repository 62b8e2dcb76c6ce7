import pytest

from purebraid.braid import BraidWord, is_pure, project_to_permutation, reverse_word
from purebraid.catalog import (FAMILIES, BoxConfig, Interval, box_configs, chi_words,
                               classical_generator, ell, ell2, longest_lift, longest_square,
                               sweep_identity, verify_identity)
from purebraid.garside import equal

from oracles import braid_equal

N_MAX = 6


def intervals(n_max=N_MAX):
    for n in range(1, n_max + 1):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                yield Interval(i, j, n)


@pytest.mark.parametrize("i, j, n, expected", [
    (1, 1, 2, "1"), (1, 2, 2, "1 2 1"), (2, 1, 2, ""), (1, 3, 3, "1 2 1 3 2 1")])
def test_longest_lift_spelling(i, j, n, expected):
    assert str(ell(i, j, n)) == expected


def test_longest_square_examples():
    assert str(ell2(1, 1, 2)) == "1 1"
    assert ell2(2, 1, 2).letters == ()
    assert equal(ell2(1, 2, 2), BraidWord.parse("2 1 2 1 2 1", 3))


@pytest.mark.parametrize("i, j, n, sigma", [(1, 2, 1, "1"), (1, 3, 2, "2 1 -2"), (2, 4, 3, "3 2 -3")])
def test_classical_generator_spelling(i, j, n, sigma):
    s, a = classical_generator(i, j, n)
    assert str(s) == sigma
    assert a == s * s


@pytest.mark.parametrize("i, j, n", [(0, 1, 2), (2, 2, 2), (1, 4, 2)])
def test_classical_generator_rejects(i, j, n):
    with pytest.raises(ValueError):
        classical_generator(i, j, n)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(1, 4, 3)
    assert Interval(3, 2, 3).is_empty
    assert Interval.from_pair(2, 5, 4) == Interval(2, 4, 4)


def test_box_config_validation_and_derived():
    cfg = BoxConfig(1, 2, 1, 2, 3, 3)
    assert (cfg.x, cfg.y, cfg.b, cfg.h) == (1, 1, 1, 3)
    with pytest.raises(ValueError):
        BoxConfig(1, 1, 1, 2, 3, 3)
    for n in range(3, N_MAX + 1):
        for c in box_configs(n):
            assert c.x >= 1 and c.y >= 1
            assert c.a + c.x - 1 == c.k - c.y + 1


def test_chi_words_smallest_config():
    w = chi_words(BoxConfig(1, 2, 1, 2, 3, 3))
    assert [str(v) for v in w] == ["1", "2", "3", "2"]


def test_chi_words_factor_lengths():
    cfg = BoxConfig(1, 2, 3, 5, 6, 6)  # x = 2, y = 3
    w = chi_words(cfg)
    assert len(w.c_middle) % cfg.x == 0 and len(w.d_middle) % cfg.y == 0


@pytest.mark.parametrize("v", list(intervals()), ids=str)
def test_longest_lift_properties(v):
    w = longest_lift(v)
    perm = project_to_permutation(w).images
    block = range(v.lo, v.hi + 2)
    for pos in range(1, v.ambient + 2):
        expected = v.lo + v.hi + 1 - pos if pos in block else pos
        assert perm[pos - 1] == expected
    assert is_pure(longest_square(v))
    assert equal(reverse_word(w), w)


@pytest.mark.parametrize("v", [v for v in intervals(4) if v.size <= 3], ids=str)
def test_longest_lift_against_free_group_action(v):
    # s_j..s_i repeated is another spelling of the square; the reference
    # oracle checks it without the Garside machinery
    run = list(range(v.hi, v.lo - 1, -1))
    assert braid_equal(v.ambient + 1, longest_square(v).letters, run * (v.size + 1))


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_identity_family_sweep(name):
    report = sweep_identity(name, N_MAX)
    assert report.total > 0
    assert report.failed == 0, [it.id for it in report.items if not it.verdict][:5]


def test_verify_identity_single_instances():
    assert verify_identity("square-power", (1, 2, 2)).ok
    assert verify_identity("coxeter-commute", (1, 1, 1, 3)).ok
    assert verify_identity("square-factorizations", (1, 3, 3)).ok


def test_verify_identity_errors():
    with pytest.raises(ValueError):
        verify_identity("no-such-family", (1, 2, 2))
    with pytest.raises(ValueError):
        verify_identity("square-power", (2, 1, 2))

