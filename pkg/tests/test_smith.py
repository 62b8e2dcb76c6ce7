import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from purebraid.smith import IntegerMatrix, smith_normal_form


def _det(m: IntegerMatrix) -> int:
    return int(sympy.Matrix(m.tolist()).det()) if m.rows else 1


def _check(m: IntegerMatrix):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(_det(u)) == 1 and abs(_det(v)) == 1
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d[i, j] == 0
    diag = d.diagonal()
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[:len(nz)] == nz  # zeros trail
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return diag


@st.composite
def matrices(draw, max_dim=30):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return IntegerMatrix.from_rows(rows, c)


@pytest.mark.parametrize("rows, expected", [
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[1, 2], [3, 4]], [1, 2]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[6]], [6]),
    ([[2, 0], [0, 3]], [1, 6]),
])
def test_known_forms(rows, expected):
    assert _check(IntegerMatrix.from_rows(rows)) == expected


def test_empty_and_shape_errors():
    assert smith_normal_form(IntegerMatrix.from_rows([], 3)).V == IntegerMatrix.identity(3)
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        IntegerMatrix.identity(2) @ IntegerMatrix.identity(3)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_random_matrices(m):
    diag = _check(m)
    if m.rows and m.cols:
        ref = sympy_snf(sympy.Matrix(m.tolist()), domain=sympy.ZZ)
        ref_diag = sorted(abs(int(ref[t, t])) for t in range(min(m.rows, m.cols)))
        assert sorted(diag) == ref_diag


@settings(max_examples=200)
@given(matrices(max_dim=6))
def test_small_random_matrices(m):
    _check(m)
