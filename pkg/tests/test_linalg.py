"""Exact linear algebra over Q(i)."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hsuper.linalg import (
    Matrix,
    extend_to_spanning,
    image_basis,
    invert,
    kernel_basis,
    rank,
    rref,
    solve,
    stack_columns,
    vec,
)
from hsuper.scalars import I, ONE, ZERO, Scalar, scalar


def test_rref_and_rank():
    m = Matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    reduced, rk, pivots = rref(m)
    assert rk == 2
    assert pivots == [0, 1]
    assert reduced.row(0) == vec([1, 0, 1])
    assert reduced.row(1) == vec([0, 1, 1])


def test_kernel_and_image():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    ker = kernel_basis(m)
    assert ker.dim == 2
    for v in ker.basis:
        assert m.apply(v) == (ZERO, ZERO)
    img = image_basis(m)
    assert img.dim == 1


def test_solve():
    m = Matrix([[1, 1], [0, 1]])
    assert m.apply(solve(m, vec([3, 1]))) == vec([3, 1])
    inconsistent = Matrix([[1, 1], [1, 1]])
    assert solve(inconsistent, vec([0, 1])) is None


def test_invert():
    m = Matrix([[1, 1], [0, 1]])
    assert invert(m) @ m == Matrix.identity(2)
    assert invert(Matrix([[1, 1], [2, 2]])) is None
    assert invert(Matrix([[1, 0], [0, 0]])) is None
    assert invert(Matrix([[0, 0], [0, 1]])) is None
    assert invert(Matrix([[1, 2, 3], [4, 5, 6]])) is None


def test_invert_gaussian_entries():
    m = Matrix([[I, ONE], [ZERO, scalar(Fraction(1, 2))]])
    assert m @ invert(m) == Matrix.identity(2)


def test_extend_to_spanning():
    base = [vec([1, 0, 0])]
    candidates = [vec([2, 0, 0]), vec([0, 1, 0]), vec([1, 1, 0]), vec([0, 0, 1])]
    chosen = extend_to_spanning(base, candidates)
    assert chosen == [vec([0, 1, 0]), vec([0, 0, 1])]


def test_stack_columns():
    m = stack_columns([vec([1, 2]), vec([3, 4])])
    assert m.column(0) == vec([1, 2])
    assert m.column(1) == vec([3, 4])


small = st.integers(min_value=-5, max_value=5)


@st.composite
def small_matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=4))
    entries = draw(
        st.lists(
            st.lists(st.tuples(small, small), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return Matrix([[Scalar(Fraction(a), Fraction(b)) for a, b in r] for r in entries])


@given(small_matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@given(small_matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m).basis:
        assert all(not x for x in m.apply(v))


@given(small_matrices())
def test_invert_roundtrip(m):
    if m.rows != m.cols:
        assert invert(m) is None
        return
    inv = invert(m)
    if inv is None:
        assert rank(m) < m.rows
    else:
        assert m @ inv == Matrix.identity(m.rows)
        assert inv @ m == Matrix.identity(m.rows)
