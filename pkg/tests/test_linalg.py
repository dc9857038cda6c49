from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from auslander.linalg import GF, QQ, Field, FieldError, Mat, Subspace, kron


def mats(field=QQ, max_dim=5):
    if field.p is None:
        entry = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    else:
        entry = st.integers(0, field.p - 1)

    @st.composite
    def build(draw):
        r = draw(st.integers(0, max_dim))
        c = draw(st.integers(0, max_dim))
        rows = [[field(draw(entry)) for _ in range(c)] for _ in range(r)]
        return Mat(rows, field, c)
    return build()


def test_field_rejects_composites():
    for bad in (1, 4, 9, 15):
        with pytest.raises(FieldError):
            Field(bad)


def test_gf_arithmetic():
    F = GF(7)
    assert F(Fraction(1, 3)) == 5
    assert F.mul(3, 5) == 1
    with pytest.raises(FieldError):
        F(Fraction(1, 7))


def test_inverse_of_empty():
    I0 = Mat.zeros(0, 0, QQ)
    assert I0.inverse() == I0


@settings(max_examples=60, deadline=None)
@given(mats())
def test_rank_agrees_with_sympy(M):
    S = sympy.Matrix(M.nrows, M.ncols, [sympy.Rational(str(x)) for r in M.rows for x in r])
    assert M.rank() == S.rank()
    R, piv = M.rref()
    Rs, pivs = S.rref()
    assert list(piv) == list(pivs)
    assert [[sympy.Rational(str(x)) for x in r] for r in R.rows[:len(piv)]] == \
        [list(Rs.row(i)) for i in range(len(piv))]


@settings(max_examples=60, deadline=None)
@given(mats(GF(5)))
def test_kernel_really_kernel(M):
    K = M.kernel_basis()
    assert K.nrows == M.ncols - M.rank()
    if K.nrows:
        assert (M @ K.T).is_zero()


@settings(max_examples=40, deadline=None)
@given(mats(QQ, 4))
def test_solve_round_trip(M):
    if M.nrows == 0 or M.ncols == 0:
        return
    X = Mat.identity(M.ncols, QQ).submatrix(cols=[0])
    b = M @ X
    Y = M.solve(b)
    assert Y is not None and M @ Y == b


def test_inverse_and_kron():
    F = QQ
    A = Mat([[1, 2], [3, 4]], F)
    assert A @ A.inverse() == Mat.identity(2, F)
    B = Mat([[0, 1], [1, 0]], F)
    X = Mat([[1, -1], [2, 5]], F)
    vec = lambda m: Mat([m.flatten()], F)
    assert vec(A @ X @ B) == vec(X) @ kron(A.T, B)


def test_subspace_operations():
    F = QQ
    U = Subspace.of_vectors([[1, 0, 0], [0, 1, 0]], F, 3)
    W = Subspace.of_vectors([[0, 1, 0], [0, 0, 1]], F, 3)
    assert U.intersection(W).dim == 1
    assert U.sum(W).dim == 3
    assert U.coords([2, 3, 0]) == [2, 3]
    assert U.coords([0, 0, 1]) is None
    assert U.quotient_coords([5, 7, 9]) == [9]
