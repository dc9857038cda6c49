import pytest

from auslander.algebra import (Algebra, AlgebraError, Arrow, DimensionBoundError, QuiverPresentation,
                               SplittingError, UnsupportedFieldError, corner_algebra, field_algebra,
                               from_quiver, ideal_generated, product_algebra, quotient_algebra,
                               truncated_polynomial_algebra)
from auslander.linalg import GF, QQ

from conftest import a2, a3rad2, kx2


def upper_triangular(field=QQ):
    # basis e11, e12, e22 with matrix multiplication
    idx = {"11": 0, "12": 1, "22": 2}
    mult = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for a, i in idx.items():
        for b, j in idx.items():
            if a[1] == b[0]:
                mult[i][j][idx[a[0] + b[1]]] = 1
    return Algebra(field, mult, [1, 0, 1], ["e11", "e12", "e22"])


def polynomial_quotient(coeffs, field=QQ):
    """``k[x]/(f)`` for monic ``f`` given low degree first, without the leading 1."""
    n = len(coeffs)
    red = [[0] * n for _ in range(2 * n)]
    for k in range(n):
        red[k][k] = 1
    for k in range(n, 2 * n):
        # x^k = x * x^{k-1}; x^n = -sum c_i x^i
        prev = red[k - 1]
        shifted = [0] + prev[:-1]
        top = prev[-1]
        red[k] = [shifted[i] - top * coeffs[i] for i in range(n)]
    mult = [[red[i + j] for j in range(n)] for i in range(n)]
    return Algebra(field, mult, [1] + [0] * (n - 1))


@pytest.mark.parametrize("build,dim,rad", [(a2, 3, 1), (a3rad2, 5, 2), (kx2, 2, 1)])
def test_quiver_algebra_dimensions(build, dim, rad):
    A = build()
    assert A.dim == dim
    assert A.radical().dim == rad
    assert A.verify_radical()
    assert A.check_idempotents()


def test_a4_path_algebra_has_dimension_ten():
    q = QuiverPresentation(list("1234"), [Arrow(n, s, t) for n, s, t in
                                           [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")]])
    assert from_quiver(q).dim == 10


def test_field_algebra():
    k = field_algebra()
    assert k.dim == 1 and k.radical().dim == 0 and len(k.primitive_idempotents()) == 1


def test_paths_compose_left_to_right():
    A = a3rad2()
    q = QuiverPresentation(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3")])
    B = from_quiver(q)
    ia, ib, iab = (B.labels.index(x) for x in ("a", "b", "a*b"))
    assert B.mul(B.basis_vector(ia), B.basis_vector(ib)) == B.basis_vector(iab)
    assert not any(B.mul(B.basis_vector(ib), B.basis_vector(ia)))
    assert "a*b" not in A.labels


def test_infinite_dimensional_quiver_is_rejected():
    q = QuiverPresentation(["1"], [Arrow("x", "1", "1")], max_path_length=4)
    with pytest.raises(DimensionBoundError):
        from_quiver(q)


def test_bad_relations_are_rejected():
    q = QuiverPresentation(["1", "2"], [Arrow("a", "1", "2")], [{("a", "a"): 1}])
    with pytest.raises(AlgebraError):
        from_quiver(q)


def test_idempotent_splitting_without_presets():
    T = upper_triangular()
    idems = T.primitive_idempotents()
    assert len(idems) == 2 and T.check_idempotents()
    P = product_algebra(QQ, 3)
    assert len(P.primitive_idempotents()) == 3
    assert len(truncated_polynomial_algebra(QQ, 3).primitive_idempotents()) == 1
    # x^2 - 1 splits over QQ
    assert len(polynomial_quotient([-1, 0]).primitive_idempotents()) == 2


def test_non_split_division_algebra_is_reported():
    F = polynomial_quotient([1, 0])        # QQ[x]/(x^2 + 1)
    assert F.radical().dim == 0
    with pytest.raises(SplittingError):
        F.primitive_idempotents()


def test_small_characteristic_rejected_for_radical():
    with pytest.raises(UnsupportedFieldError):
        a3rad2(GF(3)).radical()
    assert a3rad2(GF(7)).radical().dim == 2


def test_opposite_is_involutive():
    A = a3rad2()
    assert A.opposite().opposite().same_constants(A)
    assert A.opposite().is_associative()


def test_corner_and_quotient():
    A = a3rad2()
    e1, e2, e3 = A.primitive_idempotents()
    e = tuple(x + y for x, y in zip(e1, e2))
    C, emb = corner_algebra(A, e)
    assert C.dim == 3 and C.is_associative()           # e1, e2, a
    I = ideal_generated(A, e)
    Q, lift, _ = quotient_algebra(A, I)
    assert Q.dim == 1                                   # only e3 survives
    assert I.dim + Q.dim == A.dim
