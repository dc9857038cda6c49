"""Algebraic invariants checked on random inputs.

``COUNT`` records how many examples each property has seen, so the acceptance
run can confirm the total.
"""
from collections import Counter

from hypothesis import given, settings, strategies as st

from auslander import modules as md
from auslander.linalg import GF, QQ, Mat

import oracles as o
from conftest import a2, a3rad2, kx2

COUNT = Counter()
EXAMPLES = 150
FIELDS = [QQ, GF(2), GF(3), GF(7)]
ALGS = {"A2": (a2(), o.A2), "A3": (a3rad2(), o.A3RAD2), "KX": (kx2(), o.KX2)}


@st.composite
def matrices(draw, max_dim=6):
    F = draw(st.sampled_from(FIELDS))
    r, c = draw(st.integers(0, max_dim)), draw(st.integers(0, max_dim))
    if F.p is None:
        entry = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    else:
        entry = st.integers(0, F.p - 1)
    return Mat([[F(draw(entry)) for _ in range(c)] for _ in range(r)], F, c)


@st.composite
def modules(draw, max_dim=2):
    key = draw(st.sampled_from(sorted(ALGS)))
    A, q = ALGS[key]
    while True:
        dims = {v: draw(st.integers(0, max_dim)) for v in q.vertices}
        maps = {a: [[draw(st.integers(-1, 1)) for _ in range(dims[t])] for _ in range(dims[s])]
                for a, s, t in q.arrows}
        if o.satisfies_q(q, dims, maps):
            return md.module_from_arrows(A, dims, maps)


@settings(max_examples=EXAMPLES, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    COUNT["rank-nullity"] += 1
    K, L = M.kernel_basis(), M.left_kernel_basis()
    assert M.rank() + K.nrows == M.ncols
    assert M.rank() + L.nrows == M.nrows
    assert (M @ K.T).is_zero() and (L @ M).is_zero()
    assert M.rank() == M.T.rank()


@settings(max_examples=EXAMPLES, deadline=None)
@given(matrices())
def test_rref_idempotent(M):
    COUNT["rref"] += 1
    R, piv = M.rref()
    R2, piv2 = R.rref()
    assert R2 == R and piv2 == piv
    assert len(piv) == M.rank()
    # same row space
    assert Mat.vstack([M, R], M.field, M.ncols).rank() == len(piv)


@settings(max_examples=EXAMPLES, deadline=None)
@given(modules())
def test_krull_schmidt_deterministic(M):
    COUNT["krull-schmidt"] += 1
    first = md.decompose_with_maps(M)
    second = md.decompose_with_maps(M)
    assert [(S.dim, S.dimension_vector(), i, p) for S, i, p in first] == \
           [(S.dim, S.dimension_vector(), i, p) for S, i, p in second]
    assert sum(S.dim for S, _, _ in first) == M.dim
    for S, i, p in first:
        assert (i @ p) == Mat.identity(S.dim, M.field)
        assert md.is_indecomposable(S)


@settings(max_examples=EXAMPLES, deadline=None)
@given(modules())
def test_duality_involution(M):
    COUNT["duality"] += 1
    D = md.dual(M)
    assert D.dim == M.dim
    assert D.algebra is M.algebra.opposite()
    assert md.is_isomorphic(md.dual(D), M)
