from auslander import modules as md
from auslander.approx import contains

import oracles as o


def test_gamma_dimensions(B2, BK, B3):
    assert B2.gamma.dim == 5 and B2.gamma.is_associative()
    assert BK.gamma.dim == 5
    assert len(B2.gamma.primitive_idempotents()) == 3


def test_gamma_dimension_from_brute_force_homs(B2):
    q = o.A2
    reps = {"S1": o.rep(q, {"1": 1}), "S2": o.rep(q, {"2": 1}), "P1": o.rep(q, {"1": 1, "2": 1}, a=((1,),))}
    assert sum(o.hom_dim_q(q, reps[x], reps[y]) for x in reps for y in reps) == B2.gamma.dim


def test_yoneda_of_generator_is_projective(B2):
    for i, G in enumerate(B2.generators):
        Y = B2.yoneda(G)
        assert md.is_isomorphic(Y, md.projective(B2.gamma, i))
        assert md.is_isomorphic(B2.coyoneda(G), md.projective(B2.gamma.opposite(), i))


def test_yoneda_dimensions(B2, A2):
    S1 = md.simple(A2, 0)
    assert B2.yoneda(S1).dim == 2          # Hom(S1, S1) + Hom(P1, S1)


def test_fp_functor_kx2(BK, UK):
    R, S = UK.by_name("P1"), UK.by_name("S1")
    # the functor presented by multiplication by x on R
    x = md.hom_space(R, R)
    rad = [f for f in x.basis if f.rank() == 1][0]
    assert BK.fp_functor(R, R, rad).dim == 2


def test_right_and_left_approximations(B3, A3):
    S2 = md.simple(A3, 1)
    b, a = B3.minimal_right_approximation(S2)
    assert B3.is_right_approximation(b.module, a, S2)
    assert B3.right_minimality_certificate(b, a, S2)
    assert contains(B3, b.module)[1] == ["P2"]
    b2, a2 = B3.right_approximation(S2)
    assert B3.is_right_approximation(b2.module, a2, S2)
    c, l = B3.minimal_left_approximation(S2)
    assert B3.is_left_approximation(c.module, l, S2)
    assert B3.left_minimality_certificate(c, l, S2)
    assert contains(B3, c.module)[1] == ["P1"]


def test_membership(B3, U3):
    assert contains(B3, U3.by_name("S1"))[0]
    assert not contains(B3, U3.by_name("S2"))[0]
