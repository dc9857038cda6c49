import pytest

from auslander import modules as md
from auslander.abridger import (ABContext, ABContextError, ab_sequence, compare_with_right_defining,
                                evaluation_map, has_projective_copresentation, second_syzygy_membership,
                                verify_ab)
from auslander.approx import make_subcategory
from auslander.knit import enumerate_indecomposables


@pytest.fixture(scope="module", params=["B2", "BK"])
def ctx_and_indecs(request):
    ctx = ABContext(request.getfixturevalue(request.param))
    return ctx, enumerate_indecomposables(ctx.gamma)


def test_every_indecomposable_matches(ctx_and_indecs):
    ctx, U = ctx_and_indecs
    for X, nm in zip(U.indecs, U.names):
        data = ab_sequence(ctx, X)
        assert all(data.checks.values()), (nm, data.checks)
        ok, info = compare_with_right_defining(ctx, X, data)
        assert ok, (nm, info)
        w = info["witness"]
        assert w.squares and w.invertible and all(m.is_invertible() for m in w.maps)


def test_unit_iso_exactly_on_image_of_q_rho(ctx_and_indecs):
    # q_rho is fully faithful, so the modules with invertible unit are the q_rho-images
    # of the indecomposable corner modules, one each
    ctx, U = ctx_and_indecs
    R = ctx.R
    corner = enumerate_indecomposables(R.ctx.corner).indecs
    images = [R.q_rho.obj(Y) for Y in corner]
    members = [X for X in U.indecs if second_syzygy_membership(ctx, X)[0]]
    assert len(members) == len(corner)
    for X in members:
        assert sum(md.is_isomorphic(X, Z) for Z in images) == 1


def test_membership_oracle_agrees(ctx_and_indecs):
    ctx, U = ctx_and_indecs
    for X in U.indecs:
        assert second_syzygy_membership(ctx, X)[0] == has_projective_copresentation(ctx, X)[0]


def test_defect_modules_fail(ctx_and_indecs):
    ctx, U = ctx_and_indecs
    killed = [X for X in U.indecs if ctx.R.annihilated_by_e(X)]
    assert killed
    for X in killed:
        assert not ctx.R.unit_q_qr(X).is_invertible()


def test_ab_dimensions_a2(B2):
    ctx = ABContext(B2)
    S1 = md.simple(ctx.gamma, B2.names.index("S1"))
    data = ab_sequence(ctx, S1)
    # S1 is killed by e, so its double dual vanishes
    assert data.sequence.dims()[1] == 1
    assert data.X_star2.dim == 0


def test_evaluation_map_on_projective(B2):
    G = B2.gamma
    P = md.projective(G, 0)
    Xs, Xss, eps = evaluation_map(P)
    assert Xs.dim == md.projective(G.opposite(), 0).dim
    assert Xss.dim == P.dim and eps.is_invertible()


def test_context_requires_projectives_and_injectives(A3, U3):
    names = ["P1", "P2", "S3"]
    B = make_subcategory(A3, [U3.by_name(n) for n in names], names)
    with pytest.raises(ABContextError):
        ABContext(B)


def test_report(B2):
    ctx = ABContext(B2)
    U = enumerate_indecomposables(ctx.gamma)
    rep = verify_ab(ctx, U.indecs, U.names)
    assert rep.passed
    assert len(rep.tables["ab vs right-defining"]["rows"]) == 5
