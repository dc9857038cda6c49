import pytest

from auslander import modules as md
from auslander.algebra import Arrow, QuiverPresentation, from_quiver
from auslander.knit import (KnittingBoundError, almost_split_sequence, enumerate_indecomposables,
                            simple_count, universe_from_list)

import oracles as o


def dimvecs(U):
    return sorted(tuple(X.dimension_vector()) for X in U.indecs)


def test_a3rad2_matches_brute_force(U3):
    brute = o.indecomposable_classes(o.A3RAD2, 3)
    assert dimvecs(U3) == sorted(tuple(d.values()) for d, _ in brute)
    assert sorted(U3.names) == ["P1", "P2", "S1", "S2", "S3"]
    assert U3.checks["complete"] and U3.checks["tau_closed"]


def test_kx2_matches_brute_force(UK):
    assert len(UK.indecs) == len(o.indecomposable_classes(o.KX2, 3)) == 2


def test_a2_matches_brute_force(U2):
    assert dimvecs(U2) == sorted(tuple(d.values()) for d, _ in o.indecomposable_classes(o.A2, 3))


def test_a4_has_ten_indecomposables():
    q = QuiverPresentation(list("1234"), [Arrow(n, s, t) for n, s, t in
                                           [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")]])
    assert len(enumerate_indecomposables(from_quiver(q)).indecs) == 10


def test_auslander_algebra_of_a2(B2):
    U = enumerate_indecomposables(B2.gamma)
    assert len(U.indecs) == 5 and U.checks["complete"]
    assert simple_count(B2.gamma) == 3


def test_almost_split_sequence(A3):
    S1 = md.simple(A3, 0)
    tZ, E, f, g = almost_split_sequence(S1)
    assert md.is_isomorphic(tZ, md.simple(A3, 1))
    assert md.is_isomorphic(E, md.projective(A3, 0))
    assert (f @ g).is_zero() and f.rank() == tZ.dim and g.rank() == S1.dim


def test_bound_exceeded_is_reported():
    q = QuiverPresentation(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "1", "2")])
    with pytest.raises(KnittingBoundError):
        enumerate_indecomposables(from_quiver(q), bound=6)


def test_user_supplied_universe(A3):
    mods = [md.simple(A3, i) for i in range(3)]
    U = universe_from_list(A3, mods, ["S1", "S2", "S3"])
    assert U.provenance == "user_supplied"
    with pytest.raises(ValueError):
        universe_from_list(A3, [mods[0], mods[0]])
