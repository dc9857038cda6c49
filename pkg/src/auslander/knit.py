"""Enumerating indecomposables of a representation-finite algebra by knitting.

Starting from the indecomposable projectives and injectives we close under
``tau``, ``tau^-``, radicals of projectives, injectives modulo socle and the
middle terms of almost split sequences.  For a representation-finite algebra
this reaches every indecomposable (each component of the AR quiver contains a
projective).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra
from .linalg import Mat, Subspace
from . import modules as md
from .modules import Module


class KnittingBoundError(RuntimeError):
    pass


@dataclass
class IndecUniverse:
    algebra: Algebra
    indecs: list
    names: list
    provenance: str = "knitted"
    checks: dict = field(default_factory=dict)

    def index(self, X: Module) -> int | None:
        return md.index_in(X, self.indecs)

    def name_of(self, X: Module) -> str | None:
        i = self.index(X)
        return None if i is None else self.names[i]

    def by_name(self, name: str) -> Module:
        return self.indecs[self.names.index(name)]


def almost_split_sequence(Z: Module):
    """``0 -> tau Z -> E -> Z -> 0`` for a non-projective indecomposable ``Z``.

    Returns ``(tauZ, E, f: tauZ -> E, g: E -> Z)``.  The extension class spans the
    socle of ``Ext^1(Z, tau Z)`` under the radical of ``End(Z)``.
    """
    if md.is_projective(Z):
        raise ValueError("no almost split sequence ends in a projective")
    tZ = md.ar_translate(Z)
    P, pi, K, inc = md.projective_resolution(Z, 1)[0]
    amb = md.hom_space(K, tZ)
    sub = md.QuotientSpace(amb, [inc @ g for g in md.hom_space(P, tZ).basis])
    if sub.dim == 0:
        raise ValueError("Ext^1(Z, tau Z) vanishes; input is not an indecomposable non-projective")
    E_alg, ehs = md.endomorphism_algebra(Z)
    rad = E_alg.radical()
    F = Z.field
    # omega(r) for r in rad End(Z)
    omegas = []
    for v in rad.basis.rows:
        r = ehs.element(v)
        H = md.lift_hom(P, pi @ r, pi, P)
        omegas.append(_restrict(inc, H))
    # xi in quotient with xi o omega(r) = 0 in the quotient for all r
    nq = sub.dim
    cols = []
    for om in omegas:
        block = []
        for rep in sub.representatives:
            block.append(sub.coords(om @ rep))
        cols.append(block)
    if cols:
        rows = [[x for blk in cols for x in blk[k]] for k in range(nq)]
        M = Mat.from_rows(rows, F, len(rows[0]))
        kern = M.left_kernel_basis()
    else:
        kern = Mat.identity(nq, F)
    if kern.nrows == 0:
        raise ValueError("socle of Ext^1(Z, tau Z) is zero")
    coeffs = kern.rows[0]
    xi = Mat.zeros(K.dim, tZ.dim, F)
    for c, rep in zip(coeffs, sub.representatives):
        if c:
            xi = xi + rep.scale(c)
    # pushout of K -> P along xi
    S, incs, projs = md.direct_sum([tZ, P], Z.algebra)
    rel = xi @ incs[0] - inc @ incs[1]
    E, proj = md.cokernel(S, rel)
    f = incs[0] @ proj
    # g: E -> Z induced by (0, pi)
    gS = Mat.vstack([Mat.zeros(tZ.dim, Z.dim, F), pi], F, Z.dim)
    g = proj.solve(gS)
    return tZ, E, f, g


def _restrict(inc: Mat, H: Mat) -> Mat:
    """The restriction of ``H: P -> P`` to the submodule with inclusion ``inc``."""
    out = inc.solve_left(inc @ H)
    if out is None:
        raise ValueError("map does not preserve the submodule")
    return out


def _named(A: Algebra, X: Module, known: dict) -> str:
    for nm, M in known.items():
        if md.is_isomorphic(X, M):
            return nm
    return None


def enumerate_indecomposables(A: Algebra, bound: int | None = None) -> IndecUniverse:
    bound = 10 * A.dim if bound is None else bound
    n = len(A.primitive_idempotents())
    labels = A.idempotent_labels
    reps = _iso_class_reps(A)
    seeds = []
    known = {}
    for i in reps:
        for kind, fn in (("S", md.simple), ("P", md.projective), ("I", md.injective)):
            M = fn(A, i)
            lab = labels[i] if len(labels[i]) == 1 or labels[i].isdigit() else f"({labels[i]})"
            known.setdefault(f"{kind}{lab}", M)
    for i in reps:
        seeds.append(md.projective(A, i))
    for i in reps:
        seeds.append(md.injective(A, i))
    found: list[Module] = []
    queue = list(seeds)
    checks = {"tau_closed": True, "middle_terms": 0}

    def push(M):
        if M.dim:
            for S in md.decompose(M):
                queue.append(S)

    while queue:
        X = queue.pop(0)
        if md.index_in(X, found) is not None:
            continue
        found.append(X)
        if len(found) > bound:
            raise KnittingBoundError(
                f"more than {bound} indecomposables found; the algebra may be representation-infinite. "
                "Supply the universe explicitly.")
        proj = md.is_projective(X)
        inj = md.is_injective(X)
        if proj:
            push(md.radical_of(X)[0])
        else:
            tX, E, _, _ = almost_split_sequence(X)
            checks["middle_terms"] += 1
            push(tX)
            push(E)
        if inj:
            soc = md.socle(X)[1]
            push(md.quotient(X, soc)[0])
        else:
            push(md.ar_translate_inverse(X))
    # completeness tests
    tests = [md.regular_module(A), md.dual(md.regular_module(A.opposite()))]
    for i in reps:
        P = md.projective(A, i)
        I = md.injective(A, i)
        tests += [md.radical_of(P)[0], md.quotient(P, md.socle(P)[1])[0],
                  md.radical_of(I)[0], md.quotient(I, md.socle(I)[1])[0], md.simple(A, i)]
    complete = all(md.index_in(S, found) is not None for T in tests if T.dim for S in md.decompose(T))
    for X in found:
        if not md.is_projective(X) and md.index_in(md.ar_translate(X), found) is None:
            checks["tau_closed"] = False
        if not md.is_injective(X) and md.index_in(md.ar_translate_inverse(X), found) is None:
            checks["tau_closed"] = False
    checks["complete"] = complete
    found.sort(key=lambda M: (M.dim, tuple(M.dimension_vector()), M.invariant_key()))
    names = []
    for X in found:
        nm = _named(A, X, known)
        if nm is None:
            nm = "M" + "".join(str(d) for d in X.dimension_vector())
            while nm in names:
                nm += "'"
        names.append(nm)
    for X, nm in zip(found, names):
        X.name = nm
    return IndecUniverse(A, found, names, "knitted", checks)


def _iso_class_reps(A: Algebra) -> list[int]:
    """One primitive idempotent per isomorphism class of indecomposable projectives."""
    idems = A.primitive_idempotents()
    reps = []
    for i in range(len(idems)):
        if not any(md.is_isomorphic(md.projective(A, i), md.projective(A, j)) for j in reps):
            reps.append(i)
    return reps


def simple_count(A: Algebra) -> int:
    """Number of isomorphism classes of simple modules."""
    if A.dim == 0:
        return 0
    return len(_iso_class_reps(A))


def universe_from_list(A: Algebra, mods, names=None) -> IndecUniverse:
    mods = list(mods)
    for M in mods:
        if not md.is_indecomposable(M):
            raise ValueError("universe entries must be indecomposable")
    for i in range(len(mods)):
        for j in range(i):
            if md.is_isomorphic(mods[i], mods[j]):
                raise ValueError("universe entries must be pairwise non-isomorphic")
    names = list(names) if names is not None else [f"M{i}" for i in range(len(mods))]
    return IndecUniverse(A, mods, names, "user_supplied", {})
