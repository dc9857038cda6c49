"""The recollement ``(mod G/GeG, mod G, mod eGe)`` of an idempotent ``e``.

Six functors, with ``C = eGe`` and ``Q = G/GeG``::

    q(X)        = X e                        mod G -> mod C
    q_lambda(Y) = Y (x)_C eG                  mod C -> mod G
    q_rho(Y)    = Hom_C(Ge, Y)                mod C -> mod G
    e(Z)        = Z inflated along G -> Q     mod Q -> mod G
    e_lambda(X) = X / X.GeG                   mod G -> mod Q
    e_rho(X)    = {x : x.GeG = 0}             mod G -> mod Q

with adjoint pairs ``e_lambda -| e -| e_rho`` and ``q_lambda -| q -| q_rho``.
Units and counits are explicit matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import Algebra, AlgebraError, corner_algebra, corner_space, ideal_generated, quotient_algebra
from .linalg import Mat, Subspace, kron
from . import modules as md
from .modules import Module
from .report import Report


class IdempotentContext:
    def __init__(self, gamma: Algebra, e):
        G = gamma
        e = tuple(G.field(x) for x in e)
        if G.mul(e, e) != e:
            raise AlgebraError("e is not idempotent")
        self.gamma = G
        self.e = e
        self.corner, self.corner_embed = corner_algebra(G, e)
        self.ideal = ideal_generated(G, e)
        self.quotient, self.quotient_lift, _ = quotient_algebra(G, self.ideal)
        d = G.dim
        self.eG = Subspace.of_vectors([G.mul(e, G.basis_vector(i)) for i in range(d)] or [G.zero()], G.field, d)
        self.Ge = Subspace.of_vectors([G.mul(G.basis_vector(i), e) for i in range(d)] or [G.zero()], G.field, d)

    def check(self) -> bool:
        G = self.gamma
        C = self.corner
        emb = self.corner_embed
        space = corner_space(G, self.e)
        for i in range(C.dim):
            for j in range(C.dim):
                lhs = G.mul(emb.rows[i], emb.rows[j])
                rhs = (Mat.from_rows([C.mult[i][j]], G.field, C.dim) @ emb).rows[0]
                if tuple(lhs) != tuple(rhs) or not space.contains(lhs):
                    return False
        Q = self.quotient
        lift = self.quotient_lift
        for i in range(Q.dim):
            for j in range(Q.dim):
                prod = G.mul(lift.rows[i], lift.rows[j])
                if self.ideal.quotient_coords(prod) != list(Q.mult[i][j]):
                    return False
        for a in self.ideal.basis.rows:
            for i in range(G.dim):
                b = G.basis_vector(i)
                if not self.ideal.contains(G.mul(a, b)) or not self.ideal.contains(G.mul(b, a)):
                    return False
        return True


@dataclass
class Functor:
    name: str
    obj: Callable
    mor: Callable


@dataclass
class FourTermSequence:
    """``0 -> M0 -> M1 -> M2 -> M3 -> 0``."""
    mods: list
    maps: list
    labels: list = field(default_factory=list)

    def exactness(self) -> dict:
        M0, M1, M2, M3 = self.mods
        f1, f2, f3 = self.maps
        out = {}
        out["homs"] = all(md.is_hom(a, b, f) for a, b, f in zip(self.mods, self.mods[1:], self.maps))
        r1, r2, r3 = f1.rank(), f2.rank(), f3.rank()
        out["at_0"] = r1 == M0.dim
        out["at_1"] = (f1 @ f2).is_zero() and r1 == M1.dim - r2
        out["at_2"] = (f2 @ f3).is_zero() and r2 == M2.dim - r3
        out["at_3"] = r3 == M3.dim
        return out

    def is_exact(self) -> bool:
        return all(self.exactness().values())

    def dims(self) -> list:
        return [M.dim for M in self.mods]


class Recollement:
    def __init__(self, gamma: Algebra, e):
        self.ctx = IdempotentContext(gamma, e)
        self._cache = {}
        c = self.ctx
        G = c.gamma
        F = G.field
        # eG as a Gamma-module with left C-action, Ge as a C-module with left Gamma-action
        eg = c.eG.basis
        self._eG_right = [Mat.from_rows([c.eG.coords(G.mul(g, G.basis_vector(i))) for g in eg.rows], F, eg.nrows)
                          for i in range(G.dim)]
        self._eG_left = [Mat.from_rows([c.eG.coords(G.mul(ct, g)) for g in eg.rows], F, eg.nrows)
                         for ct in c.corner_embed.rows]
        ge = c.Ge.basis
        C = c.corner
        self.Ge_module = Module(C, ge.nrows,
                                [Mat.from_rows([c.Ge.coords(G.mul(g, ct)) for g in ge.rows], F, ge.nrows)
                                 for ct in c.corner_embed.rows])
        self._Ge_left = [Mat.from_rows([c.Ge.coords(G.mul(G.basis_vector(i), g)) for g in ge.rows], F, ge.nrows)
                         for i in range(G.dim)]
        self._e_in_eG = c.eG.coords(c.e) if c.eG.dim else []
        self._e_in_Ge = c.Ge.coords(c.e) if c.Ge.dim else []
        self._pi = [c.ideal.quotient_coords(G.basis_vector(i)) for i in range(G.dim)]
        self.q = Functor("q", self._q_obj, self._q_mor)
        self.q_lambda = Functor("q_lambda", self._ql_obj, self._ql_mor)
        self.q_rho = Functor("q_rho", self._qr_obj, self._qr_mor)
        self.e_incl = Functor("e", self._e_obj, self._e_mor)
        self.e_lambda = Functor("e_lambda", self._el_obj, self._el_mor)
        self.e_rho = Functor("e_rho", self._er_obj, self._er_mor)

    # caching ---------------------------------------------------------------
    def _memo(self, tag, M, build):
        key = (tag, id(M))
        hit = self._cache.get(key)
        if hit is not None and hit[0] is M:
            return hit[1]
        val = build()
        self._cache[key] = (M, val)
        return val

    # q ---------------------------------------------------------------------
    def _q_data(self, X: Module):
        def build():
            c = self.ctx
            F = X.field
            rows = X.act(c.e).row_basis()
            space = Subspace(rows) if rows.nrows else Subspace(Mat.zeros(0, X.dim, F))
            k = space.dim
            acts = []
            for ct in c.corner_embed.rows:
                A = X.act(ct)
                acts.append(Mat.from_rows([space.coords((Mat._raw([r], F, X.dim) @ A).rows[0])
                                           for r in space.basis.rows], F, k))
            return Module(c.corner, k, acts), space
        return self._memo("q", X, build)

    def _q_obj(self, X):
        return self._q_data(X)[0]

    def _q_mor(self, X, Y, Fm):
        qX, sx = self._q_data(X)
        qY, sy = self._q_data(Y)
        img = sx.basis @ Fm
        return Mat.from_rows([sy.coords(r) for r in img.rows], X.field, qY.dim) if img.nrows else \
            Mat.zeros(0, qY.dim, X.field)

    # q_lambda --------------------------------------------------------------
    def _ql_data(self, Y: Module):
        def build():
            c = self.ctx
            eG = Module(c.gamma, c.eG.dim, self._eG_right)
            Qm, proj = md.tensor_over(Y, self._eG_left, eG)
            return Qm, proj, eG
        return self._memo("ql", Y, build)

    def _ql_obj(self, Y):
        return self._ql_data(Y)[0]

    def _ql_mor(self, Y, Y2, Fm):
        _, p1, _ = self._ql_data(Y)
        Q2, p2, _ = self._ql_data(Y2)
        m = self.ctx.eG.dim
        lifted = kron(Fm, Mat.identity(m, Fm.field)) @ p2
        return _descend(p1, lifted, Q2.dim, Fm.field)

    # q_rho -----------------------------------------------------------------
    def _qr_data(self, Y: Module):
        def build():
            c = self.ctx
            G = c.gamma
            F = G.field
            hs = md.hom_space(self.Ge_module, Y)
            acts = []
            for i in range(G.dim):
                L = self._Ge_left[i]
                acts.append(Mat.from_rows([hs.coords(L @ phi) for phi in hs.basis], F, hs.dim))
            return Module(G, hs.dim, acts), hs
        return self._memo("qr", Y, build)

    def _qr_obj(self, Y):
        return self._qr_data(Y)[0]

    def _qr_mor(self, Y, Y2, Fm):
        _, h1 = self._qr_data(Y)
        M2, h2 = self._qr_data(Y2)
        rows = [h2.coords(phi @ Fm) for phi in h1.basis]
        return Mat.from_rows(rows, Fm.field, M2.dim) if rows else Mat.zeros(0, M2.dim, Fm.field)

    # e-side ------------------------------------------------------------------
    def _e_obj(self, Z: Module):
        def build():
            G = self.ctx.gamma
            return Module(G, Z.dim, [Z.act(self._pi[i]) for i in range(G.dim)])
        return self._memo("e", Z, build)

    def _e_mor(self, Z, Z2, Fm):
        return Fm

    def _to_quotient(self, M: Module) -> Module:
        Q = self.ctx.quotient
        return Module(Q, M.dim, [M.act(r) for r in self.ctx.quotient_lift.rows])

    def _el_data(self, X: Module):
        def build():
            vecs = []
            for a in self.ctx.ideal.basis.rows:
                vecs.extend(X.act(a).rows)
            M, proj = md.quotient(X, vecs if vecs else [[0] * X.dim])
            return self._to_quotient(M), proj
        return self._memo("el", X, build)

    def _el_obj(self, X):
        return self._el_data(X)[0]

    def _el_mor(self, X, Y, Fm):
        _, p1 = self._el_data(X)
        Z2, p2 = self._el_data(Y)
        return _descend(p1, Fm @ p2, Z2.dim, Fm.field)

    def _er_data(self, X: Module):
        def build():
            F = X.field
            rows = self.ctx.ideal.basis.rows
            if rows and X.dim:
                big = Mat.hstack([X.act(a) for a in rows], F, X.dim)
                K = big.left_kernel_basis()
            else:
                K = Mat.identity(X.dim, F)
            M, inc = md.submodule(X, K)
            return self._to_quotient(M), inc
        return self._memo("er", X, build)

    def _er_obj(self, X):
        return self._er_data(X)[0]

    def _er_mor(self, X, Y, Fm):
        _, i1 = self._er_data(X)
        Z2, i2 = self._er_data(Y)
        if i1.nrows == 0:
            return Mat.zeros(0, Z2.dim, Fm.field)
        sol = i2.solve_left(i1 @ Fm)
        return sol

    # units and counits ----------------------------------------------------------
    def unit_ql_q(self, Y: Module) -> Mat:
        """``Y -> q q_lambda Y``, ``y -> y (x) e``."""
        F = Y.field
        QY, proj, _ = self._ql_data(Y)
        qQ, space = self._q_data(QY)
        m = self.ctx.eG.dim
        rows = []
        for i in range(Y.dim):
            v = [0] * (Y.dim * m)
            v[i * m:(i + 1) * m] = self._e_in_eG
            img = (Mat._raw([v], F, Y.dim * m) @ proj).rows[0]
            rows.append(space.coords(img))
        return Mat.from_rows(rows, F, qQ.dim) if rows else Mat.zeros(0, qQ.dim, F)

    def counit_ql_q(self, X: Module) -> Mat:
        """``q_lambda q X -> X``, ``x (x) g -> x g``."""
        F = X.field
        qX, space = self._q_data(X)
        QY, proj, _ = self._ql_data(qX)
        egb = self.ctx.eG.basis
        rows = []
        for x in space.basis.rows:
            xm = Mat._raw([x], F, X.dim)
            for g in egb.rows:
                rows.append((xm @ X.act(g)).rows[0])
        W = Mat.from_rows(rows, F, X.dim) if rows else Mat.zeros(0, X.dim, F)
        return _descend(proj, W, X.dim, F)

    def unit_q_qr(self, X: Module) -> Mat:
        """``X -> q_rho q X``, ``x -> (g -> x g)``."""
        F = X.field
        qX, space = self._q_data(X)
        M, hs = self._qr_data(qX)
        geb = self.ctx.Ge.basis
        acts = [X.act(g) for g in geb.rows]
        rows = []
        for i in range(X.dim):
            phi_rows = [space.coords(A.rows[i]) for A in acts]
            phi = Mat.from_rows(phi_rows, F, qX.dim) if phi_rows else Mat.zeros(0, qX.dim, F)
            rows.append(hs.coords(phi))
        return Mat.from_rows(rows, F, M.dim) if rows else Mat.zeros(0, M.dim, F)

    def counit_q_qr(self, Y: Module) -> Mat:
        """``q q_rho Y -> Y``, ``phi -> phi(e)``."""
        F = Y.field
        M, hs = self._qr_data(Y)
        qM, space = self._q_data(M)
        ev = Mat._raw([self._e_in_Ge], F, self.ctx.Ge.dim) if self.ctx.Ge.dim else None
        rows = []
        for r in space.basis.rows:
            phi = hs.element(r)
            rows.append((ev @ phi).rows[0] if ev is not None else [0] * Y.dim)
        return Mat.from_rows(rows, F, Y.dim) if rows else Mat.zeros(0, Y.dim, F)

    def unit_el_e(self, X: Module) -> Mat:
        """``X -> e e_lambda X``, the projection."""
        return self._el_data(X)[1]

    def counit_el_e(self, Z: Module) -> Mat:
        """``e_lambda e Z -> Z``."""
        eZ = self._e_obj(Z)
        _, proj = self._el_data(eZ)
        return _descend(proj, md.identity_map(Z), Z.dim, Z.field)

    def unit_e_er(self, Z: Module) -> Mat:
        """``Z -> e_rho e Z``."""
        eZ = self._e_obj(Z)
        _, inc = self._er_data(eZ)
        return inc.solve_left(md.identity_map(Z)) if Z.dim else Mat.zeros(0, inc.nrows, Z.field)

    def counit_e_er(self, X: Module) -> Mat:
        """``e e_rho X -> X``, the inclusion."""
        return self._er_data(X)[1]

    def adjunctions(self) -> dict:
        """``name -> (L, R, unit, counit, left category, right category)``."""
        return {
            "e_lambda|e": (self.e_lambda, self.e_incl, self.unit_el_e, self.counit_el_e, "gamma", "quotient"),
            "e|e_rho": (self.e_incl, self.e_rho, self.unit_e_er, self.counit_e_er, "quotient", "gamma"),
            "q_lambda|q": (self.q_lambda, self.q, self.unit_ql_q, self.counit_ql_q, "corner", "gamma"),
            "q|q_rho": (self.q, self.q_rho, self.unit_q_qr, self.counit_q_qr, "gamma", "corner"),
        }

    # defining sequences -------------------------------------------------------------
    def right_defining_sequence(self, X: Module) -> FourTermSequence:
        """``0 -> e e_rho X -> X -> q_rho q X -> Y -> 0``."""
        Z = self._er_obj(X)
        eZ = self._e_obj(Z)
        f1 = self.counit_e_er(X)
        f2 = self.unit_q_qr(X)
        M2 = self._qr_obj(self._q_obj(X))
        M3, f3 = md.cokernel(M2, f2)
        return FourTermSequence([eZ, X, M2, M3], [f1, f2, f3], ["e e_rho X", "X", "q_rho q X", "coker"])

    def left_defining_sequence(self, X: Module) -> FourTermSequence:
        """``0 -> K -> q_lambda q X -> X -> e e_lambda X -> 0``."""
        qX = self._q_obj(X)
        M1 = self._ql_obj(qX)
        f2 = self.counit_ql_q(X)
        M0, f1 = md.kernel(M1, f2)
        Z = self._el_obj(X)
        M3 = self._e_obj(Z)
        f3 = self.unit_el_e(X)
        return FourTermSequence([M0, M1, X, M3], [f1, f2, f3], ["ker", "q_lambda q X", "X", "e e_lambda X"])

    def annihilated_by_e(self, M: Module) -> bool:
        return M.act(self.ctx.e).is_zero()


def _descend(proj: Mat, W: Mat, ncols: int, F) -> Mat:
    """``H`` with ``proj @ H == W`` for a surjective ``proj``; raises if ill defined."""
    if proj.ncols == 0:
        if not W.is_zero():
            raise ValueError("map does not descend to the quotient")
        return Mat.zeros(0, ncols, F)
    H = proj.solve(W)
    if H is None:
        raise ValueError("map does not descend to the quotient")
    return H


def build_recollement(gamma: Algebra, e) -> Recollement:
    return Recollement(gamma, e)


# verification --------------------------------------------------------------------------

def _hom_pairs(mods):
    for X in mods:
        for Y in mods:
            for Fm in md.hom_space(X, Y).basis:
                yield X, Y, Fm


def verify_adjunction(R: Recollement, which: str, left_set: Sequence[Module], right_set: Sequence[Module],
                      report: Report | None = None) -> Report:
    """Hom-dimension equality, triangle identities and naturality of unit and counit."""
    rep = report or Report("adjunction")
    L, Rf, unit, counit, _, _ = R.adjunctions()[which]
    dims = []
    ok = True
    for c in left_set:
        Lc = L.obj(c)
        for d in right_set:
            a = md.hom_dim(Lc, d)
            b = md.hom_dim(c, Rf.obj(d))
            dims.append([c.name or "?", d.name or "?", a, b])
            ok &= a == b
    rep.add(f"{which}: dim Hom(L c, d) = dim Hom(c, R d)", ok, {"pairs": len(dims)})
    rep.tables[f"adjunction {which}"] = {"header": ["c", "d", "Hom(Lc,d)", "Hom(c,Rd)"], "rows": dims}
    tri = True
    homs = True
    for c in left_set:
        eta = unit(c)
        Lc = L.obj(c)
        RLc = Rf.obj(Lc)
        homs &= md.is_hom(c, RLc, eta)
        # counit at L c composed with L(eta) is the identity of L c
        lhs = L.mor(c, RLc, eta) @ counit(Lc)
        tri &= lhs == md.identity_map(Lc)
    for d in right_set:
        eps = counit(d)
        Rd = Rf.obj(d)
        LRd = L.obj(Rd)
        homs &= md.is_hom(LRd, d, eps)
        lhs = unit(Rd) @ Rf.mor(LRd, d, eps)
        tri &= lhs == md.identity_map(Rd)
    rep.add(f"{which}: unit and counit are homomorphisms", homs)
    rep.add(f"{which}: triangle identities", tri)
    nat = True
    count = 0
    for c, c2, Fm in _hom_pairs(left_set):
        RLF = Rf.mor(L.obj(c), L.obj(c2), L.mor(c, c2, Fm))
        nat &= Fm @ unit(c2) == unit(c) @ RLF
        count += 1
    for d, d2, Fm in _hom_pairs(right_set):
        LRF = L.mor(Rf.obj(d), Rf.obj(d2), Rf.mor(d, d2, Fm))
        nat &= LRF @ counit(d2) == counit(d) @ Fm
        count += 1
    rep.add(f"{which}: naturality on generating morphisms", nat, {"morphisms": count})
    return rep


def verify_functoriality(R: Recollement, testsets: dict, report: Report | None = None) -> Report:
    rep = report or Report("functoriality")
    domains = {"q": "gamma", "q_lambda": "corner", "q_rho": "corner", "e": "quotient",
               "e_lambda": "gamma", "e_rho": "gamma"}
    fmap = {"q": R.q, "q_lambda": R.q_lambda, "q_rho": R.q_rho, "e": R.e_incl,
            "e_lambda": R.e_lambda, "e_rho": R.e_rho}
    for nm, dom in domains.items():
        Fn = fmap[nm]
        mods = testsets[dom]
        ok = True
        for X in mods:
            FX = Fn.obj(X)
            ok &= Fn.mor(X, X, md.identity_map(X)) == md.identity_map(FX)
        for X in mods:
            for Y in mods:
                hxy = md.hom_space(X, Y).basis
                if not hxy:
                    continue
                for Z in mods:
                    for f in hxy:
                        for g in md.hom_space(Y, Z).basis:
                            lhs = Fn.mor(X, Z, f @ g)
                            rhs = Fn.mor(X, Y, f) @ Fn.mor(Y, Z, g)
                            ok &= lhs == rhs
                for f in hxy:
                    ok &= md.is_hom(Fn.obj(X), Fn.obj(Y), Fn.mor(X, Y, f))
        rep.add(f"functor {nm} preserves identities and composition", ok)
    return rep


def verify_axioms(R: Recollement, testsets: dict, report: Report | None = None) -> Report:
    """Full faithfulness via unit/counit isomorphisms and ``Im e = Ker q``."""
    rep = report or Report("axioms")
    C_set, G_set, Q_set = testsets["corner"], testsets["gamma"], testsets["quotient"]
    rep.add("R2: q q_lambda = id (unit invertible)", all(R.unit_ql_q(Y).is_invertible() for Y in C_set))
    rep.add("R2: q q_rho = id (counit invertible)", all(R.counit_q_qr(Y).is_invertible() for Y in C_set))
    rep.add("R2: e_lambda e = id (counit invertible)", all(R.counit_el_e(Z).is_invertible() for Z in Q_set))
    rep.add("R2: e_rho e = id (unit invertible)", all(R.unit_e_er(Z).is_invertible() for Z in Q_set))
    rows = []
    ok = True
    for X in G_set:
        killed = R._q_obj(X).dim == 0
        in_image = R.unit_el_e(X).is_invertible()
        rows.append([X.name or "?", X.act(R.ctx.e).rank(), killed, in_image])
        ok &= killed == in_image
    rep.add("R3: X e = 0 iff X = e e_lambda X", ok)
    rep.tables["kernel of q"] = {"header": ["X", "rank X.e", "qX = 0", "X in Im e"], "rows": rows}
    rep.add("R3: q e = 0", all(R._q_obj(R._e_obj(Z)).dim == 0 for Z in Q_set))
    return rep


def verify_serre_quotient(R: Recollement, testsets: dict, report: Report | None = None) -> Report:
    from .knit import simple_count
    rep = report or Report("serre quotient")
    c = R.ctx
    ng, nq, nc = simple_count(c.gamma), simple_count(c.quotient), simple_count(c.corner)
    rep.add("simples(Gamma) = simples(Gamma/GeG) + simples(eGe)", ng == nq + nc,
            {"gamma": ng, "quotient": nq, "corner": nc})
    G_set = testsets["gamma"]
    exact = True
    for X, Y, Fm in _hom_pairs(G_set):
        qF = R.q.mor(X, Y, Fm)
        K, _ = md.kernel(X, Fm)
        Cc, _ = md.cokernel(Y, Fm)
        qX, qY = R.q.obj(X), R.q.obj(Y)
        r = qF.rank()
        exact &= R.q.obj(K).dim == qX.dim - r and R.q.obj(Cc).dim == qY.dim - r
    rep.add("q is exact on kernels and cokernels of generating maps", exact)
    rep.add("q q_rho = id on corner modules",
            all(R.counit_q_qr(Y).is_invertible() for Y in testsets["corner"]))
    killed = [X for X in G_set if R.q.obj(X).dim == 0]
    images = [R.e_incl.obj(Z) for Z in testsets["quotient"]]
    match = len(killed) == len(images) and all(md.index_in(X, images) is not None for X in killed)
    rep.add("Ker q = Im e on indecomposables", match, {"killed": [X.name for X in killed]})
    return rep


def verify_defining_sequences(R: Recollement, mods: Sequence[Module], report: Report | None = None) -> Report:
    rep = report or Report("defining sequences")
    rows = []
    ok_r = ok_l = True
    for X in mods:
        s = R.right_defining_sequence(X)
        ex = s.is_exact()
        outer = R.annihilated_by_e(s.mods[0]) and R.annihilated_by_e(s.mods[3])
        ok_r &= ex and outer
        t = R.left_defining_sequence(X)
        ex2 = t.is_exact()
        outer2 = R.annihilated_by_e(t.mods[0]) and R.annihilated_by_e(t.mods[3])
        ok_l &= ex2 and outer2
        rows.append([X.name or "?", "-".join(map(str, s.dims())), "-".join(map(str, t.dims()))])
    rep.add("right-defining sequences exact with outer terms killed by e", ok_r)
    rep.add("left-defining sequences exact with outer terms killed by e", ok_l)
    rep.tables["defining sequences"] = {"header": ["X", "right dims", "left dims"], "rows": rows}
    rep.notes.append("left-defining sequences use the left adjoints q_lambda and e_lambda; "
                     "their uniqueness is the dual of the right-defining statement")
    return rep


def default_testsets(R: Recollement) -> dict:
    from .knit import enumerate_indecomposables
    c = R.ctx
    out = {}
    for key, alg in (("gamma", c.gamma), ("corner", c.corner), ("quotient", c.quotient)):
        out[key] = enumerate_indecomposables(alg).indecs if alg.dim else []
    return out


def verify_recollement(R: Recollement, testsets: dict | None = None) -> Report:
    testsets = testsets or default_testsets(R)
    rep = Report("recollement-verify")
    rep.add("idempotent context (corner and quotient products)", R.ctx.check())
    sets = {"gamma": testsets["gamma"], "corner": testsets["corner"], "quotient": testsets["quotient"]}
    verify_functoriality(R, sets, rep)
    for which, (_, _, _, _, lcat, rcat) in R.adjunctions().items():
        verify_adjunction(R, which, sets[lcat], sets[rcat], rep)
    verify_axioms(R, sets, rep)
    verify_serre_quotient(R, sets, rep)
    verify_defining_sequences(R, sets["gamma"], rep)
    rep.tables["sizes"] = {"header": ["algebra", "dim", "indecomposables"],
                           "rows": [["Gamma", R.ctx.gamma.dim, len(sets["gamma"])],
                                    ["eGe", R.ctx.corner.dim, len(sets["corner"])],
                                    ["G/GeG", R.ctx.quotient.dim, len(sets["quotient"])]]}
    return rep
