"""Auslander-Bridger sequences in mod End(N) and their comparison with the recollement.

The subcategory ``B = add(N)`` must contain the projective and the injective
Lambda-modules.  With ``e`` the idempotent of the projective generators, the
recollement of ``e`` is ``(mod B-underline, mod B, mod Lambda)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .approx import AddSubcategory, BObject, contains
from .linalg import Mat
from . import modules as md
from .modules import Module
from .recollement import FourTermSequence, Recollement, _descend
from .report import Report


class ABContextError(ValueError):
    pass


class ABContext:
    def __init__(self, B: AddSubcategory):
        L = B.base
        self.B = B
        self.base = L
        n = len(L.primitive_idempotents())
        missing = []
        for i in range(n):
            for kind, M in (("projective", md.projective(L, i)), ("injective", md.injective(L, i))):
                if not contains(B, M)[0]:
                    missing.append(f"{kind} {L.idempotent_labels[i]}")
        if missing:
            raise ABContextError("subcategory must contain all projectives and injectives; missing " +
                                 ", ".join(missing))
        self.proj_block = [i for i, G in enumerate(B.generators) if md.is_projective(G)]
        self.e = B.idempotent([B.names[i] for i in self.proj_block])
        self.R = Recollement(B.gamma, self.e)
        self.gamma = B.gamma
        self.gamma_op = B.gamma.opposite()
        self._P, self._P_incs, _ = md.direct_sum([B.generators[i] for i in self.proj_block], L)
        self._left = None

    # corner modules back to Lambda ---------------------------------------------
    def _corner_left_mats(self):
        if self._left is None:
            B = self.B
            F = self.base.field
            J = Mat.vstack([B.incs[i] for i in self.proj_block], F, B.N.dim)
            Pr = Mat.hstack([B.projs[i] for i in self.proj_block], F, B.N.dim)
            mats = []
            for ct in self.R.ctx.corner_embed.rows:
                mats.append(J @ B.endomorphism_of(ct) @ Pr)
            self._left = mats
        return self._left

    def realize(self, Y: Module) -> Module:
        """The Lambda-module ``Y (x)_{eGe} P`` for a corner module ``Y``."""
        T, _ = md.tensor_over(Y, self._corner_left_mats(), self._P)
        return T


@dataclass
class ABData:
    X: Module
    b: list                      # b0, b1, b2, b3 as BObjects
    maps31: list                 # alpha: b0 -> b1, beta: b1 -> b2, gamma: b2 -> b3
    coyo: list                   # co-Yoneda modules of b0..b3 (over Gamma^op)
    maps32: list                 # h, g, f
    stars: list                  # duals of the co-Yoneda modules (Gamma-modules)
    maps33: list                 # f*, g*, h*
    X_star: Module
    X_star2: Module
    epsilon: Mat
    ext1: Module                 # Ker g* / Im f*
    ext2: Module                 # Ker h* / Im g*
    trX: Module                  # Cok f
    sequence: FourTermSequence
    checks: dict = field(default_factory=dict)


def _gamma_to_lambda(B: AddSubcategory, src_idx, dst_idx, gmap: Mat) -> Mat:
    """The Lambda-map ``b_src -> b_dst`` whose Yoneda image is ``gmap`` on ``sum e_j Gamma``."""
    G = B.gamma
    F = G.field
    src_mods = [md.projective(G, j) for j in src_idx]
    dst_mods = [md.projective(G, i) for i in dst_idx]
    bs = B.bobject(src_idx)
    bd = B.bobject(dst_idx)
    out = Mat.zeros(bs.module.dim, bd.module.dim, F)
    so = 0
    for s, (j, Pj) in enumerate(zip(src_idx, src_mods)):
        idem = G.primitive_idempotents()[j]
        ecoords = Pj.embedding.solve_left(Mat.from_rows([idem], F, G.dim)).rows[0]
        img = (Mat._raw([ecoords], F, Pj.dim) @ gmap.submatrix(rows=range(so, so + Pj.dim))).rows[0]
        to = 0
        for t, (i, Pi) in enumerate(zip(dst_idx, dst_mods)):
            comp = img[to:to + Pi.dim]
            gel = (Mat._raw([comp], F, Pi.dim) @ Pi.embedding).rows[0]
            lam = Mat.zeros(B.generators[j].dim, B.generators[i].dim, F)
            for c, (jj, ii, f) in zip(gel, B.basis_info):
                if c:
                    if (jj, ii) != (j, i):
                        raise ValueError("Gamma element outside the expected block")
                    lam = lam + f.scale(c)
            out = out + bs.projs[s] @ lam @ bd.incs[t]
            to += Pi.dim
        so += Pj.dim
    return out


def evaluation_map(X: Module) -> tuple[Module, Module, Mat]:
    """``(X*, X**, epsilon)`` with ``epsilon(x)(phi) = phi(x)``."""
    Xs, hs1 = md.star(X)
    Xss, hs2 = md.star(Xs)
    F = X.field
    rows = []
    for i in range(X.dim):
        ev_rows = [phi.rows[i] for phi in hs1.basis]
        ev = Mat.from_rows(ev_rows, F, X.algebra.dim) if ev_rows else Mat.zeros(0, X.algebra.dim, F)
        c = hs2.coords(ev)
        if c is None:
            raise ValueError("evaluation is not linear over the opposite algebra")
        rows.append(c)
    eps = Mat.from_rows(rows, F, Xss.dim) if rows else Mat.zeros(0, Xss.dim, F)
    return Xs, Xss, eps


def _exact_at(f: Mat, g: Mat, mid_dim: int) -> bool:
    return (f @ g).is_zero() and f.rank() == mid_dim - g.rank()


def _subquotient(S: Module, into: Mat, outof: Mat) -> Module:
    """``Ker(outof) / Im(into)`` for maps ``into: A -> S`` and ``outof: S -> C``."""
    K, inc = md.kernel(S, outof)
    img = [inc.solve_left(Mat._raw([r], S.field, S.dim)).rows[0] for r in into.row_basis().rows]
    Q, _ = md.quotient(K, img if img else [[0] * K.dim])
    return Q


def ab_sequence(ctx: ABContext, X: Module) -> ABData:
    B = ctx.B
    G = ctx.gamma
    F = G.field
    checks = {}
    # minimal projective presentation B(-,b0) -> B(-,b1) -> X -> 0
    c0 = md.projective_cover(X)
    K, inc = md.kernel(c0.module, c0.map)
    c1 = md.projective_cover(K)
    gmap = c1.map @ inc
    idx1, idx0 = c0.summands, c1.summands
    b1, b0 = B.bobject(idx1), B.bobject(idx0)
    alpha = _gamma_to_lambda(B, idx0, idx1, gmap)
    checks["alpha is a homomorphism"] = md.is_hom(b0.module, b1.module, alpha)
    # two minimal left approximations of cokernels
    C1, p1 = md.cokernel(b1.module, alpha)
    b2, l2 = B.minimal_left_approximation(C1)
    beta = p1 @ l2
    C2, p2 = md.cokernel(b2.module, beta)
    b3, l3 = B.minimal_left_approximation(C2)
    gam = p2 @ l3
    checks["(3.1) exact at b1"] = _exact_at(alpha, beta, b1.module.dim)
    checks["(3.1) exact at b2"] = _exact_at(beta, gam, b2.module.dim)
    # co-Yoneda complex over Gamma^op
    H = [B.coyoneda(b.module) for b in (b0, b1, b2, b3)]
    h = B.coyoneda_map(b2.module, b3.module, gam)
    g = B.coyoneda_map(b1.module, b2.module, beta)
    f = B.coyoneda_map(b0.module, b1.module, alpha)
    checks["(3.2) exact at b2"] = _exact_at(h, g, H[2].dim)
    checks["(3.2) exact at b1"] = _exact_at(g, f, H[1].dim)
    trX, _ = md.cokernel(H[0], f)
    checks["Tr X = Cok f"] = md.is_isomorphic(trX, md.transpose(X))
    # duality back to Gamma-modules
    stars = [md.star(M) for M in H]
    fs = md.star_map(H[1], H[0], f, stars[1], stars[0])      # S0 -> S1
    gs = md.star_map(H[2], H[1], g, stars[2], stars[1])      # S1 -> S2
    hs = md.star_map(H[3], H[2], h, stars[3], stars[2])      # S2 -> S3
    S = [s[0] for s in stars]
    cokfs, _ = md.cokernel(S[1], fs)
    checks["Cok f* = X"] = md.is_isomorphic(cokfs, X)
    kerhs, _ = md.kernel(S[2], hs)
    E1 = _subquotient(S[1], fs, gs)
    E2 = _subquotient(S[2], gs, hs)
    Xs, Xss, eps = evaluation_map(X)
    checks["epsilon is a homomorphism"] = md.is_hom(X, Xss, eps)
    checks["Ker h* = X**"] = md.is_isomorphic(kerhs, Xss)
    K1, k1 = md.kernel(X, eps)
    C3, c3 = md.cokernel(Xss, eps)
    seq = FourTermSequence([K1, X, Xss, C3], [k1, eps, c3], ["Ext1(TrX)", "X", "X**", "Ext2(TrX)"])
    checks["AB sequence exact"] = seq.is_exact()
    checks["Ker epsilon = Ker g*/Im f*"] = md.is_isomorphic(K1, E1)
    checks["Cok epsilon = Ker h*/Im g*"] = md.is_isomorphic(C3, E2)
    reg_op = md.regular_module(ctx.gamma_op)
    checks["dim Ker epsilon = dim Ext1(TrX, Gamma^op)"] = K1.dim == md.ext_dim(trX, reg_op, 1)
    checks["dim Cok epsilon = dim Ext2(TrX, Gamma^op)"] = C3.dim == md.ext_dim(trX, reg_op, 2)
    R = ctx.R
    checks["outer terms killed by e"] = R.annihilated_by_e(K1) and R.annihilated_by_e(C3)
    checks["q(epsilon) invertible"] = R.q.mor(X, Xss, eps).is_invertible()
    return ABData(X, [b0, b1, b2, b3], [alpha, beta, gam], H, [h, g, f], S, [fs, gs, hs],
                  Xs, Xss, eps, E1, E2, trX, seq, checks)


@dataclass
class SequenceIso:
    maps: list          # isomorphisms at the four positions (AB -> right-defining)
    squares: bool
    invertible: bool


def compare_with_right_defining(ctx: ABContext, X: Module, data: ABData | None = None) -> tuple[bool, dict]:
    """Construct an isomorphism from the AB sequence to the right-defining sequence."""
    data = data or ab_sequence(ctx, X)
    R = ctx.R
    rd = R.right_defining_sequence(X)
    ab = data.sequence
    F = X.field
    info = {"ab_dims": ab.dims(), "rd_dims": rd.dims(), "rd_exact": rd.is_exact(), "ab_exact": ab.is_exact()}
    Xss = data.X_star2
    eps = data.epsilon
    qeps = R.q.mor(X, Xss, eps)
    qinv = qeps.inverse()
    if qinv is None:
        info["reason"] = "q(epsilon) not invertible"
        return False, info
    qX = R.q.obj(X)
    qXss = R.q.obj(Xss)
    # phi = q_rho(q(eps)^-1) o unit at X**
    phi = R.unit_q_qr(Xss) @ R.q_rho.mor(qXss, qX, qinv)
    eta = R.unit_q_qr(X)
    M2 = rd.mods[2]
    info["phi homomorphism"] = md.is_hom(Xss, M2, phi)
    info["phi invertible"] = phi.is_invertible()
    info["phi o epsilon = unit"] = eps @ phi == eta
    # kernels: both are submodules of X
    K_ab, k_ab = ab.mods[0], ab.maps[0]
    K_rd, k_rd = rd.mods[0], rd.maps[0]
    m0 = k_rd.solve_left(k_ab) if k_ab.nrows else Mat.zeros(0, K_rd.dim, F)
    info["kernel map"] = m0 is not None and m0.is_invertible() and md.is_hom(K_ab, K_rd, m0)
    # cokernels: induced by phi
    c_ab, c_rd = ab.maps[2], rd.maps[2]
    try:
        m3 = _descend(c_ab, phi @ c_rd, rd.mods[3].dim, F)
        info["cokernel map"] = m3.is_invertible() and md.is_hom(ab.mods[3], rd.mods[3], m3)
    except ValueError:
        m3 = None
        info["cokernel map"] = False
    squares = m0 is not None and m3 is not None and \
        k_ab == m0 @ k_rd and eps @ phi == eta and c_ab @ m3 == phi @ c_rd
    info["squares commute"] = squares
    ok = all(v for k, v in info.items() if isinstance(v, bool))
    info["witness"] = SequenceIso([m0, md.identity_map(X), phi, m3], squares, ok)
    return ok, info


def second_syzygy_membership(ctx: ABContext, X: Module) -> tuple[bool, dict]:
    """True iff the unit ``X -> q_rho q X`` is invertible; witness is a copresentation by representables."""
    R = ctx.R
    eta = R.unit_q_qr(X)
    if not eta.is_invertible():
        return False, {"unit invertible": False}
    x = ctx.realize(R.q.obj(X))
    B = ctx.B
    Yx = B.yoneda(x)
    iso = md.find_isomorphism(X, Yx)
    h0 = md.injective_hull(x)
    C, pc = md.cokernel(h0.module, h0.map)
    h1 = md.injective_hull(C)
    d = pc @ h1.map
    u0 = B.yoneda_map(x, h0.module, h0.map)
    u1 = B.yoneda_map(h0.module, h1.module, d)
    exact = u0.rank() == Yx.dim and _exact_at(u0, u1, B.yoneda(h0.module).dim)
    witness = {"unit invertible": True, "X = Hom(N, x)": iso is not None, "copresentation exact": exact,
               "b0": contains(B, h0.module)[1], "b1": contains(B, h1.module)[1]}
    return iso is not None and exact, witness


def has_projective_copresentation(ctx: ABContext, X: Module) -> tuple[bool, str]:
    """Independent search for ``0 -> X -> P0 -> P1`` with ``P0, P1`` projective Gamma-modules.

    When the injective hulls of the regular module are projective in two steps,
    membership is equivalent to the first two terms of a minimal injective
    copresentation of ``X`` being projective.  Otherwise left projective
    approximations are tried, which only certify positive answers.
    """
    G = ctx.gamma
    if X.dim == 0:
        return True, "zero"
    if dominant_dimension_at_least_two(G):
        h0 = md.injective_hull(X)
        if not md.is_projective(h0.module):
            return False, "injective hull not projective"
        C, _ = md.cokernel(h0.module, h0.map)
        if C.dim == 0:
            return True, "injective hull"
        h1 = md.injective_hull(C)
        return md.is_projective(h1.module), "injective copresentation"
    u = _left_projective_approx(X)
    if u.rank() != X.dim:
        return False, "no embedding into a projective"
    C, _ = md.cokernel(_left_projective_approx_target(X), u)
    if C.dim == 0:
        return True, "left approximation"
    w = _left_projective_approx(C)
    if w.rank() == C.dim:
        return True, "left approximations"
    return False, "left approximations (inconclusive)"


def _left_projective_approx_target(X: Module) -> Module:
    return _left_projective_approx(X, with_target=True)[1]


def _left_projective_approx(X: Module, with_target: bool = False):
    G = X.algebra
    reg = md.regular_module(G)
    hs = md.hom_space(X, reg)
    mods = [reg] * hs.dim
    T, incs, _ = md.direct_sum(mods, G)
    u = Mat.hstack(hs.basis, X.field, X.dim) if hs.dim else Mat.zeros(X.dim, 0, X.field)
    return (u, T) if with_target else u


def dominant_dimension_at_least_two(G) -> bool:
    R = md.regular_module(G)
    h0 = md.injective_hull(R)
    if not md.is_projective(h0.module):
        return False
    C, _ = md.cokernel(h0.module, h0.map)
    if C.dim == 0:
        return True
    return md.is_projective(md.injective_hull(C).module)


def verify_ab(ctx: ABContext, mods, names=None, report: Report | None = None) -> Report:
    rep = report or Report("ab-compare")
    rows = []
    all_ok = True
    for k, X in enumerate(mods):
        nm = names[k] if names else (X.name or f"X{k}")
        data = ab_sequence(ctx, X)
        ok, info = compare_with_right_defining(ctx, X, data)
        cons = all(data.checks.values())
        mem, _ = second_syzygy_membership(ctx, X)
        cop, how = has_projective_copresentation(ctx, X)
        rows.append([nm, "-".join(map(str, data.sequence.dims())), "-".join(map(str, info["rd_dims"])),
                     "yes" if ok else "no", "yes" if mem else "no", "yes" if cop else "no"])
        rep.add(f"{nm}: AB construction checks", cons, {k2: v for k2, v in data.checks.items() if not v} or None)
        rep.add(f"{nm}: AB sequence isomorphic to right-defining sequence", ok,
                {k2: v for k2, v in info.items() if isinstance(v, bool) and not v} or None)
        rep.add(f"{nm}: unit iso iff 2-step copresentation", mem == cop, how)
        all_ok &= ok and cons
    rep.tables["ab vs right-defining"] = {
        "header": ["X", "AB dims", "RD dims", "iso", "unit iso", "copresentation"], "rows": rows}
    return rep
