"""Higher Auslander-Reiten theory on an n-cluster-tilting subcategory ``B = add(N)``.

Sequences are stored left to right: ``objs = [b_{n+1}, ..., b_1, b_0]`` with
``maps[k]: objs[k] -> objs[k+1]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .approx import AddSubcategory, contains
from .knit import IndecUniverse, enumerate_indecomposables
from .linalg import Mat, Subspace
from . import modules as md
from .modules import Module
from .report import Report

__all__ = [
    "ClusterTiltingViolation", "HigherContext", "NExactSequence", "DefectPair",
    "enumerate_indecomposables", "cluster_tilting_violations", "is_n_cluster_tilting",
    "complete_n_exact_from_epi", "complete_n_exact_from_mono", "defects", "tau_n", "tau_n_minus",
    "stable_representable", "costable_representable", "sigma_n", "sigma_n_minus",
    "sigma_on_morphism", "verify_higher_defect_formula", "verify_n_ar_duality",
    "verify_sigma_equals_tau", "verify_homotopy_invariance",
]


class ClusterTiltingViolation(ValueError):
    pass


def _zero(A) -> Module:
    return Module(A, 0, [Mat.zeros(0, 0, A.field)] * A.dim)


# cluster tilting --------------------------------------------------------------------

def cluster_tilting_violations(U: IndecUniverse, B: AddSubcategory, n: int):
    """Violations of ``B = perp_{n-1}B = B^perp_{n-1}`` and the Ext table they were read from.

    A violation is ``(name, side, reason)`` with side ``left`` for the
    condition ``Ext^i(x, B) = 0`` and ``right`` for ``Ext^i(B, x) = 0``.
    """
    out = []
    table = []
    for x, nm in zip(U.indecs, U.names):
        inB = B.index_of(x) is not None
        left = right = True
        row = [nm, "yes" if inB else "no"]
        for i in range(1, n):
            l_dims = [md.ext_dim(x, b, i) for b in B.generators]
            r_dims = [md.ext_dim(b, x, i) for b in B.generators]
            left &= not any(l_dims)
            right &= not any(r_dims)
            row += [sum(l_dims), sum(r_dims)]
        table.append(row)
        if left != inB:
            out.append((nm, "left", "in perp but not in B" if left else "in B but not in perp"))
        if right != inB:
            out.append((nm, "right", "in perp but not in B" if right else "in B but not in perp"))
    header = ["x", "in B"]
    for i in range(1, n):
        header += [f"Ext{i}(x,B)", f"Ext{i}(B,x)"]
    return out, {"header": header, "rows": table}


def is_n_cluster_tilting(U: IndecUniverse, B: AddSubcategory, n: int) -> Report:
    rep = Report("nct-check")
    viol, table = cluster_tilting_violations(U, B, n)
    rep.tables["ext table"] = table
    if viol:
        rep.tables["violations"] = {"header": ["x", "side", "reason"], "rows": [list(v) for v in viol]}
    for g, nm in zip(B.generators, B.names):
        rep.add(f"generator {nm} lies in the universe", U.index(g) is not None)
    rep.add(f"{n}-cluster-tilting", not viol, sorted({v[0] for v in viol}) or None)
    return rep


# n-exact sequences ---------------------------------------------------------------------

@dataclass
class NExactSequence:
    n: int
    objs: list
    maps: list
    witnesses: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return all(self.witnesses.values())

    def dims(self) -> list[int]:
        return [M.dim for M in self.objs]


def _yoneda_exact(B: AddSubcategory, objs, maps, covariant: bool) -> dict:
    """Exactness of the induced Hom complex, evaluated at each generator."""
    if covariant:
        mods = [B.coyoneda(M) for M in reversed(objs)]
        ms = [B.coyoneda_map(objs[k], objs[k + 1], maps[k]) for k in reversed(range(len(maps)))]
    else:
        mods = [B.yoneda(M) for M in objs]
        ms = [B.yoneda_map(objs[k], objs[k + 1], maps[k]) for k in range(len(maps))]
    out = {}
    tag = "(b0,-)" if covariant else "(-,b)"
    for j, nm in enumerate(B.names):
        blocks = []
        for k, f in enumerate(ms):
            src, dst = mods[k], mods[k + 1]
            blocks.append(f.submatrix(rows=range(src.offsets[j], src.offsets[j + 1]),
                                      cols=range(dst.offsets[j], dst.offsets[j + 1])))
        ok = not blocks or blocks[0].rank() == blocks[0].nrows
        for a, b in zip(blocks, blocks[1:]):
            ok &= (a @ b).is_zero() and a.rank() == a.ncols - b.rank()
        out[f"{tag} exact at {nm}"] = ok
    return out


def _certify(B: AddSubcategory, seq: NExactSequence) -> NExactSequence:
    w = {}
    for k, M in enumerate(seq.objs):
        w[f"term {k} in B"] = contains(B, M)[0]
    for k in range(len(seq.maps)):
        w[f"map {k} is a homomorphism"] = md.is_hom(seq.objs[k], seq.objs[k + 1], seq.maps[k])
    w.update(_yoneda_exact(B, seq.objs, seq.maps, covariant=False))
    w.update(_yoneda_exact(B, seq.objs, seq.maps, covariant=True))
    seq.witnesses = w
    return seq


def _padded(B: AddSubcategory, bo, a, pad, right: bool):
    """Add generator summands mapped by zero, keeping the approximation property."""
    if not pad:
        return bo, a
    big = B.bobject(list(bo.indices) + list(pad))
    F = B.base.field
    zs = [B.generators[i] for i in pad]
    if right:
        a = Mat.vstack([a] + [Mat.zeros(z.dim, a.ncols, F) for z in zs], F, a.ncols)
    else:
        a = Mat.hstack([a] + [Mat.zeros(a.nrows, z.dim, F) for z in zs], F, a.nrows)
    return big, a


def complete_n_exact_from_epi(B: AddSubcategory, b1: Module, b0: Module, f: Mat, n: int,
                              minimal: bool = True, pad=()) -> NExactSequence:
    """Embed the epimorphism ``f: b1 -> b0`` in an n-exact sequence.

    With ``minimal=False`` the approximations are assembled from full hom bases
    and the first one is enlarged by the generators listed in ``pad``.
    """
    if f.rank() != b0.dim:
        raise ValueError("map is not an epimorphism")
    objs, maps = [b0, b1], [f]
    K, inc = md.kernel(b1, f)
    for step in range(n - 1):
        bo, a = B.minimal_right_approximation(K) if minimal else B.right_approximation(K)
        if not minimal and step == 0:
            bo, a = _padded(B, bo, a, pad, right=True)
        objs.append(bo.module)
        maps.append(a @ inc)
        K, inc = md.kernel(bo.module, a)
    if not contains(B, K)[0]:
        raise ClusterTiltingViolation(f"final kernel of dimension {K.dim} is not in the subcategory")
    objs.append(K)
    maps.append(inc)
    return _certify(B, NExactSequence(n, objs[::-1], maps[::-1]))


def complete_n_exact_from_mono(B: AddSubcategory, bn1: Module, bn: Module, f: Mat, n: int,
                               minimal: bool = True, pad=()) -> NExactSequence:
    """Embed the monomorphism ``f: b_{n+1} -> b_n`` in an n-exact sequence."""
    if f.rank() != bn1.dim:
        raise ValueError("map is not a monomorphism")
    objs, maps = [bn1, bn], [f]
    C, p = md.cokernel(bn, f)
    for step in range(n - 1):
        bo, a = B.minimal_left_approximation(C) if minimal else B.left_approximation(C)
        if not minimal and step == 0:
            bo, a = _padded(B, bo, a, pad, right=False)
        objs.append(bo.module)
        maps.append(p @ a)
        C, p = md.cokernel(bo.module, a)
    if not contains(B, C)[0]:
        raise ClusterTiltingViolation(f"final cokernel of dimension {C.dim} is not in the subcategory")
    objs.append(C)
    maps.append(p)
    return _certify(B, NExactSequence(n, objs, maps))


def add_contractible(B: AddSubcategory, seq: NExactSequence, gen: int, k: int = 0) -> NExactSequence:
    """``seq`` plus the complex ``N_gen = N_gen`` placed at positions ``k, k+1``."""
    F = B.base.field
    G = B.generators[gen]
    objs, maps = list(seq.objs), list(seq.maps)
    new = []
    for t in (k, k + 1):
        M, _, _ = md.direct_sum([objs[t], G], B.base)
        new.append(M)
    mid = Mat.diag_blocks([maps[k], Mat.identity(G.dim, F)], F)
    if k > 0:
        prev = maps[k - 1]
        maps[k - 1] = Mat.hstack([prev, Mat.zeros(prev.nrows, G.dim, F)], F, prev.nrows)
    if k + 1 < len(maps):
        nxt = maps[k + 1]
        maps[k + 1] = Mat.vstack([nxt, Mat.zeros(G.dim, nxt.ncols, F)], F, nxt.ncols)
    objs[k], objs[k + 1] = new
    maps[k] = mid
    return _certify(B, NExactSequence(seq.n, objs, maps))


# defects ----------------------------------------------------------------------------------

@dataclass
class DefectPair:
    delta: NExactSequence
    contravariant: Module
    covariant: Module
    checks: dict = field(default_factory=dict)


def _block_idempotent(B: AddSubcategory, pred) -> tuple:
    return B.idempotent([nm for g, nm in zip(B.generators, B.names) if pred(g)])


def defects(B: AddSubcategory, delta: NExactSequence) -> DefectPair:
    o, m = delta.objs, delta.maps
    Y0 = B.yoneda(o[-1])
    contra, _ = md.cokernel(Y0, B.yoneda_map(o[-2], o[-1], m[-1]))
    C0 = B.coyoneda(o[0])
    cov, _ = md.cokernel(C0, B.coyoneda_map(o[0], o[1], m[0]))
    eP = _block_idempotent(B, md.is_projective)
    eI = _block_idempotent(B, md.is_injective)
    checks = {
        "contravariant defect killed by projectives": contra.act(eP).is_zero(),
        "covariant defect killed by injectives": cov.act(eI).is_zero(),
    }
    return DefectPair(delta, contra, cov, checks)


def stable_representable(B: AddSubcategory, z: Module) -> Module:
    """``Hom(-, z)`` modulo maps factoring through projectives, as a Gamma-module."""
    c = md.projective_cover(z)
    M, _ = md.cokernel(B.yoneda(z), B.yoneda_map(c.module, z, c.map))
    return M


def costable_representable(B: AddSubcategory, z: Module) -> Module:
    """``Hom(z, -)`` modulo maps factoring through injectives, as a Gamma^op-module."""
    h = md.injective_hull(z)
    M, _ = md.cokernel(B.coyoneda(z), B.coyoneda_map(z, h.module, h.map))
    return M


# translations -----------------------------------------------------------------------------

def tau_n(X: Module, n: int) -> Module:
    """``tau Omega^{n-1} X``; zero on projectives."""
    if n < 1:
        raise ValueError("n must be at least 1")
    S = md.syzygy(X, n - 1)
    return md.ar_translate(S) if S.dim else _zero(X.algebra)


def tau_n_minus(Y: Module, n: int) -> Module:
    """``tau^- Omega^{-(n-1)} Y``; zero on injectives."""
    if n < 1:
        raise ValueError("n must be at least 1")
    S = md.cosyzygy(Y, n - 1)
    return md.ar_translate_inverse(S) if S.dim else _zero(Y.algebra)


class HigherContext:
    """An n-cluster-tilting subcategory with cached completions and sigma values."""

    def __init__(self, B: AddSubcategory, n: int, universe: IndecUniverse | None = None):
        self.B = B
        self.n = n
        self.universe = universe
        self._delta = {}
        self._delta_minus = {}

    @property
    def names(self):
        return self.B.names

    def gen(self, x) -> int:
        return x if isinstance(x, int) else self.B.names.index(x)

    def delta(self, x) -> NExactSequence:
        """The completion of the projective cover of the generator ``x``."""
        j = self.gen(x)
        if j not in self._delta:
            X = self.B.generators[j]
            c = md.projective_cover(X)
            self._delta[j] = complete_n_exact_from_epi(self.B, c.module, X, c.map, self.n)
        return self._delta[j]

    def delta_minus(self, y) -> NExactSequence:
        """The completion of the injective hull of the generator ``y``."""
        j = self.gen(y)
        if j not in self._delta_minus:
            Y = self.B.generators[j]
            h = md.injective_hull(Y)
            self._delta_minus[j] = complete_n_exact_from_mono(self.B, Y, h.module, h.map, self.n)
        return self._delta_minus[j]


def _match(cands, target, build):
    hits = []
    for j in cands:
        iso = md.find_isomorphism(target, build(j))
        if iso is not None:
            hits.append((j, iso))
    return hits


def sigma_n(ctx: HigherContext, x) -> int:
    """The generator ``z`` whose costable representable matches the covariant defect of ``delta(x)``."""
    B = ctx.B
    j = ctx.gen(x)
    if md.is_projective(B.generators[j]):
        raise ValueError(f"{B.names[j]} is projective")
    cov = defects(B, ctx.delta(j)).covariant
    cands = [i for i, g in enumerate(B.generators) if not md.is_injective(g)]
    hits = _match(cands, cov, lambda i: costable_representable(B, B.generators[i]))
    if len(hits) != 1:
        raise ClusterTiltingViolation(f"{len(hits)} candidates match the covariant defect of {B.names[j]}")
    return hits[0][0]


def sigma_n_minus(ctx: HigherContext, y) -> int:
    B = ctx.B
    j = ctx.gen(y)
    if md.is_injective(B.generators[j]):
        raise ValueError(f"{B.names[j]} is injective")
    contra = defects(B, ctx.delta_minus(j)).contravariant
    cands = [i for i, g in enumerate(B.generators) if not md.is_projective(g)]
    hits = _match(cands, contra, lambda i: stable_representable(B, B.generators[i]))
    if len(hits) != 1:
        raise ClusterTiltingViolation(f"{len(hits)} candidates match the contravariant defect of {B.names[j]}")
    return hits[0][0]


def chain_lift(d1: NExactSequence, d2: NExactSequence, f: Mat) -> list[Mat]:
    """Components ``phi_k: b_k -> b'_k`` of a chain map over ``f: b_0 -> b'_0``, listed from ``b_0``."""
    o1, m1 = d1.objs[::-1], d1.maps[::-1]
    o2, m2 = d2.objs[::-1], d2.maps[::-1]
    phis = [f]
    for k in range(1, len(o1)):
        H = md.lift_hom(o1[k], m1[k - 1] @ phis[-1], m2[k - 1], o2[k])
        if H is None:
            raise ClusterTiltingViolation("chain map does not lift")
        phis.append(H)
    return phis


def _sigma_summand(B: AddSubcategory, M: Module, z: int):
    """Maps ``N_z -> M`` and ``M -> N_z`` through the unique non-injective summand of ``M``."""
    parts = [(S, i, p) for S, i, p in md.decompose_with_maps(M) if not md.is_injective(S)]
    if len(parts) != 1:
        raise ClusterTiltingViolation("last term does not have a unique non-injective summand")
    S, inc, proj = parts[0]
    iso = md.find_isomorphism(S, B.generators[z])
    if iso is None:
        raise ClusterTiltingViolation("non-injective summand does not match the sigma value")
    return iso.inverse() @ inc, proj @ iso


def sigma_on_morphism(ctx: HigherContext, x, x2, f: Mat, zs=None) -> tuple:
    """Gamma coordinates of ``sigma_n(f): N_{sigma x} -> N_{sigma x2}`` (defined modulo injectives)."""
    B = ctx.B
    j, i = ctx.gen(x), ctx.gen(x2)
    zj, zi = zs if zs else (sigma_n(ctx, j), sigma_n(ctx, i))
    d1, d2 = ctx.delta(j), ctx.delta(i)
    last = chain_lift(d1, d2, f)[-1]
    into, _ = _sigma_summand(B, d1.objs[0], zj)
    _, outof = _sigma_summand(B, d2.objs[0], zi)
    return B.gamma_element(zj, zi, into @ last @ outof)


def _compose_with_sigma(ctx: HigherContext, cov: Module, sig: dict) -> Module:
    """The Gamma^op-module ``b -> cov(sigma b)`` on the generators."""
    B = ctx.B
    F = B.base.field
    idems = B.gamma.primitive_idempotents()
    spaces = {}
    for j, z in sig.items():
        spaces[j] = cov.act(idems[z]).row_basis()
    offs, tot = {}, 0
    for j in range(len(B)):
        offs[j] = tot
        tot += spaces[j].nrows if j in spaces else 0
    subs = {j: Subspace(b) for j, b in spaces.items()}
    acts = []
    for (j, i, f) in B.basis_info:
        rows = [[0] * tot for _ in range(tot)]
        if j in sig and i in sig:
            g = sigma_on_morphism(ctx, j, i, f, (sig[j], sig[i]))
            A = cov.act(g)
            for t, v in enumerate(spaces[j].rows):
                w = (Mat._raw([v], F, cov.dim) @ A).rows[0]
                c = subs[i].coords(w)
                if c is None:
                    raise ClusterTiltingViolation("sigma(f) does not respect the idempotent blocks")
                rows[offs[j] + t][offs[i]:offs[i] + len(c)] = c
        acts.append(Mat.from_rows(rows, F, tot))
    return Module(B.gamma.opposite(), tot, acts, check=True)


def verify_higher_defect_formula(ctx: HigherContext, delta: NExactSequence, label: str = "delta",
                                 y: Module | None = None) -> Report:
    """``D(contravariant defect) = covariant defect o sigma_n`` as Gamma^op-modules.

    With ``y`` given (the sequence starting at ``y``), the contravariant defect is
    also compared with ``Ext^n(-, y)`` generator by generator.
    """
    B = ctx.B
    rep = Report("defect")
    dp = defects(B, delta)
    for k, v in delta.witnesses.items():
        if not v:
            rep.add(f"{label}: {k}", False)
    rep.add(f"{label}: n-exact", delta.certified)
    for k, v in dp.checks.items():
        rep.add(f"{label}: {k}", v)
    sig = {j: sigma_n(ctx, j) for j, g in enumerate(B.generators) if not md.is_projective(g)}
    lhs = md.dual(dp.contravariant)
    rhs = _compose_with_sigma(ctx, dp.covariant, sig)
    idems = B.gamma.primitive_idempotents()
    rows = []
    dims_ok = True
    for j, nm in enumerate(B.names):
        a = lhs.act(idems[j]).rank()
        b = rhs.act(idems[j]).rank()
        row = [nm, B.names[sig[j]] if j in sig else "0", a, b]
        if y is not None:
            row.append(md.ext_dim(B.generators[j], y, ctx.n))
            dims_ok &= row[-1] == a
        dims_ok &= a == b
        rows.append(row)
    header = ["b", "sigma b", "D contra(b)", "cov(sigma b)"] + (["Ext^n(b,y)"] if y is not None else [])
    rep.tables[f"{label}: defect dimensions"] = {"header": header, "rows": rows}
    rep.add(f"{label}: dimensions agree at every generator", dims_ok)
    iso = md.find_isomorphism(lhs, rhs)
    rep.add(f"{label}: D(contravariant defect) isomorphic to covariant defect o sigma", iso is not None)
    return rep


def verify_n_ar_duality(ctx: HigherContext) -> Report:
    B, n = ctx.B, ctx.n
    rep = Report("ar-duality-table")
    tn = [tau_n(g, n) for g in B.generators]
    tm = [tau_n_minus(g, n) for g in B.generators]
    rows = []
    for xi, x in enumerate(B.generators):
        for yi, y in enumerate(B.generators):
            a = md.stable_hom_proj(tm[yi], x).dim if tm[yi].dim else 0
            b = md.ext_dim(x, y, n)
            c = md.stable_hom_inj(y, tn[xi]).dim if tn[xi].dim else 0
            rows.append([B.names[xi], B.names[yi], a, b, c])
            rep.add(f"({B.names[xi]},{B.names[yi]}): {a} = {b} = {c}", a == b == c)
    rep.tables[f"n = {n} duality"] = {
        "header": ["x", "y", "Hom_(tau_n^- y, x)", f"Ext^{n}(x,y)", "Hom^(y, tau_n x)"], "rows": rows}
    return rep


def verify_sigma_equals_tau(ctx: HigherContext) -> Report:
    B, n = ctx.B, ctx.n
    rep = Report("sigma-tau")
    rows = []
    for j, (g, nm) in enumerate(zip(B.generators, B.names)):
        if not md.is_projective(g):
            z = sigma_n(ctx, j)
            t = tau_n(g, n)
            ok = md.find_isomorphism(B.generators[z], t) is not None
            rows.append(["sigma", nm, B.names[z], _label(ctx, t)])
            rep.add(f"sigma_{n}({nm}) = {B.names[z]} = tau_{n}({nm})", ok)
        if not md.is_injective(g):
            z = sigma_n_minus(ctx, j)
            t = tau_n_minus(g, n)
            ok = md.find_isomorphism(B.generators[z], t) is not None
            rows.append(["sigma^-", nm, B.names[z], _label(ctx, t)])
            rep.add(f"sigma^-_{n}({nm}) = {B.names[z]} = tau^-_{n}({nm})", ok)
    if not rows:
        rep.notes.append("no non-projective or non-injective generators")
    rep.tables["sigma vs tau"] = {"header": ["map", "x", "sigma x", "tau x"], "rows": rows}
    return rep


def _label(ctx: HigherContext, M: Module) -> str:
    if M.dim == 0:
        return "0"
    i = ctx.B.index_of(M)
    if i is not None:
        return ctx.B.names[i]
    if ctx.universe is not None:
        nm = ctx.universe.name_of(M)
        if nm:
            return nm
    return f"dim {M.dim}"


def verify_homotopy_invariance(ctx: HigherContext) -> Report:
    """Minimal and non-minimal completions of the same epimorphism have isomorphic defects."""
    B, n = ctx.B, ctx.n
    rep = Report("homotopy-invariance")
    rows = []
    for j, (g, nm) in enumerate(zip(B.generators, B.names)):
        if md.is_projective(g):
            continue
        c = md.projective_cover(g)
        d_min = ctx.delta(j)
        d_big = complete_n_exact_from_epi(B, c.module, g, c.map, n, minimal=False, pad=range(len(B)))
        d_con = add_contractible(B, d_min, j, 0)
        a = defects(B, d_min)
        for tag, d in (("non-minimal completion", d_big), ("plus contractible summand", d_con)):
            b = defects(B, d)
            rep.add(f"{nm}: {tag} n-exact", d.certified)
            rep.add(f"{nm}: {tag}: contravariant defects isomorphic",
                    md.is_isomorphic(a.contravariant, b.contravariant))
            rep.add(f"{nm}: {tag}: covariant defects isomorphic", md.is_isomorphic(a.covariant, b.covariant))
        rows.append([nm, "-".join(map(str, d_min.dims())), "-".join(map(str, d_big.dims())),
                     "-".join(map(str, d_con.dims())), a.contravariant.dim, a.covariant.dim])
    rep.tables["completions"] = {
        "header": ["x", "minimal dims", "non-minimal dims", "contractible dims", "contra", "cov"], "rows": rows}
    return rep
