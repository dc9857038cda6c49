"""Finite-dimensional right modules, homomorphisms and the standard constructions.

A module over ``A`` is a vector space with one matrix per basis element of ``A``:
``x . b_i = x @ actions[i]``.  A map ``f: X -> Y`` is a ``dim X x dim Y`` matrix
and ``g o f`` has matrix ``F @ G``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, AlgebraError
from .linalg import Mat, Subspace


class ModuleError(ValueError):
    pass


class Module:
    def __init__(self, algebra: Algebra, dim: int, actions: Sequence[Mat], name: str | None = None,
                 *, check: bool = False):
        if len(actions) != algebra.dim:
            raise ModuleError(f"expected {algebra.dim} action matrices, got {len(actions)}")
        for m in actions:
            if m.nrows != dim or m.ncols != dim:
                raise ModuleError("action matrix has wrong shape")
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.actions = list(actions)
        self.name = name
        self._adapted = None
        self._cache = {}
        if check:
            self.check()

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Module{nm} dim={self.dim}>"

    def act(self, a) -> Mat:
        """Matrix of ``x -> x . a`` for an algebra element ``a``."""
        out = Mat.zeros(self.dim, self.dim, self.field)
        for c, m in zip(a, self.actions):
            if c:
                out = out + (m if c == 1 else m.scale(c))
        return out

    def check(self) -> None:
        """Exhaustive module axioms; raises :class:`ModuleError`."""
        A = self.algebra
        if self.act(A.unit) != Mat.identity(self.dim, self.field):
            raise ModuleError("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.actions[i] @ self.actions[j]
                if lhs != self.act(A.mult[i][j]):
                    raise ModuleError(f"action is not multiplicative at ({A.labels[i]}, {A.labels[j]})")

    def is_valid(self) -> bool:
        try:
            self.check()
        except ModuleError:
            return False
        return True

    def idempotent_ranks(self) -> list[int]:
        return [self.act(e).rank() for e in self.algebra.primitive_idempotents()]

    def dimension_vector(self) -> list[int]:
        A = self.algebra
        out = []
        for r, e in zip(self.idempotent_ranks(), A.primitive_idempotents()):
            out.append(r // _simple_corner_dim(A, e))
        return out

    def invariant_key(self) -> tuple:
        return (self.dim, tuple(self.idempotent_ranks()), tuple(m.rank() for m in self.actions))

    def adapted(self):
        """Basis change ``T`` with rows spanning ``X e_1, X e_2, ...`` in order, its inverse and sizes."""
        if self._adapted is None:
            rows = []
            sizes = []
            for e in self.algebra.primitive_idempotents():
                b = self.act(e).row_basis()
                rows.extend(b.rows)
                sizes.append(b.nrows)
            T = Mat.from_rows(rows, self.field, self.dim)
            Tinv = T.inverse()
            if Tinv is None:
                raise ModuleError("idempotent decomposition of the module is not direct")
            self._adapted = (T, Tinv, sizes)
        return self._adapted


def _simple_corner_dim(A: Algebra, e) -> int:
    key = ("_scd", tuple(e))
    cache = A.__dict__.setdefault("_misc_cache", {})
    if key not in cache:
        from .algebra import _corner_top_dim
        cache[key] = _corner_top_dim(A, e)
    return cache[key]


# maps -----------------------------------------------------------------------

def is_hom(X: Module, Y: Module, F: Mat) -> bool:
    if F.nrows != X.dim or F.ncols != Y.dim:
        return False
    return all(X.actions[i] @ F == F @ Y.actions[i] for i in range(X.algebra.dim))


def identity_map(X: Module) -> Mat:
    return Mat.identity(X.dim, X.field)


def zero_map(X: Module, Y: Module) -> Mat:
    return Mat.zeros(X.dim, Y.dim, X.field)


class HomSpace:
    """``Hom_A(X, Y)`` with a reduced basis and exact coordinates."""

    def __init__(self, X: Module, Y: Module, basis: Sequence[Mat]):
        self.source = X
        self.target = Y
        flat = [m.flatten() for m in basis]
        self._space = Subspace.of_vectors(flat or [[0] * (X.dim * Y.dim)], X.field, X.dim * Y.dim) \
            if X.dim * Y.dim else Subspace(Mat.zeros(0, 0, X.field))
        n = Y.dim
        self.basis = [Mat._raw([r[i * n:(i + 1) * n] for i in range(X.dim)], X.field, n)
                      for r in self._space.basis.rows]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, F: Mat) -> list | None:
        if self.dim == 0:
            return [] if F.is_zero() else None
        return self._space.coords(F.flatten())

    def element(self, coeffs: Sequence) -> Mat:
        out = zero_map(self.source, self.target)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def contains(self, F: Mat) -> bool:
        return self.coords(F) is not None


def hom_space(X: Module, Y: Module) -> HomSpace:
    if X.algebra is not Y.algebra:
        if not X.algebra.same_constants(Y.algebra):
            raise ModuleError("modules over different algebras")
    key = ("hom", id(Y))
    hit = X._cache.get(key)
    if hit is not None and hit[0] is Y:
        return hit[1]
    hs = HomSpace(X, Y, _solve_homs(X, Y))
    X._cache[key] = (Y, hs)
    return hs


def _solve_homs(X: Module, Y: Module) -> list[Mat]:
    F = X.field
    m, n = X.dim, Y.dim
    if m == 0 or n == 0:
        return []
    A = X.algebra
    TX, TXi, sx = X.adapted()
    TY, TYi, sy = Y.adapted()
    # block-diagonal unknowns in adapted coordinates
    var = {}
    ox = oy = 0
    for a, b in zip(sx, sy):
        for r in range(a):
            for s in range(b):
                var[(ox + r, oy + s)] = len(var)
        ox += a
        oy += b
    nv = len(var)
    if nv == 0:
        return []
    preset = A._preset_indices()
    gens = [g for g in A.generators() if g not in preset]
    rows_by_col = {}
    for (r, s), v in var.items():
        rows_by_col.setdefault(r, []).append((s, v))
    solution = None   # rows over the nv variables
    for g in gens:
        RX = (TX @ X.actions[g] @ TXi).rows
        RY = (TY @ Y.actions[g] @ TYi).rows
        eqs = []
        # (RX F' - F' RY)[r][s] = sum_t RX[r][t] F'[t][s] - sum_t F'[r][t] RY[t][s]
        for r in range(m):
            rx = RX[r]
            for s in range(n):
                eq = {}
                for t in range(m):
                    c = rx[t]
                    if c:
                        v = var.get((t, s))
                        if v is not None:
                            eq[v] = eq.get(v, 0) + c
                for (t, v) in rows_by_col.get(r, ()):
                    c = RY[t][s]
                    if c:
                        eq[v] = eq.get(v, 0) - c
                if any(eq.values()):
                    eqs.append(eq)
        if not eqs:
            continue
        if solution is None:
            mat = Mat.from_rows([[F(e.get(v, 0)) for v in range(nv)] for e in eqs], F, nv)
            solution = mat.kernel_basis()
        else:
            if solution.nrows == 0:
                break
            proj = Mat.from_rows([[F(sum(c * row[v] for v, c in e.items())) for e in eqs]
                                  for row in solution.rows], F, len(eqs))
            comb = proj.left_kernel_basis()
            solution = comb @ solution
    if solution is None:
        solution = Mat.identity(nv, F)
    out = []
    for row in solution.rows:
        Fp = [[0] * n for _ in range(m)]
        for (r, s), v in var.items():
            if row[v]:
                Fp[r][s] = row[v]
        out.append(TXi @ Mat._raw(Fp, F, n) @ TY)
    return out


def hom_dim(X: Module, Y: Module) -> int:
    return hom_space(X, Y).dim


# basic modules ----------------------------------------------------------------

def regular_module(A: Algebra) -> Module:
    cache = A.__dict__.setdefault("_misc_cache", {})
    if "regular" not in cache:
        cache["regular"] = Module(A, A.dim, A.right_mats, name="A")
    return cache["regular"]


def submodule(M: Module, vectors) -> tuple[Module, Mat]:
    """Submodule spanned by ``vectors`` (must be invariant); returns it and the inclusion."""
    rows = vectors.rows if isinstance(vectors, Mat) else [list(v) for v in vectors]
    space = Subspace.of_vectors(rows or [[0] * M.dim], M.field, M.dim) if M.dim else \
        Subspace(Mat.zeros(0, 0, M.field))
    return _submodule_of_space(M, space)


def _submodule_of_space(M: Module, space: Subspace) -> tuple[Module, Mat]:
    B = space.basis
    k = B.nrows
    acts = []
    for act in M.actions:
        img = B @ act
        rows = []
        for r in img.rows:
            c = space.coords(r)
            if c is None:
                raise ModuleError("subspace is not a submodule")
            rows.append(c)
        acts.append(Mat._raw(rows, M.field, k))
    return Module(M.algebra, k, acts), B


def submodule_closure(M: Module, vectors) -> tuple[Module, Mat]:
    """Submodule generated by ``vectors``."""
    rows = [list(v) for v in (vectors.rows if isinstance(vectors, Mat) else vectors)]
    space = Subspace.of_vectors(rows or [[0] * M.dim], M.field, M.dim)
    while True:
        gens = list(space.basis.rows)
        for r in space.basis.rows:
            for act in M.actions:
                gens.append((Mat._raw([r], M.field, M.dim) @ act).rows[0])
        new = Subspace.of_vectors(gens or [[0] * M.dim], M.field, M.dim)
        if new.dim == space.dim:
            break
        space = new
    return _submodule_of_space(M, space)


def quotient(M: Module, vectors) -> tuple[Module, Mat]:
    """``M / U`` for an invariant ``U``; returns it and the projection."""
    rows = vectors.rows if isinstance(vectors, Mat) else [list(v) for v in vectors]
    space = Subspace.of_vectors(rows or [[0] * M.dim], M.field, M.dim) if M.dim else \
        Subspace(Mat.zeros(0, 0, M.field))
    comp = space.complement_pivots()
    k = len(comp)
    acts = []
    for act in M.actions:
        rws = []
        for j in comp:
            w = space.reduce(act.rows[j])
            rws.append([w[c] for c in comp])
        acts.append(Mat._raw(rws, M.field, k))
    proj = Mat._raw([[w[c] for c in comp] for w in (space.reduce(_unit(i, M.dim)) for i in range(M.dim))],
                    M.field, k)
    Q = Module(M.algebra, k, acts)
    # invariance check: the projection must be a homomorphism
    for b in space.basis.rows:
        for act in M.actions:
            img = space.reduce((Mat._raw([b], M.field, M.dim) @ act).rows[0])
            if any(img):
                raise ModuleError("subspace is not a submodule")
    return Q, proj


def _diff(u, v, F):
    return [F.sub(a, b) for a, b in zip(u, v)]


def _unit(i, n):
    v = [0] * n
    v[i] = 1
    return v


def direct_sum(mods: Sequence[Module], algebra: Algebra | None = None) -> tuple[Module, list[Mat], list[Mat]]:
    """Direct sum with inclusions and projections."""
    if not mods:
        if algebra is None:
            raise ModuleError("empty direct sum needs an algebra")
        A = algebra
        return Module(A, 0, [Mat.zeros(0, 0, A.field)] * A.dim), [], []
    A = mods[0].algebra
    F = A.field
    acts = [Mat.diag_blocks([M.actions[i] for M in mods], F) for i in range(A.dim)]
    total = sum(M.dim for M in mods)
    incs, projs = [], []
    off = 0
    for M in mods:
        inc = Mat._raw([[1 if c == off + r else 0 for c in range(total)] for r in range(M.dim)], F, total)
        incs.append(inc)
        projs.append(inc.T)
        off += M.dim
    return Module(A, total, acts), incs, projs


def block_map(blocks: Sequence[Sequence[Mat]], field) -> Mat:
    """Matrix ``[[F_ij]]`` of a map between direct sums (rows: source summands)."""
    rows = []
    for brow in blocks:
        h = Mat.hstack(list(brow), field, brow[0].nrows)
        rows.append(h)
    return Mat.vstack(rows, field, rows[0].ncols if rows else 0)


def dual(M: Module) -> Module:
    """``D M = Hom_k(M, k)`` as a right module over the opposite algebra."""
    op = M.algebra.opposite()
    return Module(op, M.dim, [a.T for a in M.actions], name=f"D({M.name})" if M.name else None)


def dual_map(F: Mat) -> Mat:
    return F.T


def projective(A: Algebra, i: int) -> Module:
    """``e_i A`` for the i-th primitive idempotent."""
    cache = A.__dict__.setdefault("_misc_cache", {})
    key = ("P", i)
    if key not in cache:
        e = A.primitive_idempotents()[i]
        M, inc = submodule(regular_module(A), [A.mul(e, A.basis_vector(k)) for k in range(A.dim)])
        M.name = f"P{A.idempotent_labels[i]}"
        M.embedding = inc
        cache[key] = M
    return cache[key]


def injective(A: Algebra, i: int) -> Module:
    """``D(A e_i)``, the injective hull of the i-th simple."""
    cache = A.__dict__.setdefault("_misc_cache", {})
    key = ("I", i)
    if key not in cache:
        M = dual(projective(A.opposite(), i))
        M.name = f"I{A.idempotent_labels[i]}"
        cache[key] = M
    return cache[key]


def simple(A: Algebra, i: int) -> Module:
    cache = A.__dict__.setdefault("_misc_cache", {})
    key = ("S", i)
    if key not in cache:
        P = projective(A, i)
        S, _ = quotient(P, radical_of(P)[1])
        S.name = f"S{A.idempotent_labels[i]}"
        cache[key] = S
    return cache[key]


def radical_of(M: Module) -> tuple[Module, Mat]:
    rad = M.algebra.radical()
    vecs = []
    for r in rad.basis.rows:
        vecs.extend(M.act(r).rows)
    return submodule(M, vecs)


def top(M: Module) -> tuple[Module, Mat]:
    return quotient(M, radical_of(M)[1])


def socle(M: Module) -> tuple[Module, Mat]:
    rad = M.algebra.radical()
    if rad.dim == 0 or M.dim == 0:
        return submodule(M, Mat.identity(M.dim, M.field))
    big = Mat.hstack([M.act(r) for r in rad.basis.rows], M.field, M.dim)
    return submodule(M, big.left_kernel_basis())


# kernels and cokernels ---------------------------------------------------------

def kernel(X: Module, F: Mat) -> tuple[Module, Mat]:
    return submodule(X, F.left_kernel_basis())


def image(Y: Module, F: Mat) -> tuple[Module, Mat, Mat]:
    """Image with the epi onto it and the mono into ``Y``."""
    I, mono = submodule(Y, F.row_basis())
    epi = mono.solve_left(F)
    return I, epi, mono


def cokernel(Y: Module, F: Mat) -> tuple[Module, Mat]:
    return quotient(Y, F.row_basis())


def factor_through(F: Mat, G: Mat) -> Mat | None:
    """``H`` with ``H @ G == F`` (so ``F = G o H``), or ``None``."""
    return G.solve_left(F)


def factor_from(F: Mat, G: Mat) -> Mat | None:
    """``H`` with ``G @ H == F`` (so ``F = H o G``), or ``None``."""
    return G.solve(F)


def lift_hom(X: Module, F: Mat, G: Mat, Z: Module) -> Mat | None:
    """A homomorphism ``H: X -> Z`` with ``H @ G == F``, or ``None``.

    ``G: Z -> Y`` and ``F: X -> Y``.  Solved inside ``Hom(X, Z)``.
    """
    hs = hom_space(X, Z)
    if hs.dim == 0:
        return zero_map(X, Z) if F.is_zero() else None
    stacked = Mat.from_rows([(b @ G).flatten() for b in hs.basis], X.field, F.nrows * F.ncols)
    sol = stacked.solve_left(Mat.from_rows([F.flatten()], X.field, F.nrows * F.ncols))
    if sol is None:
        return None
    return hs.element(sol.rows[0])


def extend_hom(Z: Module, F: Mat, G: Mat, Y: Module) -> Mat | None:
    """A homomorphism ``H: Z -> Y`` with ``G @ H == F`` where ``G: X -> Z`` and ``F: X -> Y``."""
    hs = hom_space(Z, Y)
    if hs.dim == 0:
        return zero_map(Z, Y) if F.is_zero() else None
    stacked = Mat.from_rows([(G @ b).flatten() for b in hs.basis], Z.field, F.nrows * F.ncols)
    sol = stacked.solve_left(Mat.from_rows([F.flatten()], Z.field, F.nrows * F.ncols))
    if sol is None:
        return None
    return hs.element(sol.rows[0])


# covers and hulls ---------------------------------------------------------------

@dataclass
class Cover:
    module: Module          # the projective (or injective) module
    map: Mat                # P -> X  (or X -> I)
    summands: list[int]     # indices of primitive idempotents, in order
    tops: list | None = None  # chosen top generators (rows of X in X e_i), projective covers only


def projective_cover(X: Module) -> Cover:
    hit = X._cache.get("pcover")
    if hit is not None:
        return hit
    A = X.algebra
    F = X.field
    idems = A.primitive_idempotents()
    radX = radical_of(X)[1]
    U = Subspace.of_vectors(radX.rows or [[0] * X.dim], F, X.dim) if X.dim else Subspace(Mat.zeros(0, 0, F))
    chosen = []
    for i, e in enumerate(idems):
        if U.dim == X.dim:
            break
        for x in X.act(e).row_basis().rows:
            if U.dim == X.dim:
                break
            if U.contains(x):
                continue
            chosen.append((i, list(x)))
            xm = Mat._raw([list(x)], F, X.dim)
            U = U.sum(Subspace(Mat.vstack([xm @ act for act in X.actions], F, X.dim)))
    mods = [projective(A, i) for i, _ in chosen]
    P, _, _ = direct_sum(mods, A)
    rows = []
    for (i, x), Pi in zip(chosen, mods):
        xm = Mat._raw([x], F, X.dim)
        for a in Pi.embedding.rows:
            rows.append((xm @ X.act(a)).rows[0])
    pi = Mat.from_rows(rows, F, X.dim) if rows else Mat.zeros(0, X.dim, F)
    cov = Cover(P, pi, [i for i, _ in chosen], [x for _, x in chosen])
    X._cache["pcover"] = cov
    return cov


def injective_hull(X: Module) -> Cover:
    hit = X._cache.get("ihull")
    if hit is not None:
        return hit
    DX = dual(X)
    c = projective_cover(DX)
    I = dual(c.module)
    hull = Cover(I, c.map.T, c.summands)
    X._cache["ihull"] = hull
    return hull


def is_projective(X: Module) -> bool:
    return projective_cover(X).module.dim == X.dim


def is_injective(X: Module) -> bool:
    return injective_hull(X).module.dim == X.dim


def syzygy_step(X: Module) -> tuple[Module, Mat]:
    """Unstripped ``Omega X = ker(P(X) -> X)`` with its inclusion into ``P(X)``."""
    c = projective_cover(X)
    return kernel(c.module, c.map)


def cosyzygy_step(X: Module) -> tuple[Module, Mat]:
    """Unstripped ``Omega^- X = coker(X -> I(X))`` with its projection from ``I(X)``."""
    h = injective_hull(X)
    return cokernel(h.module, h.map)


def syzygy(X: Module, m: int = 1) -> Module:
    """``Omega^m X`` with projective summands split off (the stable representative)."""
    cur = X
    for _ in range(m):
        cur = strip_projective_summands(syzygy_step(cur)[0])
    return cur if m else strip_projective_summands(X)


def cosyzygy(X: Module, m: int = 1) -> Module:
    """``Omega^{-m} X`` with injective summands split off."""
    cur = X
    for _ in range(m):
        cur = strip_injective_summands(cosyzygy_step(cur)[0])
    return cur if m else strip_injective_summands(X)


def strip_projective_summands(M: Module) -> Module:
    parts = [S for S in decompose(M) if not is_projective(S)]
    return direct_sum(parts, M.algebra)[0]


def strip_injective_summands(M: Module) -> Module:
    parts = [S for S in decompose(M) if not is_injective(S)]
    return direct_sum(parts, M.algebra)[0]


def projective_resolution(X: Module, length: int) -> list[tuple[Module, Mat, Module, Mat]]:
    """Steps ``(P_i, P_i -> Omega^i X, Omega^{i+1} X, inclusion into P_i)`` for ``i < length``."""
    out = []
    cur = X
    for _ in range(length):
        c = projective_cover(cur)
        K, inc = kernel(c.module, c.map)
        out.append((c.module, c.map, K, inc))
        cur = K
    return out


class QuotientSpace:
    """A quotient ``V / W`` of a hom space, with representatives of a basis."""

    def __init__(self, ambient: HomSpace, sub_maps: Sequence[Mat]):
        self.ambient = ambient
        n = ambient.dim
        F = ambient.source.field
        coords = [ambient.coords(m) for m in sub_maps]
        if any(c is None for c in coords):
            raise ModuleError("subspace generator is not in the ambient hom space")
        self.sub = Subspace.of_vectors(coords or [[0] * n], F, n) if n else Subspace(Mat.zeros(0, 0, F))
        self.complement = self.sub.complement_pivots()
        self.representatives = [ambient.basis[j] for j in self.complement]

    @property
    def dim(self) -> int:
        return len(self.complement)

    def coords(self, F: Mat) -> list:
        c = self.ambient.coords(F)
        if c is None:
            raise ModuleError("map is not in the ambient hom space")
        return self.sub.quotient_coords(c)

    def is_zero(self, F: Mat) -> bool:
        return not any(self.coords(F))


def ext(X: Module, Y: Module, i: int = 1) -> QuotientSpace:
    """``Ext^i(X, Y) = Hom(Omega^i X, Y) / (restrictions from P_{i-1})``."""
    if i < 0:
        raise ValueError("ext degree must be non-negative")
    if i == 0:
        return QuotientSpace(hom_space(X, Y), [])
    steps = projective_resolution(X, i)
    P, _, K, inc = steps[-1]
    amb = hom_space(K, Y)
    subs = [inc @ g for g in hom_space(P, Y).basis]
    return QuotientSpace(amb, subs)


def ext_dim(X: Module, Y: Module, i: int = 1) -> int:
    return ext(X, Y, i).dim


def stable_hom_proj(X: Module, Y: Module) -> QuotientSpace:
    """``Hom(X, Y)`` modulo maps factoring through projectives."""
    c = projective_cover(Y)
    return QuotientSpace(hom_space(X, Y), [g @ c.map for g in hom_space(X, c.module).basis])


def stable_hom_inj(X: Module, Y: Module) -> QuotientSpace:
    """``Hom(X, Y)`` modulo maps factoring through injectives."""
    h = injective_hull(X)
    return QuotientSpace(hom_space(X, Y), [h.map @ g for g in hom_space(h.module, Y).basis])


# A-duals and the transpose --------------------------------------------------------

def star(M: Module) -> tuple[Module, HomSpace]:
    """``Hom_A(M, A_A)`` as a right module over the opposite algebra."""
    A = M.algebra
    R = regular_module(A)
    hs = hom_space(M, R)
    op = A.opposite()
    L = A.left_mats
    acts = []
    for i in range(A.dim):
        rows = [hs.coords(phi @ L[i]) for phi in hs.basis]
        acts.append(Mat._raw(rows, A.field, hs.dim))
    return Module(op, hs.dim, acts), hs


def star_map(X: Module, Y: Module, F: Mat, sx=None, sy=None) -> Mat:
    """``F^*: Y^* -> X^*`` in the bases of :func:`star`."""
    if sx is None:
        sx = star(X)
    if sy is None:
        sy = star(Y)
    hx, hy = sx[1], sy[1]
    rows = [hx.coords(F @ psi) for psi in hy.basis]
    return Mat._raw(rows, X.field, hx.dim) if rows else Mat.zeros(0, hx.dim, X.field)


def min_proj_presentation(X: Module):
    """``P1 -> P0 -> X -> 0`` minimal; returns ``(P1, P0, f: P1 -> P0, pi: P0 -> X)``."""
    c0 = projective_cover(X)
    K, inc = kernel(c0.module, c0.map)
    c1 = projective_cover(K)
    return c1.module, c0.module, c1.map @ inc, c0.map


def transpose(X: Module) -> Module:
    """Auslander transpose ``Tr X = coker(P0^* -> P1^*)``."""
    P1, P0, f, _ = min_proj_presentation(X)
    s1, s0 = star(P1), star(P0)
    fs = star_map(P1, P0, f, s1, s0)
    C, _ = cokernel(s1[0], fs)
    return C


def ar_translate(X: Module) -> Module:
    """``tau X = D Tr X``."""
    return dual(transpose(X))


def ar_translate_inverse(X: Module) -> Module:
    """``tau^- X = Tr D X``."""
    return transpose(dual(X))


# endomorphisms and decomposition ----------------------------------------------------

def endomorphism_algebra(M: Module) -> tuple[Algebra, HomSpace]:
    """``End(M)`` with product ``f.g = f o g`` (matrix ``G @ F``)."""
    hit = M._cache.get("end")
    if hit is not None:
        return hit
    hs = hom_space(M, M)
    n = hs.dim
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(hs.coords(hs.basis[j] @ hs.basis[i]))
        mult.append(row)
    unit = hs.coords(identity_map(M))
    E = Algebra(M.field, mult, unit, [f"f{i}" for i in range(n)], name="End", check=False)
    M._cache["end"] = (E, hs)
    return E, hs


def is_indecomposable(M: Module) -> bool:
    if M.dim == 0:
        return False
    E, _ = endomorphism_algebra(M)
    return E.corner_is_local(E.unit)


def decompose(M: Module) -> list[Module]:
    """Indecomposable summands, sorted by invariants and grouped by isomorphism class."""
    return [S for S, _, _ in decompose_with_maps(M)]


def decompose_with_maps(M: Module) -> list[tuple[Module, Mat, Mat]]:
    """Summands with inclusion and projection maps; the inclusions sum to an isomorphism."""
    hit = M._cache.get("decomp")
    if hit is not None:
        return hit
    if M.dim == 0:
        return []
    E, hs = endomorphism_algebra(M)
    out = []
    for eps in E.primitive_idempotents():
        P = hs.element(eps)
        S, inc = submodule(M, P.row_basis())
        proj = _projection_onto(P, inc)
        out.append((S, inc, proj))
    out = _sort_and_group(out)
    M._cache["decomp"] = out
    return out


def _projection_onto(P: Mat, inc: Mat) -> Mat:
    # P = proj @ inc with proj: M -> S
    sol = inc.solve_left(P)
    if sol is None:
        raise ModuleError("idempotent image mismatch")
    return sol


def _sort_and_group(parts):
    parts = sorted(parts, key=lambda t: t[0].invariant_key())
    groups: list[list] = []
    for t in parts:
        for g in groups:
            if g[0][0].invariant_key() == t[0].invariant_key() and find_isomorphism(g[0][0], t[0]) is not None:
                g.append(t)
                break
        else:
            groups.append([t])
    return [t for g in groups for t in g]


def find_isomorphism(X: Module, Y: Module, tries: int = 6) -> Mat | None:
    """An isomorphism ``X -> Y`` or ``None`` (certified by invertibility)."""
    if X.dim != Y.dim:
        return None
    if X.dim == 0:
        return zero_map(X, Y)
    if X.invariant_key() != Y.invariant_key():
        return None
    hs = hom_space(X, Y)
    if hs.dim == 0:
        return None
    for b in hs.basis:
        if b.is_invertible():
            return b
    rng = random.Random(1729 + X.dim)
    F = X.field
    for _ in range(tries):
        coeffs = [F(rng.randint(-9, 9)) if F.p is None else rng.randrange(F.p) for _ in hs.basis]
        cand = hs.element(coeffs)
        if cand.is_invertible():
            return cand
    return _iso_by_decomposition(X, Y)


def _iso_between_indecomposables(U: Module, V: Module) -> Mat | None:
    if U.dim != V.dim:
        return None
    fs = hom_space(U, V).basis
    gs = hom_space(V, U).basis
    for f in fs:
        if f.is_invertible():
            return f
        for g in gs:
            if (f @ g).is_invertible():
                return f
    return None


def _iso_by_decomposition(X: Module, Y: Module) -> Mat | None:
    dx = decompose_with_maps(X)
    dy = decompose_with_maps(Y)
    if len(dx) != len(dy):
        return None
    used = [False] * len(dy)
    blocks = []
    for S, inc_s, proj_s in dx:
        found = None
        for j, (T, inc_t, proj_t) in enumerate(dy):
            if used[j] or S.invariant_key() != T.invariant_key():
                continue
            f = _iso_between_indecomposables(S, T)
            if f is not None:
                found = (j, f)
                break
        if found is None:
            return None
        j, f = found
        used[j] = True
        blocks.append(proj_s @ f @ dy[j][1])
    total = blocks[0]
    for b in blocks[1:]:
        total = total + b
    return total if total.is_invertible() else None


@dataclass
class Decomposition:
    summands: list[tuple[Module, int]]   # representative and multiplicity
    parts: list[Module]                  # all summands in order
    iso: Mat                             # from the direct sum of parts to the module


def decomposition(M: Module) -> Decomposition:
    dm = decompose_with_maps(M)
    parts = [S for S, _, _ in dm]
    summands: list[tuple[Module, int]] = []
    for S in parts:
        if summands and is_isomorphic(summands[-1][0], S):
            summands[-1] = (summands[-1][0], summands[-1][1] + 1)
        else:
            summands.append((S, 1))
    iso = Mat.vstack([inc for _, inc, _ in dm], M.field, M.dim) if dm else Mat.zeros(0, M.dim, M.field)
    return Decomposition(summands, parts, iso)


def is_isomorphic(X: Module, Y: Module) -> bool:
    return find_isomorphism(X, Y) is not None


def multiplicities(M: Module, catalog: Sequence[Module]) -> list[int]:
    """Multiplicity of each catalogue module as a summand of ``M``."""
    counts = [0] * len(catalog)
    for S in decompose(M):
        for i, C in enumerate(catalog):
            if is_isomorphic(S, C):
                counts[i] += 1
                break
        else:
            raise ModuleError("summand not found in catalogue")
    return counts


def index_in(M: Module, catalog: Sequence[Module]) -> int | None:
    for i, C in enumerate(catalog):
        if is_isomorphic(M, C):
            return i
    return None


def module_from_arrows(A: Algebra, spaces: dict, maps: dict, name: str | None = None) -> Module:
    """A representation of a bound quiver: vertex dimensions and one matrix per arrow.

    Right modules are covariant representations: the arrow ``a: i -> j`` acts as ``M_i -> M_j``.
    """
    q = getattr(A, "quiver", None)
    if q is None:
        raise AlgebraError("algebra was not built from a quiver")
    F = A.field
    offs = {}
    n = 0
    for v in q.vertices:
        offs[v] = n
        n += int(spaces.get(v, 0))
    amap = {a.name: a for a in q.arrows}

    def arrow_mat(name):
        a = amap[name]
        M = [[0] * n for _ in range(n)]
        blk = maps.get(name)
        ds, dt = int(spaces.get(a.source, 0)), int(spaces.get(a.target, 0))
        if blk is not None:
            blk = blk if isinstance(blk, Mat) else Mat.from_rows(blk, F, dt)
            if blk.nrows != ds or blk.ncols != dt:
                raise ModuleError(f"matrix for arrow {name} has shape {blk.shape}, expected {(ds, dt)}")
            for r in range(ds):
                for c in range(dt):
                    M[offs[a.source] + r][offs[a.target] + c] = blk.rows[r][c]
        return Mat.from_rows(M, F, n)

    acts = []
    for p in A.basis_paths:
        if p[0].startswith("@"):
            v = p[0][1:]
            d = int(spaces.get(v, 0))
            acts.append(Mat.from_rows([[1 if (c == r and offs[v] <= r < offs[v] + d) else 0
                                        for c in range(n)] for r in range(n)], F, n))
        else:
            m = arrow_mat(p[0])
            for nm in p[1:]:
                m = m @ arrow_mat(nm)
            acts.append(m)
    return Module(A, n, acts, name=name, check=True)


def tensor_over(Y: Module, left_mats: Sequence[Mat], P: Module) -> tuple[Module, Mat]:
    """Balanced tensor ``Y (x)_C P``.

    ``Y`` is a right ``C``-module and ``P`` a right module over another algebra
    carrying a left ``C``-action, ``left_mats[k]`` being ``p -> c_k . p``.  Returns
    the quotient of ``Y (x)_k P`` by ``y c (x) p - y (x) c p`` and the projection.
    """
    from .linalg import kron
    F = P.field
    m = P.dim
    n = Y.dim * m
    Im = Mat.identity(m, F)
    Iy = Mat.identity(Y.dim, F)
    rel = []
    for k, lam in enumerate(left_mats):
        rel.extend((kron(Y.actions[k], Im) - kron(Iy, lam)).rows)
    V = Module(P.algebra, n, [kron(Iy, a) for a in P.actions])
    return quotient(V, rel if rel else [[0] * n])
