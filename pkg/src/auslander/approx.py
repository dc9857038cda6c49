"""Subcategories ``add(N)`` of mod Lambda, their approximations and projectivization.

``Gamma = End(N)`` has a blockwise basis: the block ``(j, i)`` holds a basis of
``Hom(N_j, N_i)`` and diagonal blocks start with the identity, so the labelled
primitive idempotents of ``Gamma`` are basis vectors.  The product is composition,
``a . b = a o b``.

``yoneda(X) = Hom(N, X)`` is a right Gamma-module by precomposition and
``coyoneda(X) = Hom(X, N)`` a right Gamma^op-module by postcomposition.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra
from .linalg import Mat, Subspace
from . import modules as md
from .modules import Module


class SubcategoryError(ValueError):
    pass


@dataclass
class BObject:
    """A finite direct sum of generators ``N_{i_1} + ... + N_{i_r}``."""
    indices: tuple
    module: Module
    incs: list
    projs: list


@dataclass
class GammaBlock:
    src: int            # j, source generator
    dst: int            # i, target generator
    offset: int
    maps: list          # Lambda-matrices N_j -> N_i in basis order
    hom: md.HomSpace
    change: Mat         # chosen basis in HomSpace coordinates
    change_inv: Mat


class AddSubcategory:
    def __init__(self, base: Algebra, generators: Sequence[Module], names: Sequence[str] | None = None,
                 *, check: bool = True):
        self.base = base
        self.generators = list(generators)
        self.names = list(names) if names is not None else [f"N{i}" for i in range(len(generators))]
        if check:
            for i, G in enumerate(self.generators):
                if not md.is_indecomposable(G):
                    raise SubcategoryError(f"generator {self.names[i]} is not indecomposable")
            for i in range(len(self.generators)):
                for j in range(i):
                    if md.is_isomorphic(self.generators[i], self.generators[j]):
                        raise SubcategoryError(
                            f"generators {self.names[j]} and {self.names[i]} are isomorphic")
        self.N, self.incs, self.projs = md.direct_sum(self.generators, base)
        self._build_gamma()
        self._yoneda = {}
        self._coyoneda = {}

    def __len__(self):
        return len(self.generators)

    # Gamma ----------------------------------------------------------------
    def _build_gamma(self):
        gens = self.generators
        F = self.base.field
        r = len(gens)
        blocks = {}
        labels = []
        offset = 0
        order = []
        for j in range(r):
            for i in range(r):
                hs = md.hom_space(gens[j], gens[i])
                if i == j:
                    maps = _local_basis(gens[i], hs)
                else:
                    maps = list(hs.basis)
                if not maps:
                    continue
                change = Mat.from_rows([hs.coords(m) for m in maps], F, hs.dim)
                blk = GammaBlock(j, i, offset, maps, hs, change, change.inverse())
                blocks[(j, i)] = blk
                order.append(blk)
                for t in range(len(maps)):
                    if i == j and t == 0:
                        labels.append(f"1_{self.names[i]}")
                    else:
                        labels.append(f"{self.names[j]}->{self.names[i]}#{t}")
                offset += len(maps)
        d = offset
        self.blocks = blocks
        self.block_order = order
        self.basis_info = []
        for blk in order:
            for t, m in enumerate(blk.maps):
                self.basis_info.append((blk.src, blk.dst, m))
        mult = [[[0] * d for _ in range(d)] for _ in range(d)]
        for a, (ja, ia, fa) in enumerate(self.basis_info):
            for b, (jb, ib, fb) in enumerate(self.basis_info):
                # a o b : first b (N_jb -> N_ib) then a (N_ja -> N_ia), needs ib == ja
                if ib != ja:
                    continue
                comp = fb @ fa
                mult[a][b] = self._coords_block(jb, ia, comp, d)
        unit = [0] * d
        idems = []
        for i in range(r):
            off = blocks[(i, i)].offset
            unit[off] = 1
            v = [0] * d
            v[off] = 1
            idems.append(v)
        self.gamma = Algebra(F, mult, unit, labels, name="End(N)", idempotents=idems,
                             idempotent_labels=list(self.names), check=False)

    def _coords_block(self, j: int, i: int, F: Mat, d: int | None = None) -> list:
        d = self.gamma.dim if d is None else d
        out = [0] * d
        blk = self.blocks.get((j, i))
        if blk is None:
            if not F.is_zero():
                raise SubcategoryError("map outside the hom space")
            return out
        c = blk.hom.coords(F)
        if c is None:
            raise SubcategoryError("map is not a homomorphism between generators")
        cc = (Mat.from_rows([c], self.base.field, len(c)) @ blk.change_inv).rows[0]
        out[blk.offset:blk.offset + len(cc)] = cc
        return out

    def gamma_element(self, j: int, i: int, F: Mat) -> tuple:
        """Gamma coordinates of a Lambda-map ``N_j -> N_i``."""
        return tuple(self._coords_block(j, i, F))

    def gamma_of_endomorphism(self, G: Mat) -> tuple:
        """Gamma coordinates of an endomorphism of ``N`` given as a matrix."""
        out = [0] * self.gamma.dim
        Fd = self.base.field
        for j in range(len(self)):
            for i in range(len(self)):
                comp = self.incs[j] @ G @ self.projs[i]
                if comp.is_zero():
                    continue
                c = self._coords_block(j, i, comp)
                out = [Fd.add(a, b) for a, b in zip(out, c)]
        return tuple(out)

    def endomorphism_of(self, g) -> Mat:
        """The endomorphism of ``N`` for Gamma coordinates ``g``."""
        out = Mat.zeros(self.N.dim, self.N.dim, self.base.field)
        for c, (j, i, f) in zip(g, self.basis_info):
            if c:
                out = out + (self.projs[j] @ f @ self.incs[i]).scale(c)
        return out

    def idempotent(self, names: Sequence[str]) -> tuple:
        """Sum of the labelled idempotents of the named generators."""
        e = [0] * self.gamma.dim
        for nm in names:
            if nm not in self.names:
                raise SubcategoryError(f"unknown generator {nm}")
            e[self.blocks[(self.names.index(nm),) * 2].offset] = 1
        return tuple(e)

    # objects of B -----------------------------------------------------------
    def bobject(self, indices: Sequence[int]) -> BObject:
        mods = [self.generators[i] for i in indices]
        M, incs, projs = md.direct_sum(mods, self.base)
        return BObject(tuple(indices), M, incs, projs)

    def index_of(self, X: Module) -> int | None:
        return md.index_in(X, self.generators)

    # projectivization ---------------------------------------------------------
    def yoneda(self, X: Module) -> Module:
        """``Hom(N, X)`` as a right Gamma-module."""
        hit = self._yoneda.get(id(X))
        if hit is not None and hit[0] is X:
            return hit[1]
        Fd = self.base.field
        spaces = [md.hom_space(G, X) for G in self.generators]
        offs = _offsets([h.dim for h in spaces])
        n = offs[-1]
        acts = []
        for (j, i, f) in self.basis_info:
            rows = [[0] * n for _ in range(n)]
            # phi in Hom(N_i, X) maps to phi o f in Hom(N_j, X)
            for t, phi in enumerate(spaces[i].basis):
                c = spaces[j].coords(f @ phi)
                rows[offs[i] + t][offs[j]:offs[j] + len(c)] = c
            acts.append(Mat.from_rows(rows, Fd, n))
        Y = Module(self.gamma, n, acts, name=f"Hom(N,{X.name})" if X.name else None)
        Y.hom_spaces = spaces
        Y.offsets = offs
        self._yoneda[id(X)] = (X, Y)
        return Y

    def yoneda_map(self, X: Module, Y: Module, F: Mat) -> Mat:
        """``Hom(N, f): Hom(N, X) -> Hom(N, Y)``."""
        yx, yy = self.yoneda(X), self.yoneda(Y)
        rows = []
        for j in range(len(self)):
            for phi in yx.hom_spaces[j].basis:
                c = yy.hom_spaces[j].coords(phi @ F)
                row = [0] * yy.dim
                row[yy.offsets[j]:yy.offsets[j] + len(c)] = c
                rows.append(row)
        return Mat.from_rows(rows, self.base.field, yy.dim) if rows else Mat.zeros(0, yy.dim, self.base.field)

    def coyoneda(self, X: Module) -> Module:
        """``Hom(X, N)`` as a right Gamma^op-module."""
        hit = self._coyoneda.get(id(X))
        if hit is not None and hit[0] is X:
            return hit[1]
        Fd = self.base.field
        spaces = [md.hom_space(X, G) for G in self.generators]
        offs = _offsets([h.dim for h in spaces])
        n = offs[-1]
        acts = []
        for (j, i, f) in self.basis_info:
            rows = [[0] * n for _ in range(n)]
            # psi in Hom(X, N_j) maps to f o psi in Hom(X, N_i)
            for t, psi in enumerate(spaces[j].basis):
                c = spaces[i].coords(psi @ f)
                rows[offs[j] + t][offs[i]:offs[i] + len(c)] = c
            acts.append(Mat.from_rows(rows, Fd, n))
        Y = Module(self.gamma.opposite(), n, acts, name=f"Hom({X.name},N)" if X.name else None)
        Y.hom_spaces = spaces
        Y.offsets = offs
        self._coyoneda[id(X)] = (X, Y)
        return Y

    def coyoneda_map(self, X: Module, Y: Module, F: Mat) -> Mat:
        """``Hom(f, N): Hom(Y, N) -> Hom(X, N)``."""
        cx, cy = self.coyoneda(X), self.coyoneda(Y)
        rows = []
        for j in range(len(self)):
            for psi in cy.hom_spaces[j].basis:
                c = cx.hom_spaces[j].coords(F @ psi)
                row = [0] * cx.dim
                row[cx.offsets[j]:cx.offsets[j] + len(c)] = c
                rows.append(row)
        return Mat.from_rows(rows, self.base.field, cx.dim) if rows else Mat.zeros(0, cx.dim, self.base.field)

    def fp_functor(self, b1: Module, b0: Module, F: Mat) -> Module:
        """The finitely presented functor ``coker Hom(N, f)`` as a Gamma-module."""
        for M in (b1, b0):
            if not contains(self, M)[0]:
                raise SubcategoryError("presentation terms must lie in the subcategory")
        C, _ = md.cokernel(self.yoneda(b0), self.yoneda_map(b1, b0, F))
        return C

    # approximations -------------------------------------------------------------
    def right_approximation(self, X: Module) -> tuple[BObject, Mat]:
        """``sum_j N_j^{dim Hom(N_j, X)} -> X`` assembled from hom bases."""
        idx, maps = [], []
        for j, G in enumerate(self.generators):
            for phi in md.hom_space(G, X).basis:
                idx.append(j)
                maps.append(phi)
        return self._assemble_right(idx, maps, X)

    def minimal_right_approximation(self, X: Module) -> tuple[BObject, Mat]:
        """Minimal right approximation, read off from the top of ``Hom(N, X)``."""
        Y = self.yoneda(X)
        cov = md.projective_cover(Y)
        idx, maps = [], []
        for i, x in zip(cov.summands, cov.tops):
            idx.append(i)
            maps.append(Y.hom_spaces[i].element(x[Y.offsets[i]:Y.offsets[i + 1]]))
        return self._assemble_right(idx, maps, X)

    def _assemble_right(self, idx, maps, X):
        b = self.bobject(idx)
        Fd = self.base.field
        if not idx:
            return b, Mat.zeros(0, X.dim, Fd)
        alpha = Mat.vstack(maps, Fd, X.dim)
        return b, alpha

    def left_approximation(self, X: Module) -> tuple[BObject, Mat]:
        idx, maps = [], []
        for j, G in enumerate(self.generators):
            for psi in md.hom_space(X, G).basis:
                idx.append(j)
                maps.append(psi)
        return self._assemble_left(idx, maps, X)

    def minimal_left_approximation(self, X: Module) -> tuple[BObject, Mat]:
        Y = self.coyoneda(X)
        cov = md.projective_cover(Y)
        idx, maps = [], []
        for i, x in zip(cov.summands, cov.tops):
            idx.append(i)
            maps.append(Y.hom_spaces[i].element(x[Y.offsets[i]:Y.offsets[i + 1]]))
        return self._assemble_left(idx, maps, X)

    def _assemble_left(self, idx, maps, X):
        b = self.bobject(idx)
        Fd = self.base.field
        if not idx:
            return b, Mat.zeros(X.dim, 0, Fd)
        return b, Mat.hstack(maps, Fd, X.dim)

    def is_right_approximation(self, b: Module, alpha: Mat, X: Module) -> bool:
        """Every map ``N_j -> X`` factors through ``alpha`` (solved exactly)."""
        for G in self.generators:
            for g in md.hom_space(G, X).basis:
                if md.lift_hom(G, g, alpha, b) is None:
                    return False
        return True

    def is_left_approximation(self, b: Module, alpha: Mat, X: Module) -> bool:
        for G in self.generators:
            for g in md.hom_space(X, G).basis:
                if md.extend_hom(b, g, alpha, G) is None:
                    return False
        return True

    def right_minimality_certificate(self, bo: BObject, alpha: Mat, X: Module) -> bool:
        """No single summand of the source can be dropped without losing the approximation property."""
        for k in range(len(bo.indices)):
            keep = [t for t in range(len(bo.indices)) if t != k]
            sub = self.bobject([bo.indices[t] for t in keep])
            if not keep:
                a2 = Mat.zeros(0, X.dim, self.base.field)
            else:
                a2 = Mat.vstack([bo.incs[t] @ alpha for t in keep], self.base.field, X.dim)
            if self.is_right_approximation(sub.module, a2, X):
                return False
        return True

    def left_minimality_certificate(self, bo: BObject, alpha: Mat, X: Module) -> bool:
        for k in range(len(bo.indices)):
            keep = [t for t in range(len(bo.indices)) if t != k]
            sub = self.bobject([bo.indices[t] for t in keep])
            if not keep:
                a2 = Mat.zeros(X.dim, 0, self.base.field)
            else:
                a2 = Mat.hstack([alpha @ bo.projs[t] for t in keep], self.base.field, X.dim)
            if self.is_left_approximation(sub.module, a2, X):
                return False
        return True


def _offsets(sizes):
    out = [0]
    for s in sizes:
        out.append(out[-1] + s)
    return out


def _local_basis(G: Module, hs: md.HomSpace) -> list[Mat]:
    """Basis of ``End(G)`` starting with the identity, then the radical, then the rest."""
    Fd = G.field
    E, ehs = md.endomorphism_algebra(G)
    ident = md.identity_map(G)
    rad = E.radical()
    chosen = [ident] + [ehs.element(v) for v in rad.basis.rows]
    span = Subspace.of_vectors([hs.coords(m) for m in chosen], Fd, hs.dim)
    for m in hs.basis:
        if span.dim == hs.dim:
            break
        c = hs.coords(m)
        if not span.contains(c):
            chosen.append(m)
            span = Subspace.of_vectors([hs.coords(x) for x in chosen], Fd, hs.dim)
    return chosen


def make_subcategory(base: Algebra, gens: Sequence[Module], names: Sequence[str] | None = None) -> AddSubcategory:
    return AddSubcategory(base, gens, names)


def contains(B: AddSubcategory, X: Module) -> tuple[bool, list]:
    """Membership in ``add(N)`` with the matching of summands to generators as witness."""
    witness = []
    for S in md.decompose(X):
        i = B.index_of(S)
        if i is None:
            return False, witness
        witness.append(B.names[i])
    return True, witness


def yoneda_module(B: AddSubcategory, X: Module) -> Module:
    return B.yoneda(X)


def fp_functor(B: AddSubcategory, b1: Module, b0: Module, F: Mat) -> Module:
    return B.fp_functor(b1, b0, F)
