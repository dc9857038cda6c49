"""Finite-dimensional associative unital algebras given by structure constants.

An algebra has basis ``b_0..b_{d-1}`` and ``b_i * b_j = sum_k c[i][j][k] b_k``.
Elements are coefficient tuples of length ``d``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .linalg import Field, Mat, Subspace, QQ


class AlgebraError(ValueError):
    pass


class UnsupportedFieldError(AlgebraError):
    pass


class SplittingError(AlgebraError):
    """Raised when no idempotent splitting element can be found (non-split case)."""


class DimensionBoundError(AlgebraError):
    pass


class Algebra:
    def __init__(self, field: Field, mult, unit, labels=None, *, name: str | None = None,
                 idempotents=None, idempotent_labels=None, check: bool = True):
        d = len(unit)
        self.field = field
        self.dim = d
        self.mult = tuple(tuple(tuple(field(x) for x in mult[i][j]) for j in range(d)) for i in range(d))
        self.unit = tuple(field(x) for x in unit)
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(d))
        self.name = name or f"algebra(dim={d})"
        self._opposite = None
        self._radical = None
        self._prim = None
        self._prim_labels = None
        self._generators = None
        self._left = None
        self._right = None
        if idempotents is not None:
            self._prim = [tuple(field(x) for x in e) for e in idempotents]
            self._prim_labels = list(idempotent_labels) if idempotent_labels is not None else \
                [f"e{i}" for i in range(len(self._prim))]
        if check:
            self.check()

    # element arithmetic -------------------------------------------------
    def zero(self):
        return (0,) * self.dim

    def basis_vector(self, i: int):
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def mul(self, u, v):
        F = self.field
        p = F.p
        d = self.dim
        acc = [0] * d
        mult = self.mult
        for i, a in enumerate(u):
            if not a:
                continue
            mi = mult[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(mi[j]):
                    if c:
                        acc[k] += ab * c
        if p is not None:
            return tuple(x % p for x in acc)
        return tuple(F(x) if not isinstance(x, int) else x for x in acc)

    def add(self, u, v):
        return tuple(self.field.add(a, b) for a, b in zip(u, v))

    def sub(self, u, v):
        return tuple(self.field.sub(a, b) for a, b in zip(u, v))

    def scale(self, c, u):
        return tuple(self.field.mul(c, a) for a in u)

    def combo(self, coeffs: Sequence, vectors: Sequence) -> tuple:
        acc = self.zero()
        for c, v in zip(coeffs, vectors):
            if c:
                acc = self.add(acc, self.scale(c, v))
        return acc

    # matrices -----------------------------------------------------------
    def left_mult_matrix(self, u) -> Mat:
        """Matrix of ``x -> u*x`` in the row convention."""
        return Mat.from_rows([self.mul(u, self.basis_vector(k)) for k in range(self.dim)], self.field, self.dim)

    def right_mult_matrix(self, u) -> Mat:
        """Matrix of ``x -> x*u`` in the row convention."""
        return Mat.from_rows([self.mul(self.basis_vector(k), u) for k in range(self.dim)], self.field, self.dim)

    @property
    def left_mats(self) -> list[Mat]:
        if self._left is None:
            d = self.dim
            self._left = [Mat.from_rows([self.mult[i][k] for k in range(d)], self.field, d) for i in range(d)]
        return self._left

    @property
    def right_mats(self) -> list[Mat]:
        if self._right is None:
            d = self.dim
            self._right = [Mat.from_rows([self.mult[k][i] for k in range(d)], self.field, d) for i in range(d)]
        return self._right

    # invariants ---------------------------------------------------------
    def check(self) -> None:
        """Exhaustive associativity and unit checks; raises :class:`AlgebraError`."""
        d = self.dim
        e = self.unit
        for i in range(d):
            bi = self.basis_vector(i)
            if self.mul(e, bi) != bi or self.mul(bi, e) != bi:
                raise AlgebraError(f"unit does not act as identity on basis element {self.labels[i]}")
        R = self.right_mats
        # (b_i b_j) b_l = b_i (b_j b_l)  <=>  R_j R_l = R_{b_j b_l}
        for j in range(d):
            for l in range(d):
                lhs = R[j] @ R[l]
                rhs = self._combo_mats(self.mult[j][l], R)
                if lhs != rhs:
                    raise AlgebraError(f"associativity fails at ({self.labels[j]}, {self.labels[l]})")

    def _combo_mats(self, coeffs, mats):
        out = Mat.zeros(self.dim, self.dim, self.field)
        for c, m in zip(coeffs, mats):
            if c:
                out = out + m.scale(c)
        return out

    def is_associative(self) -> bool:
        try:
            self.check()
        except AlgebraError:
            return False
        return True

    def __repr__(self):
        return f"<Algebra {self.name} dim={self.dim} over {self.field!r}>"

    def same_constants(self, other: "Algebra") -> bool:
        return self.field == other.field and self.mult == other.mult and self.unit == other.unit

    # derived algebras ---------------------------------------------------
    def opposite(self) -> "Algebra":
        if self._opposite is None:
            d = self.dim
            mult = [[self.mult[j][i] for j in range(d)] for i in range(d)]
            op = Algebra(self.field, mult, self.unit, self.labels, name=f"{self.name}^op", check=False)
            op._opposite = self
            if self._prim is not None:
                op._prim = list(self._prim)
                op._prim_labels = list(self._prim_labels)
            if self._radical is not None:
                op._radical = self._radical
            self._opposite = op
        return self._opposite

    # structure theory ---------------------------------------------------
    def _require_radical_field(self):
        p = self.field.p
        if p is not None and p <= self.dim:
            raise UnsupportedFieldError(
                f"radical needs characteristic 0 or p > dim; got p={p}, dim={self.dim}")

    def radical(self) -> Subspace:
        """Jacobson radical as the kernel of the trace form ``(x, y) -> tr(L_x L_y)``."""
        if self._radical is None:
            self._require_radical_field()
            d = self.dim
            c = self.mult
            F = self.field
            gram = []
            for i in range(d):
                row = []
                for j in range(d):
                    t = 0
                    for k in range(d):
                        cik = c[i][k]
                        for l in range(d):
                            a = cik[l]
                            if a:
                                b = c[j][l][k]
                                if b:
                                    t += a * b
                    row.append(F(t) if F.p is not None else _normq(t))
                gram.append(row)
            rad = Subspace(Mat.from_rows(gram, F, d).kernel_basis())
            self._radical = rad
            if self._opposite is not None and self._opposite._radical is None:
                self._opposite._radical = rad
        return self._radical

    def verify_radical(self) -> bool:
        """Re-verify: two-sided ideal, nilpotent, semisimple quotient."""
        rad = self.radical()
        d = self.dim
        for r in rad.basis.rows:
            for i in range(d):
                b = self.basis_vector(i)
                if not rad.contains(self.mul(b, r)) or not rad.contains(self.mul(r, b)):
                    return False
        power = rad
        for _ in range(d + 1):
            if power.dim == 0:
                break
            gens = [self.mul(x, r) for x in power.basis.rows for r in rad.basis.rows]
            power = Subspace.of_vectors(gens, self.field, d) if gens else power
        if power.dim != 0:
            return False
        if rad.dim:
            q, _, _ = quotient_algebra(self, rad)
            if q.dim and q.radical().dim != 0:
                return False
        return True

    def generators(self) -> list[int]:
        """Indices of basis elements that generate the algebra (greedy, in basis order)."""
        if self._generators is None:
            d = self.dim
            chosen: list[int] = []
            span = _closure(self, [self.unit])
            order = sorted(range(d), key=lambda i: (0 if i in self._preset_indices() else 1, i))
            for i in order:
                if span.dim == d:
                    break
                b = self.basis_vector(i)
                if span.contains(b):
                    continue
                chosen.append(i)
                span = _closure(self, [self.unit] + [self.basis_vector(k) for k in chosen])
            self._generators = chosen
        return self._generators

    def _preset_indices(self) -> set[int]:
        out = set()
        if self._prim:
            for e in self._prim:
                nz = [k for k, a in enumerate(e) if a]
                if len(nz) == 1 and e[nz[0]] == 1:
                    out.add(nz[0])
        return out

    def minimal_polynomial(self, a, unit=None) -> list:
        """Monic minimal polynomial of ``a`` (low degree first) inside the unital subalgebra with ``unit``."""
        e = self.unit if unit is None else unit
        F = self.field
        powers = [e]
        while True:
            span = Subspace.of_vectors(powers, F, self.dim)
            nxt = self.mul(powers[-1], a)
            if span.dim < len(powers):
                raise AlgebraError("powers became dependent unexpectedly")
            # solve nxt = sum c_i powers[i]
            m = Mat.from_rows(powers, F, self.dim)
            sol = m.solve_left(Mat.from_rows([nxt], F, self.dim))
            if sol is not None:
                coeffs = [F.neg(x) for x in sol.rows[0]]
                return coeffs + [1]
            powers.append(nxt)
            if len(powers) > self.dim + 1:
                raise AlgebraError("minimal polynomial degree exceeds dimension")

    def eval_poly(self, coeffs: Sequence, a, unit=None):
        """Evaluate a polynomial (low degree first) at ``a`` with the given unit."""
        e = self.unit if unit is None else unit
        acc = self.zero()
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, a), self.scale(c, e))
        return acc

    def corner_is_local(self, e) -> bool:
        return _corner_top_dim(self, e) == 1

    def primitive_idempotents(self) -> list[tuple]:
        """A complete set of orthogonal primitive idempotents summing to 1."""
        if self._prim is None and self.dim == 0:
            self._prim, self._prim_labels = [], []
        if self._prim is None:
            self._require_radical_field()
            out = _split_idempotent(self, self.unit)
            self._prim = out
            self._prim_labels = [f"e{i}" for i in range(len(out))]
            if self._opposite is not None and self._opposite._prim is None:
                self._opposite._prim = list(out)
                self._opposite._prim_labels = list(self._prim_labels)
        return self._prim

    @property
    def idempotent_labels(self) -> list[str]:
        self.primitive_idempotents()
        return self._prim_labels

    def check_idempotents(self, idems: Sequence[tuple] | None = None) -> bool:
        """Orthogonality, completeness and primitivity (local corners)."""
        idems = self.primitive_idempotents() if idems is None else idems
        total = self.zero()
        for i, e in enumerate(idems):
            for j, f in enumerate(idems):
                prod = self.mul(e, f)
                if prod != (e if i == j else self.zero()):
                    return False
            total = self.add(total, e)
        if total != self.unit:
            return False
        return all(self.corner_is_local(e) for e in idems)


def _normq(x):
    from fractions import Fraction
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _closure(A: Algebra, gens: Sequence[tuple]) -> Subspace:
    span = Subspace.of_vectors(gens, A.field, A.dim)
    while True:
        prods = list(span.basis.rows)
        for x in span.basis.rows:
            for g in gens:
                prods.append(A.mul(x, g))
        new = Subspace.of_vectors(prods, A.field, A.dim)
        if new.dim == span.dim:
            return span
        span = new


def corner_space(A: Algebra, e) -> Subspace:
    return Subspace.of_vectors([A.mul(A.mul(e, A.basis_vector(i)), e) for i in range(A.dim)], A.field, A.dim)


def _corner_top_dim(A: Algebra, e) -> int:
    corner = corner_space(A, e)
    rad = A.radical()
    rad_corner = Subspace.of_vectors([A.mul(A.mul(e, r), e) for r in rad.basis.rows] or [A.zero()],
                                     A.field, A.dim)
    return corner.dim - rad_corner.dim


def _split_candidates(A: Algebra, e):
    d = A.dim
    corner = [A.mul(A.mul(e, A.basis_vector(i)), e) for i in range(d)]
    corner = [c for c in corner if any(c)]
    for c in corner:
        yield c
    for a, b in itertools.combinations(range(len(corner)), 2):
        yield A.add(corner[a], corner[b])
    rng = random.Random(20240601)
    for _ in range(40):
        coeffs = [rng.randint(-5, 5) if A.field.p is None else rng.randrange(A.field.p) for _ in corner]
        yield A.combo([A.field(c) for c in coeffs], corner)


def _coprime_split(A: Algebra, mu: list):
    """Return ``(f, g)`` sympy polys with ``mu = f*g`` coprime and nontrivial, or ``None``."""
    import sympy

    t = sympy.Symbol("t")
    F = A.field
    coeffs = list(reversed(mu))
    if F.p is None:
        poly = sympy.Poly([sympy.Rational(str(c)) for c in coeffs], t, domain="QQ")
    else:
        poly = sympy.Poly([int(c) for c in coeffs], t, modulus=F.p)
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    f = factors[0][0] ** factors[0][1]
    g = poly.quo(f)
    return f, g, poly


def _poly_to_field(A: Algebra, poly) -> list:
    F = A.field
    out = []
    for c in reversed(poly.all_coeffs()):
        if F.p is None:
            import sympy
            c = sympy.Rational(c)
            from fractions import Fraction
            out.append(F(Fraction(int(c.p), int(c.q))))
        else:
            out.append(F(int(c)))
    return out


def _split_idempotent(A: Algebra, e) -> list[tuple]:
    top = _corner_top_dim(A, e)
    if top == 0:
        raise AlgebraError("idempotent with nilpotent corner; cannot be nonzero")
    if top == 1:
        return [e]
    for a in _split_candidates(A, e):
        mu = A.minimal_polynomial(a, unit=e)
        if len(mu) <= 2:
            continue
        split = _coprime_split(A, mu)
        if split is None:
            continue
        f, g, poly = split
        s, _, h = f.gcdex(g)
        # s*f == h (mod g), h is a unit since gcd(f, g) = 1
        u = (s * f).quo_ground(h.LC()) if h.degree() == 0 else None
        if u is None:
            continue
        u = u.rem(poly)
        eps = A.eval_poly(_poly_to_field(A, u), a, unit=e)
        if A.mul(eps, eps) != eps or not any(eps) or eps == e:
            continue
        rest = A.sub(e, eps)
        return _split_idempotent(A, eps) + _split_idempotent(A, rest)
    raise SplittingError(
        "no splitting element found: the endomorphism ring may be a non-split division algebra "
        "over this field; try a field extension or a different prime")


def corner_algebra(A: Algebra, e) -> tuple[Algebra, Mat]:
    """``eAe`` with unit ``e``; returns the algebra and its embedding (rows = basis in A-coordinates)."""
    space = corner_space(A, e)
    basis = space.basis
    n = basis.nrows
    F = A.field
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(space.coords(A.mul(basis.rows[i], basis.rows[j])))
        mult.append(row)
    unit = space.coords(e)
    idems = None
    labels = None
    if A._prim is not None:
        sel = [(x, lab) for x, lab in zip(A._prim, A._prim_labels)
               if any(x) and A.mul(e, x) == x and A.mul(x, e) == x]
        total = A.zero()
        for x, _ in sel:
            total = A.add(total, x)
        if total == tuple(e):
            idems = [space.coords(x) for x, _ in sel]
            labels = [lab for _, lab in sel]
    C = Algebra(F, mult, unit, [f"c{i}" for i in range(n)], name=f"corner of {A.name}",
                idempotents=idems, idempotent_labels=labels, check=False)
    return C, basis


def ideal_generated(A: Algebra, e) -> Subspace:
    """The two-sided ideal ``A e A``."""
    d = A.dim
    left = [A.mul(A.basis_vector(i), e) for i in range(d)]
    gens = [A.mul(x, A.basis_vector(j)) for x in left for j in range(d)]
    return Subspace.of_vectors(gens or [A.zero()], A.field, d)


def quotient_algebra(A: Algebra, ideal: Subspace) -> tuple[Algebra, Mat, Subspace]:
    """``A / I``; returns the algebra, the lift matrix (rows = chosen representatives) and ``I``."""
    F = A.field
    comp = ideal.complement_pivots()
    n = len(comp)
    lift = Mat.from_rows([A.basis_vector(j) for j in comp], F, A.dim)
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(ideal.quotient_coords(A.mul(lift.rows[i], lift.rows[j])))
        mult.append(row)
    unit = ideal.quotient_coords(A.unit) if n else ()
    idems = None
    labels = None
    if A._prim is not None and n:
        sel = [(ideal.quotient_coords(x), lab) for x, lab in zip(A._prim, A._prim_labels)]
        sel = [(x, lab) for x, lab in sel if any(x)]
        idems = [x for x, _ in sel]
        labels = [lab for _, lab in sel]
    Q = Algebra(F, mult, unit, [f"q{i}" for i in range(n)], name=f"quotient of {A.name}",
                idempotents=idems, idempotent_labels=labels, check=False)
    return Q, lift, ideal


def field_algebra(field: Field = QQ) -> Algebra:
    return Algebra(field, [[[1]]], [1], ["1"], name="k", idempotents=[[1]], idempotent_labels=["e"])


def product_algebra(field: Field, n: int) -> Algebra:
    """``k x ... x k`` with the coordinate idempotents as basis."""
    mult = [[[1 if (i == j == k) else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return Algebra(field, mult, [1] * n, [f"e{i}" for i in range(n)], name=f"k^{n}")


def truncated_polynomial_algebra(field: Field, n: int) -> Algebra:
    """``k[x]/(x^n)`` with basis ``1, x, ..., x^{n-1}``."""
    mult = [[[1 if (i + j == k) else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, n)]
    return Algebra(field, mult, [1] + [0] * (n - 1), labels, name=f"k[x]/(x^{n})")


# quivers ----------------------------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass
class QuiverPresentation:
    vertices: list[str]
    arrows: list[Arrow]
    relations: list[dict] = field(default_factory=list)   # {tuple of arrow names: coefficient}
    max_path_length: int = 8

    def validate(self) -> None:
        names = set()
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise AlgebraError("duplicate vertex")
        for a in self.arrows:
            if a.name in names or a.name in vs:
                raise AlgebraError(f"duplicate arrow name {a.name}")
            if a.source not in vs or a.target not in vs:
                raise AlgebraError(f"arrow {a.name} has unknown endpoint")
            names.add(a.name)
        amap = {a.name: a for a in self.arrows}
        for rel in self.relations:
            ends = set()
            for path in rel:
                if len(path) < 2:
                    raise AlgebraError(f"relation term {'*'.join(path)} has length < 2")
                for nm in path:
                    if nm not in amap:
                        raise AlgebraError(f"relation uses unknown arrow {nm}")
                for x, y in zip(path, path[1:]):
                    if amap[x].target != amap[y].source:
                        raise AlgebraError(f"relation term {'*'.join(path)} is not a path")
                ends.add((amap[path[0]].source, amap[path[-1]].target))
            if len(ends) > 1:
                raise AlgebraError("relation terms are not parallel")

    def opposite(self) -> "QuiverPresentation":
        arrows = [Arrow(a.name, a.target, a.source) for a in self.arrows]
        rels = [{tuple(reversed(p)): c for p, c in rel.items()} for rel in self.relations]
        return QuiverPresentation(list(self.vertices), arrows, rels, self.max_path_length)


def _enumerate_paths(q: QuiverPresentation, max_len: int):
    """All paths up to ``max_len`` as tuples of arrow names; trivial paths as ``('@v',)``."""
    paths = [((f"@{v}",), v, v) for v in q.vertices]
    frontier = [((a.name,), a.source, a.target) for a in q.arrows]
    length = 1
    while frontier and length <= max_len:
        paths.extend(frontier)
        nxt = []
        for p, s, t in frontier:
            for a in q.arrows:
                if a.source == t:
                    nxt.append((p + (a.name,), s, a.target))
        frontier = nxt
        length += 1
    return paths


def _plen(p):
    return 0 if p[0].startswith("@") else len(p)


def from_quiver(q: QuiverPresentation, field: Field = QQ, name: str | None = None) -> Algebra:
    """Path algebra modulo the relation ideal; paths compose left to right (``a*b`` = a then b)."""
    q.validate()
    L = q.max_path_length
    paths = _enumerate_paths(q, L)
    # longer paths first so that pivots (eliminated paths) prefer long paths
    order = sorted(range(len(paths)), key=lambda i: (-_plen(paths[i][0]), i))
    col = {paths[i][0]: c for c, i in enumerate(order)}
    ncols = len(order)
    amap = {a.name: a for a in q.arrows}
    by_end = {}
    for p, s, t in paths:
        by_end.setdefault(t, []).append(p)
    by_start = {}
    for p, s, t in paths:
        by_start.setdefault(s, []).append(p)

    def cat(u, v):
        if u[0].startswith("@"):
            return v
        if v[0].startswith("@"):
            return u
        return u + v

    gens = []
    for rel in q.relations:
        some = next(iter(rel))
        s, t = amap[some[0]].source, amap[some[-1]].target
        minlen = min(len(p) for p in rel)
        for u in by_end.get(s, []):
            for v in by_start.get(t, []):
                if _plen(u) + minlen + _plen(v) > L:
                    continue
                vec = [0] * ncols
                for p, c in rel.items():
                    w = cat(cat(u, p), v)
                    if len(w) <= L:
                        vec[col[w]] = field.add(vec[col[w]], field(c))
                if any(vec):
                    gens.append(vec)
    ideal = Subspace.of_vectors(gens or [[0] * ncols], field, ncols)
    for p, s, t in paths:
        if _plen(p) == L and ideal.coords(_unit_vec(col[p], ncols)) is None:
            raise DimensionBoundError(
                f"path {'*'.join(p)} of length {L} survives modulo the relations; "
                f"the algebra may be infinite dimensional or max_path_length={L} is too small")
    basis_cols = ideal.complement_pivots()
    inv_col = {c: paths[i][0] for c, i in enumerate(order)}
    basis_paths = [inv_col[c] for c in basis_cols]
    # present the basis with trivial paths first then by length
    basis_paths.sort(key=lambda p: (_plen(p), [paths_index(paths, p)]))
    bidx = {p: i for i, p in enumerate(basis_paths)}
    d = len(basis_paths)
    ends = {p: (s, t) for p, s, t in paths}

    def reduce_path(w):
        out = [0] * d
        if len(w) > L or (not w[0].startswith("@") and _plen(w) > L):
            return out
        nf = ideal.reduce(_unit_vec(col[w], ncols))
        for c, a in enumerate(nf):
            if a:
                out[bidx[inv_col[c]]] = a
        return out

    mult = []
    for u in basis_paths:
        row = []
        for v in basis_paths:
            if ends[u][1] != ends[v][0]:
                row.append([0] * d)
            else:
                w = cat(u, v)
                row.append(reduce_path(w) if _plen(w) <= L else [0] * d)
        mult.append(row)
    unit = [0] * d
    idems = []
    for v in q.vertices:
        unit[bidx[(f"@{v}",)]] = 1
        vec = [0] * d
        vec[bidx[(f"@{v}",)]] = 1
        idems.append(vec)
    labels = [f"e{p[0][1:]}" if p[0].startswith("@") else "*".join(p) for p in basis_paths]
    A = Algebra(field, mult, unit, labels, name=name or "kQ/I", idempotents=idems,
                idempotent_labels=list(q.vertices))
    A.quiver = q
    A.basis_paths = basis_paths
    return A


def paths_index(paths, p):
    for i, (pp, _, _) in enumerate(paths):
        if pp == p:
            return i
    return -1


def _unit_vec(i, n):
    v = [0] * n
    v[i] = 1
    return v


def path_algebra_relabel(A: Algebra, B: Algebra, mapping) -> bool:
    """True if the basis bijection ``mapping`` (index in A -> index in B) carries A's constants to B's."""
    d = A.dim
    if B.dim != d:
        return False
    for i in range(d):
        for j in range(d):
            src = A.mult[i][j]
            tgt = B.mult[mapping[i]][mapping[j]]
            for k in range(d):
                if src[k] != tgt[mapping[k]]:
                    return False
    return True
