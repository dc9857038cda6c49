"""Independent oracles written without any of the package code.

Brute-force enumeration over GF(2) for homs, idempotents and isomorphism
classes; exact rational elimination for Hom and Ext^1 dimensions.

Representations are ``(dims, maps)`` with ``dims[v]`` an int and ``maps[a]`` a
``dims[s] x dims[t]`` 0/1 matrix as a tuple of row tuples; vectors are rows
and ``a`` acts as ``v -> v @ maps[a]``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def mat_mul(A, B, n_inner, ncols):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n_inner)) % 2 for j in range(ncols))
                 for i in range(len(A)))


def zero(r, c):
    return tuple(tuple(0 for _ in range(c)) for _ in range(r))


def ident(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def all_matrices(r, c):
    for bits in itertools.product((0, 1), repeat=r * c):
        yield tuple(tuple(bits[i * c:(i + 1) * c]) for i in range(r))


class Quiver:
    def __init__(self, vertices, arrows, zero_relations=()):
        self.vertices = list(vertices)
        self.arrows = list(arrows)            # (name, source, target)
        self.zero_relations = list(zero_relations)   # tuples of arrow names

    def arrow(self, name):
        return next(a for a in self.arrows if a[0] == name)


def satisfies(q: Quiver, dims, maps) -> bool:
    for path in q.zero_relations:
        _, s, _ = q.arrow(path[0])
        M = ident(dims[s])
        cur = s
        for nm in path:
            _, s2, t2 = q.arrow(nm)
            M = mat_mul(M, maps[nm], dims[cur], dims[t2])
            cur = t2
        if any(any(r) for r in M):
            return False
    return True


def representations(q: Quiver, dims):
    names = [a[0] for a in q.arrows]
    spaces = [list(all_matrices(dims[s], dims[t])) for _, s, t in q.arrows]
    for choice in itertools.product(*spaces):
        maps = dict(zip(names, choice))
        if satisfies(q, dims, maps):
            yield maps


def homs(q: Quiver, X, Y):
    """All homomorphisms ``X -> Y`` as dicts of vertex matrices."""
    (dx, mx), (dy, my) = X, Y
    vs = q.vertices
    out = []
    for choice in itertools.product(*[list(all_matrices(dx[v], dy[v])) for v in vs]):
        f = dict(zip(vs, choice))
        ok = True
        for a, s, t in q.arrows:
            lhs = mat_mul(mx[a], f[t], dx[t], dy[t])
            rhs = mat_mul(f[s], my[a], dy[s], dy[t])
            if lhs != rhs:
                ok = False
                break
        if ok:
            out.append(f)
    return out


def hom_dim(q, X, Y) -> int:
    n = len(homs(q, X, Y))
    return n.bit_length() - 1


def _rank2(M):
    rows = [list(r) for r in M]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def is_indecomposable(q, X) -> bool:
    dx = X[0]
    if sum(dx.values()) == 0:
        return False
    for f in homs(q, X, X):
        sq = {v: mat_mul(f[v], f[v], dx[v], dx[v]) for v in q.vertices}
        if sq == f:
            trivial_zero = all(not any(any(r) for r in f[v]) for v in q.vertices)
            trivial_one = all(f[v] == ident(dx[v]) for v in q.vertices)
            if not (trivial_zero or trivial_one):
                return False
    return True


def is_isomorphic(q, X, Y) -> bool:
    if X[0] != Y[0]:
        return False
    for f in homs(q, X, Y):
        if all(_rank2(f[v]) == X[0][v] for v in q.vertices):
            return True
    return False


def indecomposable_classes(q: Quiver, max_total: int):
    """Isomorphism classes of indecomposables of total dimension at most ``max_total``."""
    found = []
    for total in range(1, max_total + 1):
        for split in itertools.product(range(total + 1), repeat=len(q.vertices)):
            if sum(split) != total:
                continue
            dims = dict(zip(q.vertices, split))
            for maps in representations(q, dims):
                X = (dims, maps)
                if not is_indecomposable(q, X):
                    continue
                if any(is_isomorphic(q, X, Y) for Y in found):
                    continue
                found.append(X)
    return found


def ext1_dim(q: Quiver, X, Y) -> int:
    """``dim Ext^1(X, Y)`` as cocycles modulo coboundaries.

    A cocycle is a family ``h_a: X_s -> Y_t`` such that the block matrices
    ``[[X_a, h_a], [0, Y_a]]`` satisfy the zero relations; coboundaries are
    ``h_a = X_a f_t - f_s Y_a``.  Only relations of length two are supported.
    """
    (dx, mx), (dy, my) = X, Y
    names = [a[0] for a in q.arrows]
    for rel in q.zero_relations:
        if len(rel) != 2:
            raise NotImplementedError
    cocycles = set()
    for choice in itertools.product(*[list(all_matrices(dx[s], dy[t])) for _, s, t in q.arrows]):
        h = dict(zip(names, choice))
        ok = True
        for a, b in q.zero_relations:
            _, s, m = q.arrow(a)
            _, _, t = q.arrow(b)
            term = tuple(tuple((u + w) % 2 for u, w in zip(r1, r2)) for r1, r2 in
                         zip(mat_mul(mx[a], h[b], dx[m], dy[t]), mat_mul(h[a], my[b], dy[m], dy[t])))
            if any(any(r) for r in term):
                ok = False
                break
        if ok:
            cocycles.add(tuple(h[a] for a in names))
    cob = set()
    for choice in itertools.product(*[list(all_matrices(dx[v], dy[v])) for v in q.vertices]):
        f = dict(zip(q.vertices, choice))
        h = []
        for a, s, t in q.arrows:
            l = mat_mul(mx[a], f[t], dx[t], dy[t])
            r = mat_mul(f[s], my[a], dy[s], dy[t])
            h.append(tuple(tuple((u + w) % 2 for u, w in zip(r1, r2)) for r1, r2 in zip(l, r)))
        cob.add(tuple(h))
    return (len(cocycles).bit_length() - 1) - (len(cob).bit_length() - 1)


# the small quivers used throughout ------------------------------------------------------

A2 = Quiver(["1", "2"], [("a", "1", "2")])
A3RAD2 = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], [("a", "b")])
KX2 = Quiver(["1"], [("x", "1", "1")], [("x", "x")])


def rep(q: Quiver, dims: dict, **maps):
    d = {v: dims.get(v, 0) for v in q.vertices}
    full = {}
    for a, s, t in q.arrows:
        full[a] = maps.get(a, zero(d[s], d[t]))
    return d, full


def named_a3rad2():
    """Simples, projectives and injectives of 1 -> 2 -> 3 with ab = 0, by hand."""
    q = A3RAD2
    return {
        "S1": rep(q, {"1": 1}), "S2": rep(q, {"2": 1}), "S3": rep(q, {"3": 1}),
        "P1": rep(q, {"1": 1, "2": 1}, a=((1,),)), "P2": rep(q, {"2": 1, "3": 1}, b=((1,),)),
    }


# exact rational oracles (own elimination, no package code) -------------------------------


def rank_q(rows) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _mm(A, B, ncols):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(ncols)] for i in range(len(A))]


def satisfies_q(q: Quiver, dims, maps) -> bool:
    for a, b in q.zero_relations:
        t = q.arrow(b)[2]
        M = _mm([list(r) for r in maps[a]], [list(r) for r in maps[b]], dims[t])
        if any(any(x for x in r) for r in M):
            return False
    return True


def _unit_mat(r, c, i, j):
    return [[1 if (x, y) == (i, j) else 0 for y in range(c)] for x in range(r)]


def _coboundary_columns(q, X, Y):
    """Images of the basis of ``sum_v Hom_k(X_v, Y_v)`` under ``f -> (X_a f_t - f_s Y_a)_a``."""
    (dx, mx), (dy, my) = X, Y
    cols = []
    for v in q.vertices:
        for i in range(dx[v]):
            for j in range(dy[v]):
                f = {w: [[0] * dy[w] for _ in range(dx[w])] for w in q.vertices}
                f[v] = _unit_mat(dx[v], dy[v], i, j)
                vec = []
                for a, s, t in q.arrows:
                    l = _mm([list(r) for r in mx[a]], f[t], dy[t])
                    r = _mm(f[s], [list(r) for r in my[a]], dy[t])
                    vec.extend(x - y for lr, rr in zip(l, r) for x, y in zip(lr, rr))
                cols.append(vec)
    return cols


def hom_dim_q(q: Quiver, X, Y) -> int:
    n = sum(X[0][v] * Y[0][v] for v in q.vertices)
    cols = _coboundary_columns(q, X, Y)
    return n - rank_q(cols)


def ext1_dim_q(q: Quiver, X, Y) -> int:
    (dx, mx), (dy, my) = X, Y
    shapes = [(a, dx[s], dy[t]) for a, s, t in q.arrows]
    nvars = sum(r * c for _, r, c in shapes)
    # cocycle equations X_a h_b + h_a Y_b = 0, one column per unknown
    eqs_per_var = []
    for a0, r0, c0 in shapes:
        for i in range(r0):
            for j in range(c0):
                h = {a: [[0] * c for _ in range(r)] for a, r, c in shapes}
                h[a0] = _unit_mat(r0, c0, i, j)
                vec = []
                for a, b in q.zero_relations:
                    _, s, m = q.arrow(a)
                    _, _, t = q.arrow(b)
                    l = _mm([list(r) for r in mx[a]], h[b], dy[t])
                    r = _mm(h[a], [list(r) for r in my[b]], dy[t])
                    vec.extend(x + y for lr, rr in zip(l, r) for x, y in zip(lr, rr))
                eqs_per_var.append(vec)
    zdim = nvars - (rank_q(eqs_per_var) if any(eqs_per_var) else 0)
    return zdim - rank_q(_coboundary_columns(q, X, Y))
