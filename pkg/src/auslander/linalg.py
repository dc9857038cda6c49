"""Exact dense linear algebra over the rationals or a prime field.

Matrices are immutable values.  The row-vector convention is used throughout
the package: a matrix ``M`` acts on a row vector ``v`` as ``v @ M``.

Rational entries are kept as ``int`` where possible and ``Fraction``
otherwise; prime field entries are ``int`` residues in ``range(p)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The coefficient field: ``Field()`` is the rationals, ``Field(p)`` is GF(p)."""

    __slots__ = ("p", "_inv")

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p):
                raise FieldError(f"characteristic {p!r} is not a prime")
            if p >= 1 << 16:
                raise FieldError(f"prime {p} too large; only p < 65536 is supported")
        self.p = p
        self._inv = None
        if p is not None:
            inv = [0] * p
            for a in range(1, p):
                inv[a] = pow(a, p - 2, p)
            self._inv = inv

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime_field"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, or a string such as ``"-3/4"``) into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            if isinstance(x, int):
                return x
            raise FieldError(f"cannot coerce {x!r} into QQ")
        p = self.p
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise FieldError(f"{x} has no image in GF({p})")
            return x.numerator * self._inv[x.denominator % p] % p
        if isinstance(x, int):
            return x % p
        raise FieldError(f"cannot coerce {x!r} into GF({p})")

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            if isinstance(a, int):
                return Fraction(1, a) if a not in (1, -1) else a
            r = 1 / a
            return r.numerator if r.denominator == 1 else r
        return self._inv[a]

    def mul(self, a, b):
        if self.p is None:
            return _norm(a * b)
        return a * b % self.p

    def add(self, a, b):
        if self.p is None:
            return _norm(a + b)
        return (a + b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def sub(self, a, b):
        if self.p is None:
            return _norm(a - b)
        return (a - b) % self.p

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        return str(a)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _norm_row(row):
    return [x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x for x in row]


def rref_rows(rows: list[list], ncols: int, field: Field) -> list[int]:
    """In-place reduced row echelon form of a list of mutable rows.

    Zero rows end up at the bottom.  Returns the pivot columns.
    """
    p = field.p
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = field.inv(lead)
            if p is None:
                prow = [x * inv if x else 0 for x in prow]
            else:
                prow = [x * inv % p for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            if p is None:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
            else:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
    if p is None:
        for i in range(r):
            rows[i] = _norm_row(rows[i])
    return pivots


class Mat:
    """Immutable dense matrix over a :class:`Field`."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, rows: Iterable[Sequence], field: Field, ncols: int | None = None, *, coerce=True):
        if coerce:
            data = tuple(tuple(field(x) for x in row) for row in rows)
        else:
            data = tuple(tuple(row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols
        self.rows = data
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, rows, field, ncols):
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field) -> "Mat":
        return cls._raw([[0] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n: int, field: Field) -> "Mat":
        return cls._raw([[1 if i == j else 0 for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def from_rows(cls, rows, field: Field, ncols: int) -> "Mat":
        """Build from already-valid field elements (no coercion)."""
        return cls._raw(rows, field, ncols)

    @classmethod
    def diag_blocks(cls, blocks: Sequence["Mat"], field: Field) -> "Mat":
        nr = sum(b.nrows for b in blocks)
        nc = sum(b.ncols for b in blocks)
        out = [[0] * nc for _ in range(nr)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                out[r0 + i][c0:c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        return cls._raw(out, field, nc)

    @classmethod
    def vstack(cls, mats: Sequence["Mat"], field: Field, ncols: int) -> "Mat":
        rows = []
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("vstack column mismatch")
            rows.extend(m.rows)
        return cls._raw(rows, field, ncols)

    @classmethod
    def hstack(cls, mats: Sequence["Mat"], field: Field, nrows: int) -> "Mat":
        rows = [[] for _ in range(nrows)]
        for m in mats:
            if m.nrows != nrows:
                raise ValueError("hstack row mismatch")
            for i, row in enumerate(m.rows):
                rows[i].extend(row)
        return cls._raw(rows, field, sum(m.ncols for m in mats))

    # basic protocol -----------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def __repr__(self):
        return f"Mat({[list(map(str, r)) for r in self.rows]}, {self.field!r})"

    def tolist(self):
        return [list(r) for r in self.rows]

    def to_strings(self):
        return [[str(x) for x in r] for r in self.rows]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    # arithmetic ---------------------------------------------------------
    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.p
        n = other.ncols
        ocols = other.rows
        out = []
        for row in self.rows:
            acc = [0] * n
            for k, a in enumerate(row):
                if a:
                    orow = ocols[k]
                    for j in range(n):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            if p is not None:
                acc = [x % p for x in acc]
            else:
                acc = _norm_row(acc)
            out.append(acc)
        return Mat._raw(out, self.field, n)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        p = self.field.p
        if p is None:
            rows = [_norm_row([a + b for a, b in zip(r, s)]) for r, s in zip(self.rows, other.rows)]
        else:
            rows = [[(a + b) % p for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return Mat._raw(rows, self.field, self.ncols)

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        p = self.field.p
        if p is None:
            rows = [_norm_row([c * a for a in r]) for r in self.rows]
        else:
            rows = [[c * a % p for a in r] for r in self.rows]
        return Mat._raw(rows, self.field, self.ncols)

    @property
    def T(self) -> "Mat":
        if self.nrows == 0:
            return Mat.zeros(self.ncols, 0, self.field)
        return Mat._raw(list(zip(*self.rows)), self.field, self.nrows)

    def transpose(self) -> "Mat":
        return self.T

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Mat":
        rs = range(self.nrows) if rows is None else rows
        cs = range(self.ncols) if cols is None else cols
        return Mat._raw([[self.rows[i][j] for j in cs] for i in rs], self.field, len(cs))

    def flatten(self) -> list:
        out = []
        for r in self.rows:
            out.extend(r)
        return out

    # exact algorithms ---------------------------------------------------
    def rref(self) -> tuple["Mat", list[int]]:
        rows = [list(r) for r in self.rows]
        piv = rref_rows(rows, self.ncols, self.field)
        return Mat._raw(rows, self.field, self.ncols), piv

    def rank(self) -> int:
        rows = [list(r) for r in self.rows]
        return len(rref_rows(rows, self.ncols, self.field))

    def row_basis(self) -> "Mat":
        """Reduced basis of the row space."""
        rows = [list(r) for r in self.rows]
        piv = rref_rows(rows, self.ncols, self.field)
        return Mat._raw(rows[:len(piv)], self.field, self.ncols)

    def image_basis(self) -> "Mat":
        """Basis (as rows) of the image ``{v @ M}``, i.e. the row space."""
        return self.row_basis()

    def kernel_basis(self) -> "Mat":
        """Rows ``v`` spanning the right null space: ``M @ v^T = 0``."""
        rows = [list(r) for r in self.rows]
        piv = rref_rows(rows, self.ncols, self.field)
        return _nullspace_from_rref(rows, piv, self.ncols, self.field)

    def left_kernel_basis(self) -> "Mat":
        """Rows ``v`` with ``v @ M = 0``."""
        return self.T.kernel_basis()

    def solve(self, b: "Mat") -> "Mat | None":
        """Some ``X`` with ``self @ X == b``, or ``None`` when inconsistent."""
        if b.nrows != self.nrows:
            raise ValueError(f"shape mismatch in solve: {self.shape} vs {b.shape}")
        n = self.ncols
        rows = [list(r) + list(s) for r, s in zip(self.rows, b.rows)]
        piv = rref_rows(rows, n + b.ncols, self.field)
        out = [[0] * b.ncols for _ in range(n)]
        for i, c in enumerate(piv):
            if c >= n:
                return None
            out[c] = rows[i][n:]
        return Mat._raw(out, self.field, b.ncols)

    def solve_left(self, b: "Mat") -> "Mat | None":
        """Some ``X`` with ``X @ self == b``, or ``None``."""
        x = self.T.solve(b.T)
        return None if x is None else x.T

    def inverse(self) -> "Mat | None":
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        if n == 0:
            return self
        ident = Mat.identity(n, self.field)
        rows = [list(r) + list(s) for r, s in zip(self.rows, ident.rows)]
        piv = rref_rows(rows, 2 * n, self.field)
        if len(piv) < n or piv[n - 1] != n - 1:
            return None
        return Mat._raw([r[n:] for r in rows], self.field, n)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def _nullspace_from_rref(rows, piv, ncols, field) -> Mat:
    pivset = set(piv)
    free = [j for j in range(ncols) if j not in pivset]
    out = []
    neg = field.neg
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            a = rows[i][f]
            if a:
                v[c] = neg(a)
        out.append(v)
    return Mat._raw(out, field, ncols)


# functional spellings ------------------------------------------------------

def rref(m: Mat) -> tuple[Mat, list[int]]:
    return m.rref()


def kernel_basis(m: Mat) -> Mat:
    return m.kernel_basis()


def image_basis(m: Mat) -> Mat:
    return m.image_basis()


def solve(a: Mat, b: Mat) -> Mat | None:
    return a.solve(b)


def rank(m: Mat) -> int:
    return m.rank()


def invert(m: Mat) -> Mat | None:
    return m.inverse()


def direct_sum(a: Mat, b: Mat) -> Mat:
    if a.field != b.field:
        raise FieldError("field mismatch")
    return Mat.diag_blocks([a, b], a.field)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; with row-major vectorisation ``vec(A X B) = vec(X) @ kron(A^T, B)``."""
    if a.field != b.field:
        raise FieldError("field mismatch")
    F = a.field
    p = F.p
    out = []
    for ra in a.rows:
        for rb in b.rows:
            row = []
            for x in ra:
                if x:
                    if p is None:
                        row.extend(_norm(x * y) for y in rb)
                    else:
                        row.extend(x * y % p for y in rb)
                else:
                    row.extend([0] * b.ncols)
            out.append(row)
    return Mat._raw(out, F, a.ncols * b.ncols)


class Subspace:
    """A subspace of ``F^n`` held by a reduced row basis, with fast coordinates."""

    __slots__ = ("field", "n", "basis", "pivots")

    def __init__(self, generators: Mat):
        rows = [list(r) for r in generators.rows]
        piv = rref_rows(rows, generators.ncols, generators.field)
        self.field = generators.field
        self.n = generators.ncols
        self.basis = Mat._raw(rows[:len(piv)], self.field, self.n)
        self.pivots = piv

    @classmethod
    def of_vectors(cls, vectors: Sequence[Sequence], field: Field, n: int) -> "Subspace":
        return cls(Mat._raw([list(v) for v in vectors], field, n))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coords(self, v: Sequence) -> list | None:
        """Coordinates of ``v`` in the reduced basis, or ``None`` if ``v`` is outside."""
        F = self.field
        p = F.p
        c = [v[j] for j in self.pivots]
        w = list(v)
        for i, a in enumerate(c):
            if a:
                brow = self.basis.rows[i]
                if p is None:
                    for j in range(self.n):
                        if brow[j]:
                            w[j] = w[j] - a * brow[j]
                else:
                    for j in range(self.n):
                        if brow[j]:
                            w[j] = (w[j] - a * brow[j]) % p
        if any(w):
            return None
        return c

    def contains(self, v: Sequence) -> bool:
        return self.coords(v) is not None

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis.rows)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def complement_pivots(self) -> list[int]:
        s = set(self.pivots)
        return [j for j in range(self.n) if j not in s]

    def reduce(self, v: Sequence) -> list:
        """The normal form of ``v`` modulo this subspace (zero at pivot positions)."""
        F = self.field
        p = F.p
        w = list(v)
        for i, j0 in enumerate(self.pivots):
            a = w[j0]
            if a:
                brow = self.basis.rows[i]
                if p is None:
                    for j in range(self.n):
                        if brow[j]:
                            w[j] = w[j] - a * brow[j]
                else:
                    for j in range(self.n):
                        if brow[j]:
                            w[j] = (w[j] - a * brow[j]) % p
        return _norm_row(w) if p is None else w

    def quotient_coords(self, v: Sequence) -> list:
        """Coordinates of ``v + U`` in the quotient, w.r.t. the complementary standard basis."""
        w = self.reduce(v)
        return [w[j] for j in self.complement_pivots()]

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(Mat.vstack([self.basis, other.basis], self.field, self.n))

    def intersection(self, other: "Subspace") -> "Subspace":
        # v = a @ U = b @ W  <=>  [a, b] in left kernel of [U; -W]
        F = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace(Mat.zeros(0, self.n, F))
        stacked = Mat.vstack([self.basis, -other.basis], F, self.n)
        lk = stacked.left_kernel_basis()
        if lk.nrows == 0:
            return Subspace(Mat.zeros(0, self.n, F))
        a = lk.submatrix(cols=range(self.dim))
        return Subspace(a @ self.basis)


def random_matrix(rng, nrows: int, ncols: int, field: Field, lo: int = -3, hi: int = 3) -> Mat:
    if field.p is not None:
        return Mat._raw([[rng.randrange(field.p) for _ in range(ncols)] for _ in range(nrows)], field, ncols)
    return Mat._raw([[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)], field, ncols)
