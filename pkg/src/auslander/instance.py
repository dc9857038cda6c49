"""Line-oriented instance files.

A file is a sequence of sections, each opened by a ``[header]`` line.  Blank
lines and everything after ``#`` are ignored::

    [field]
    QQ                      # or GF(p)

    [quiver]
    vertices 1 2 3
    arrow a 1 2
    arrow b 2 3
    max_path_length 8       # optional

    [relations]
    a*b                     # one relation per line; terms like "2 x*y - 1/2 y*x"

    [algebra]               # explicit structure constants instead of a quiver
    dim 2
    unit 1 0
    product 1 1 : 0 1       # b_1 * b_1 = 0 b_0 + 1 b_1 (indices from 0)
    idempotents 1 0         # optional, one line per primitive idempotent

    [module M]
    dims 1:1 2:1            # quiver algebras: vertex dimensions
    arrow a : 1             # rows separated by ";"
    action 1 : 0 1 ; 0 0    # explicit algebras: matrix of the i-th basis element

    [subcategory]
    P1 P2 S3 S1             # names of modules; S/P/I + vertex label are predefined

    [universe]
    S1 S2 S3 P1 P2          # optional user-supplied list of indecomposables

    [task]
    n 2
    idempotent P1 S2        # generator names of the idempotent block
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra, AlgebraError, Arrow, QuiverPresentation, from_quiver
from .linalg import Field, FieldError, Mat, QQ
from . import modules as md
from .modules import Module, ModuleError


class InstanceError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None, path: str | None = None):
        where = ""
        if line is not None:
            where = f"{path or '<instance>'}:{line}:{col or 1}: "
        super().__init__(where + msg)
        self.line = line
        self.col = col


@dataclass
class Instance:
    name: str
    field: Field
    algebra: Algebra
    modules: dict = dc_field(default_factory=dict)
    generators: list = dc_field(default_factory=list)
    universe: list | None = None
    n: int = 1
    idempotent: list | None = None
    _knitted: object = None

    def resolve(self, name: str, knit: bool = True) -> Module:
        """A module by name: declared modules first, then S/P/I of a vertex, then knitted names."""
        if name in self.modules:
            return self.modules[name]
        labels = self.algebra.idempotent_labels
        m = re.fullmatch(r"([SPI])\(?([^()]+)\)?", name)
        if m and m.group(2) in labels:
            i = labels.index(m.group(2))
            fn = {"S": md.simple, "P": md.projective, "I": md.injective}[m.group(1)]
            M = fn(self.algebra, i)
            M.name = name
            return M
        if knit:
            U = self.knitted()
            if name in U.names:
                return U.by_name(name)
        raise InstanceError(f"unknown module name {name!r}")

    def knitted(self):
        if self._knitted is None:
            from .knit import enumerate_indecomposables, universe_from_list
            if self.universe is not None:
                mods = [self.resolve(nm, knit=False) for nm in self.universe]
                self._knitted = universe_from_list(self.algebra, mods, self.universe)
            else:
                self._knitted = enumerate_indecomposables(self.algebra)
        return self._knitted

    def generator_modules(self) -> list:
        return [self.resolve(nm) for nm in self.generators]


_HEADER = re.compile(r"\[\s*([A-Za-z_]+)(?:\s+([^\]]+?))?\s*\]$")


def _tokens(text: str):
    """Lines as ``(lineno, col, content)`` with comments stripped."""
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield k, len(line) - len(line.lstrip()) + 1, line.strip()


def parse_field(text: str) -> Field:
    s = text.strip()
    if s in ("QQ", "Q", "rationals"):
        return QQ
    m = re.fullmatch(r"(?:GF|F)\s*\(?\s*(-?\d+)\s*\)?", s)
    if not m:
        raise FieldError(f"unrecognised field {text!r}; expected QQ or GF(p)")
    return Field(int(m.group(1)))


def _fraction(tok: str, ln: int, path) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InstanceError(f"bad number {tok!r}", ln, None, path) from None


def _matrix(text: str, ln: int, path) -> list:
    rows = [r.split() for r in text.split(";")]
    rows = [r for r in rows if r]
    if rows and len({len(r) for r in rows}) != 1:
        raise InstanceError("matrix rows have different lengths", ln, None, path)
    return [[_fraction(t, ln, path) for t in r] for r in rows]


def _relation(text: str, ln: int, path) -> dict:
    s = re.sub(r"\s+-\s+", " + -", " " + text.strip()).strip()
    rel = {}
    for term in s.split(" + "):
        term = term.strip()
        if not term:
            continue
        parts = term.split()
        if len(parts) == 1:
            coef, p = Fraction(1), parts[0]
            if p.startswith("-"):
                coef, p = Fraction(-1), p[1:]
        elif len(parts) == 2:
            coef, p = _fraction(parts[0], ln, path), parts[1]
        else:
            raise InstanceError(f"cannot parse relation term {term!r}", ln, None, path)
        key = tuple(x for x in p.split("*") if x)
        rel[key] = rel.get(key, 0) + coef
    return {k: v for k, v in rel.items() if v}


def parse_instance_text(text: str, path: str | None = None, field_override: str | None = None) -> Instance:
    sections = []
    for ln, col, line in _tokens(text):
        m = _HEADER.match(line)
        if m:
            sections.append((m.group(1).lower(), m.group(2), ln, []))
        elif line.startswith("["):
            raise InstanceError(f"malformed section header {line!r}", ln, col, path)
        else:
            if not sections:
                raise InstanceError("content before the first section header", ln, col, path)
            sections[-1][3].append((ln, col, line))
    names = [s[0] for s in sections]
    known = {"field", "quiver", "relations", "algebra", "module", "subcategory", "universe", "task", "name"}
    for kind, _, ln, _ in sections:
        if kind not in known:
            raise InstanceError(f"unknown section [{kind}]", ln, 1, path)
    for once in ("field", "quiver", "relations", "algebra", "subcategory", "universe", "task"):
        if names.count(once) > 1:
            ln = [s[2] for s in sections if s[0] == once][1]
            raise InstanceError(f"section [{once}] appears twice", ln, 1, path)
    by = {s[0]: s for s in sections if s[0] != "module"}

    # field
    try:
        if field_override:
            F = parse_field(field_override)
        elif "field" in by:
            body = by["field"][3]
            if len(body) != 1:
                raise InstanceError("[field] takes exactly one line", by["field"][2], 1, path)
            F = parse_field(body[0][2])
        else:
            F = QQ
    except FieldError as exc:
        ln = by["field"][3][0][0] if "field" in by and by["field"][3] else None
        raise InstanceError(str(exc), ln, None, path) from None

    name = by["name"][3][0][2] if "name" in by and by["name"][3] else Path(path).stem if path else "instance"

    # algebra
    if ("quiver" in by) == ("algebra" in by):
        raise InstanceError("exactly one of [quiver] and [algebra] is required", None, None, path)
    if "quiver" in by:
        A = _parse_quiver(by["quiver"], by.get("relations"), F, name, path)
    else:
        if "relations" in by:
            raise InstanceError("[relations] needs a [quiver]", by["relations"][2], 1, path)
        A = _parse_algebra(by["algebra"], F, name, path)

    inst = Instance(name, F, A)
    for kind, arg, ln, body in sections:
        if kind == "module":
            if not arg:
                raise InstanceError("[module] needs a name", ln, 1, path)
            if arg in inst.modules:
                raise InstanceError(f"module {arg} defined twice", ln, 1, path)
            inst.modules[arg] = _parse_module(A, arg, body, ln, path)
    if "subcategory" in by:
        inst.generators = [t for _, _, line in by["subcategory"][3] for t in line.split()]
    if "universe" in by:
        inst.universe = [t for _, _, line in by["universe"][3] for t in line.split()]
    if "task" in by:
        for ln, col, line in by["task"][3]:
            key, _, rest = line.partition(" ")
            if key == "n":
                try:
                    inst.n = int(rest)
                except ValueError:
                    raise InstanceError(f"n must be an integer, got {rest!r}", ln, col, path) from None
                if inst.n < 1:
                    raise InstanceError("n must be at least 1", ln, col, path)
            elif key == "idempotent":
                inst.idempotent = rest.replace(",", " ").split()
            else:
                raise InstanceError(f"unknown task key {key!r}", ln, col, path)
    # referenced names must resolve
    for nm in inst.generators:
        try:
            inst.resolve(nm)
        except InstanceError as exc:
            raise InstanceError(f"subcategory: {exc}", by["subcategory"][2], 1, path) from None
    if inst.idempotent:
        pool = inst.generators or list(A.idempotent_labels)
        for nm in inst.idempotent:
            if nm not in pool:
                raise InstanceError(f"idempotent block {nm!r} is not a generator or vertex", by["task"][2], 1, path)
    return inst


def parse_instance(path, field_override: str | None = None) -> Instance:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance_text(text, str(p), field_override)


def _parse_quiver(sec, rsec, F, name, path):
    vertices, arrows, L = None, [], 8
    for ln, col, line in sec[3]:
        key, *rest = line.split()
        if key == "vertices":
            vertices = rest
        elif key == "arrow":
            if len(rest) != 3:
                raise InstanceError("arrow takes: name source target", ln, col, path)
            arrows.append(Arrow(*rest))
        elif key == "max_path_length":
            L = int(rest[0])
        else:
            raise InstanceError(f"unknown quiver key {key!r}", ln, col, path)
    if not vertices:
        raise InstanceError("[quiver] needs a vertices line", sec[2], 1, path)
    rels = [_relation(line, ln, path) for ln, _, line in (rsec[3] if rsec else [])]
    q = QuiverPresentation(vertices, arrows, [r for r in rels if r], L)
    try:
        return from_quiver(q, F, name=name)
    except (AlgebraError, FieldError) as exc:
        raise InstanceError(str(exc), sec[2], 1, path) from None


def _parse_algebra(sec, F, name, path):
    d, unit, idems, labels = None, None, [], None
    prods = {}
    for ln, col, line in sec[3]:
        key, _, rest = line.partition(" ")
        if key == "dim":
            d = int(rest)
        elif key == "unit":
            unit = [_fraction(t, ln, path) for t in rest.split()]
        elif key == "labels":
            labels = rest.split()
        elif key == "idempotents":
            idems.append([_fraction(t, ln, path) for t in rest.split()])
        elif key == "product":
            lhs, _, rhs = rest.partition(":")
            ij = lhs.split()
            if len(ij) != 2:
                raise InstanceError("product takes: i j : coefficients", ln, col, path)
            prods[(int(ij[0]), int(ij[1]))] = ([_fraction(t, ln, path) for t in rhs.split()], ln)
        else:
            raise InstanceError(f"unknown algebra key {key!r}", ln, col, path)
    if d is None or unit is None:
        raise InstanceError("[algebra] needs dim and unit", sec[2], 1, path)
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for (i, j), (c, ln) in prods.items():
        if not (0 <= i < d and 0 <= j < d) or len(c) != d:
            raise InstanceError("product indices or length out of range", ln, None, path)
        mult[i][j] = c
    if len(unit) != d or any(len(e) != d for e in idems):
        raise InstanceError("unit or idempotent has the wrong length", sec[2], 1, path)
    try:
        A = Algebra(F, mult, unit, labels, name=name, idempotents=idems or None)
        if idems and not A.check_idempotents():
            raise AlgebraError("declared idempotents are not a complete set of orthogonal idempotents")
        return A
    except (AlgebraError, FieldError) as exc:
        raise InstanceError(str(exc), sec[2], 1, path) from None


def _parse_module(A, name, body, ln0, path):
    F = A.field
    if getattr(A, "quiver", None) is not None:
        spaces, maps = {}, {}
        for ln, col, line in body:
            key, _, rest = line.partition(" ")
            if key == "dims":
                for tok in rest.split():
                    v, _, dv = tok.partition(":")
                    if v not in A.quiver.vertices:
                        raise InstanceError(f"unknown vertex {v!r}", ln, col, path)
                    spaces[v] = int(dv)
            elif key == "arrow":
                a, _, mat = rest.partition(":")
                maps[a.strip()] = [[F(x) for x in r] for r in _matrix(mat, ln, path)]
            else:
                raise InstanceError(f"unknown module key {key!r}", ln, col, path)
        names = {a.name for a in A.quiver.arrows}
        for a in maps:
            if a not in names:
                raise InstanceError(f"module {name}: unknown arrow {a!r}", ln0, 1, path)
        try:
            return md.module_from_arrows(A, spaces, maps, name=name)
        except (ModuleError, AlgebraError, FieldError) as exc:
            raise InstanceError(f"module {name}: {exc}", ln0, 1, path) from None
    acts = {}
    for ln, col, line in body:
        key, _, rest = line.partition(" ")
        if key != "action":
            raise InstanceError(f"unknown module key {key!r}", ln, col, path)
        i, _, mat = rest.partition(":")
        acts[int(i)] = _matrix(mat, ln, path)
    if not acts:
        raise InstanceError(f"module {name} has no actions", ln0, 1, path)
    dim = len(next(iter(acts.values())))
    mats = []
    for i in range(A.dim):
        if i not in acts:
            raise InstanceError(f"module {name}: missing action of basis element {i}", ln0, 1, path)
        mats.append(Mat.from_rows([[F(x) for x in r] for r in acts[i]], F, dim))
    try:
        return Module(A, dim, mats, name=name, check=True)
    except (ModuleError, FieldError) as exc:
        raise InstanceError(f"module {name}: {exc}", ln0, 1, path) from None
