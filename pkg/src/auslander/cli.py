"""Command line entry point: ``auslander <command> <instance> [options]``."""
from __future__ import annotations

import argparse
import sys
import time
from importlib import resources
from pathlib import Path

from . import modules as md
from .abridger import ABContext, ABContextError, verify_ab
from .algebra import AlgebraError
from .approx import make_subcategory
from .higher_ar import (ClusterTiltingViolation, HigherContext, is_n_cluster_tilting,
                        verify_higher_defect_formula, verify_homotopy_invariance,
                        verify_n_ar_duality, verify_sigma_equals_tau)
from .instance import Instance, InstanceError, parse_instance
from .knit import KnittingBoundError, enumerate_indecomposables, simple_count
from .recollement import Recollement, verify_recollement
from .report import Report

COMMANDS = ("algebra-check", "indecs", "recollement-verify", "ab-compare", "nct-check",
            "ar-duality-table", "defect")


class UsageError(Exception):
    pass


def catalog_path(name: str) -> Path:
    return Path(str(resources.files("auslander") / "catalog" / f"{name}.alg"))


def catalog_names() -> list[str]:
    d = resources.files("auslander") / "catalog"
    return sorted(p.name[:-4] for p in d.iterdir() if p.name.endswith(".alg"))


def load(source: str, field: str | None = None) -> Instance:
    p = Path(source)
    if not p.exists() and source in catalog_names():
        p = catalog_path(source)
    return parse_instance(p, field)


# commands -----------------------------------------------------------------------------

def _subcategory(inst: Instance, names=None):
    names = names or inst.generators
    if not names:
        raise UsageError("this command needs a [subcategory] section or --generators")
    return make_subcategory(inst.algebra, [inst.resolve(nm) for nm in names], names)


def cmd_algebra_check(inst: Instance, args) -> Report:
    rep = Report("algebra-check")
    rows = []
    algs = [("Lambda", inst.algebra)]
    if inst.generators:
        algs.append(("Gamma = End(N)", _subcategory(inst).gamma))
    for label, A in algs:
        rep.add(f"{label}: associative with unit", A.is_associative())
        rep.add(f"{label}: radical is a nilpotent ideal with semisimple quotient", A.verify_radical())
        rep.add(f"{label}: complete set of primitive orthogonal idempotents", A.check_idempotents())
        rows.append([label, A.dim, A.radical().dim, simple_count(A), len(A.primitive_idempotents())])
    rep.tables["algebras"] = {"header": ["algebra", "dim", "rad dim", "simples", "idempotents"],
                              "rows": rows}
    return rep


def cmd_indecs(inst: Instance, args) -> Report:
    rep = Report("indecs")
    U = inst.knitted()
    rows = []
    for X, nm in zip(U.indecs, U.names):
        proj, inj = md.is_projective(X), md.is_injective(X)
        t = "-" if proj else (U.name_of(md.ar_translate(X)) or "?")
        tm = "-" if inj else (U.name_of(md.ar_translate_inverse(X)) or "?")
        rows.append([nm, X.dim, " ".join(map(str, X.dimension_vector())),
                     "yes" if proj else "no", "yes" if inj else "no", t, tm])
    rep.tables["indecomposables"] = {"header": ["name", "dim", "dim vector", "proj", "inj", "tau", "tau^-"],
                                     "rows": rows}
    rep.notes.append(f"provenance: {U.provenance}; {len(U.indecs)} indecomposables")
    for k, v in sorted(U.checks.items()):
        if isinstance(v, bool):
            rep.add(k.replace("_", " "), v)
    for X, nm in zip(U.indecs, U.names):
        rep.add(f"{nm} is indecomposable", md.is_indecomposable(X))
    return rep


def _idempotent(inst: Instance, args, B):
    names = args.idempotent or inst.idempotent
    if B is not None:
        if not names:
            names = [nm for g, nm in zip(B.generators, B.names) if md.is_projective(g)]
        return B.gamma, B.idempotent(names), names
    A = inst.algebra
    if not names:
        raise UsageError("recollement-verify needs --idempotent when there is no subcategory")
    labels = A.idempotent_labels
    e = [0] * A.dim
    for nm in names:
        if nm not in labels:
            raise UsageError(f"unknown vertex {nm!r}")
        v = A.primitive_idempotents()[labels.index(nm)]
        e = [a + b for a, b in zip(e, v)]
    return A, tuple(A.field(x) for x in e), names


def cmd_recollement(inst: Instance, args) -> Report:
    B = _subcategory(inst, args.generators) if (inst.generators or args.generators) else None
    G, e, names = _idempotent(inst, args, B)
    R = Recollement(G, e)
    rep = verify_recollement(R)
    rep.notes.append("e = " + " + ".join(names))
    return rep


def cmd_ab(inst: Instance, args) -> Report:
    B = _subcategory(inst, args.generators)
    ctx = ABContext(B)
    U = enumerate_indecomposables(ctx.gamma)
    rep = verify_ab(ctx, U.indecs, U.names)
    rep.notes.append("projective block: " + " ".join(B.names[i] for i in ctx.proj_block))
    return rep


def _n(inst, args) -> int:
    n = args.n if args.n is not None else inst.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    return n


def cmd_nct(inst: Instance, args) -> Report:
    B = _subcategory(inst, args.generators)
    return is_n_cluster_tilting(inst.knitted(), B, _n(inst, args))


def _higher(inst, args):
    B = _subcategory(inst, args.generators)
    n = _n(inst, args)
    pre = is_n_cluster_tilting(inst.knitted(), B, n)
    return HigherContext(B, n, inst.knitted()), pre


def cmd_duality(inst: Instance, args) -> Report:
    ctx, pre = _higher(inst, args)
    rep = Report("ar-duality-table")
    rep.extend(pre, "precondition: ")
    if pre.passed:
        rep.extend(verify_n_ar_duality(ctx))
        rep.extend(verify_sigma_equals_tau(ctx))
    return rep


def cmd_defect(inst: Instance, args) -> Report:
    ctx, pre = _higher(inst, args)
    rep = Report("defect")
    rep.extend(pre, "precondition: ")
    if not pre.passed:
        return rep
    B = ctx.B
    rows = []
    for j, (g, nm) in enumerate(zip(B.generators, B.names)):
        if not md.is_projective(g):
            d = ctx.delta(j)
            rows.append(["delta(" + nm + ")", " -> ".join(_term(ctx, M) for M in d.objs)])
            rep.extend(verify_higher_defect_formula(ctx, d, f"delta({nm})"))
        if not md.is_injective(g):
            d = ctx.delta_minus(j)
            rows.append(["delta^-(" + nm + ")", " -> ".join(_term(ctx, M) for M in d.objs)])
            rep.extend(verify_higher_defect_formula(ctx, d, f"delta^-({nm})", y=g))
    rep.tables["sequences"] = {"header": ["sequence", "terms"], "rows": rows}
    rep.extend(verify_homotopy_invariance(ctx))
    return rep


def _term(ctx, M) -> str:
    if M.dim == 0:
        return "0"
    parts = []
    for S in md.decompose(M):
        i = ctx.B.index_of(S)
        parts.append(ctx.B.names[i] if i is not None else f"[{S.dim}]")
    return "+".join(parts)


HANDLERS = {
    "algebra-check": cmd_algebra_check,
    "indecs": cmd_indecs,
    "recollement-verify": cmd_recollement,
    "ab-compare": cmd_ab,
    "nct-check": cmd_nct,
    "ar-duality-table": cmd_duality,
    "defect": cmd_defect,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="auslander", description="Exact verification of recollements and "
                                "higher Auslander-Reiten theory on small algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("instance", help="instance file, or the name of a bundled catalog entry (" +
                   ", ".join(catalog_names()) + ")")
    p.add_argument("--field", help="override the field, e.g. QQ or GF(5)")
    p.add_argument("--n", type=int, help="cluster-tilting degree")
    p.add_argument("--idempotent", nargs="+", help="names of the idempotent block")
    p.add_argument("--generators", nargs="+", help="override the subcategory generators")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    return p


def run(command: str, inst: Instance, args) -> Report:
    if command not in HANDLERS:
        raise UsageError(f"unknown command {command!r}")
    return HANDLERS[command](inst, args)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.idempotent:
        args.idempotent = [t for a in args.idempotent for t in a.split(",") if t]
    if args.generators:
        args.generators = [t for a in args.generators for t in a.split(",") if t]
    t0 = time.perf_counter()
    try:
        inst = load(args.instance, args.field)
        rep = run(args.command, inst, args)
    except (InstanceError, UsageError, ABContextError, AlgebraError, KnittingBoundError,
            ClusterTiltingViolation) as exc:
        print(f"auslander: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "structured":
        out = rep.to_json() + "\n"
    else:
        out = rep.to_text() + f"time: {time.perf_counter() - t0:.2f}s\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
