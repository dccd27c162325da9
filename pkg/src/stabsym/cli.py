"""Command-line front end. Every command prints one JSON document (or TSV)
and exits 0 on success, 1 on a domain error, 2 on a usage error."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .chern import (Stabilizer, SymplecticData, c1_orbit_fingerprint, c1_stabilize,
                    fibre_sum, p1_number_product_with_surfaces, rational_elliptic_surface,
                    symplectic_from_json, torus4)
from .gw import (Cap, eval_sphere, eval_sphere_power, gw_table, lift_unstable, rewrite_step,
                 sphere_power_ring, sphere_symbol)
from .lattice import IntersectionLattice
from .orbits import (DISTINCT, bounded_isometry_search, random_unimodular_lattice,
                     same_orbit_obstruction, stabilization_transfer, verify_cp_transfer)
from .parse import ParseError, parse_class_expr, parse_equation_script
from .pipelines import SCHEMA_VERSION, pipeline_s2xs2_chain, pipeline_fibre_sums
from .polytope import (PRESETS, NormSpec, euler_characteristic, faces_equivalent, facet_by_index,
                       facets, norm_value, zonotope_vertices)
from .ring import preset
from .solve import solve_unknowns


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _matrix(text: str) -> list[list[int]]:
    path = Path(text)
    if path.exists():
        data = json.loads(path.read_text())
        return data["gram"] if isinstance(data, dict) else data
    return [_ints(row) for row in text.split(";") if row.strip()]


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _report(kind: str, **fields) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": kind, **fields}


# ------------------------------------------------------------ gw

def _insertions(text: str | None, n: int) -> list[str]:
    if not text:
        return ["1"] * n
    return [s.strip() for s in text.split(",")]


def cmd_gw_sphere(a) -> dict:
    ins = _insertions(a.insert, a.points)
    value = eval_sphere(a.genus, a.points, a.degree, ins, Cap(a.cap))
    out = _report("gw sphere", genus=a.genus, n=a.points, degree=a.degree, insertions=ins,
                  cap=a.cap, value=value)
    if a.trace:
        steps = []
        for sym in sorted(sphere_symbol(a.genus, a.degree, ins, a.cap).symbols(), key=str):
            steps.append(rewrite_step(sym).to_json())
        out["first_steps"] = steps
    return out


def cmd_gw_table(a) -> dict:
    rows = gw_table(a.max_genus, a.points)
    return _report("gw table", rows=rows, all_match=all(r["match"] for r in rows))


def cmd_gw_solve(a) -> dict:
    text = sys.stdin.read() if a.script == "-" else Path(a.script).read_text()
    eqs = parse_equation_script(text)
    return _report("gw solve", equations=[str(e) for e in eqs], result=solve_unknowns(eqs).to_json())


def cmd_gw_lift(a) -> dict:
    ins = _insertions(a.insert, a.points) if a.points else []
    value = lift_unstable(a.genus, a.points, a.degree, ins, a.beta)
    return _report("gw lift", genus=a.genus, n=a.points, degree=a.degree, insertions=ins,
                   beta=a.beta, value=value)


def cmd_gw_power(a) -> dict:
    degrees = _ints(a.degrees)
    ring = sphere_power_ring(len(degrees))
    classes = [parse_class_expr(s, ring) for s in _insertions(a.insert, a.points)]
    if len(classes) != a.points:
        raise UsageError(f"expected {a.points} insertions")
    value = eval_sphere_power(a.genus, degrees, classes, ring)
    return _report("gw power", genus=a.genus, degrees=degrees, insertions=[str(c) for c in classes],
                   value=value)


# ------------------------------------------------------------ chern

def _manifold(a) -> SymplecticData:
    if a.manifold:
        return symplectic_from_json(Path(a.manifold))
    if not a.preset:
        raise UsageError("give --manifold FILE or --preset NAME")
    if a.preset == "E1" and not a.c1:
        return rational_elliptic_surface()
    data = {"preset": a.preset}
    if a.c1:
        data["c1"] = a.c1
    return symplectic_from_json(data)


def cmd_chern_parse(a) -> dict:
    ring = preset(a.preset)
    c = parse_class_expr(a.expr, ring)
    return _report("chern parse", ring=ring.name, canonical=str(c),
                   degrees=sorted(c.degrees()), coefficients=dict(c.coeffs))


def cmd_chern_stabilize(a) -> dict:
    x = _manifold(a)
    stab = Stabilizer.parse(a.stabilizer)
    return _report("chern stabilize", manifold=x.name, stabilizer=stab.label(), c1=str(x.c1),
                   stabilized_c1=str(c1_stabilize(x, stab)))


def cmd_chern_fingerprint(a) -> dict:
    x = _manifold(a)
    div, sq, char = c1_orbit_fingerprint(x)
    return _report("chern fingerprint", manifold=x.name, c1=str(x.c1), divisibility=div,
                   abs_square=sq, characteristic=char)


def cmd_chern_p1(a) -> dict:
    if a.e1 is not None:
        x = fibre_sum("fibre sum", [torus4()] * a.t4 + [rational_elliptic_surface()] * a.e1)
    else:
        x = SymplecticData("X", a.sigma)
    return _report("chern p1", sigma=x.sigma, k=a.k, p1_number=p1_number_product_with_surfaces(x, a.k))


# ------------------------------------------------------------ orbit

def cmd_orbit_check(a) -> dict:
    L = IntersectionLattice(_matrix(a.gram))
    rep = same_orbit_obstruction(L, _ints(a.v0), _ints(a.v1), a.search_bound)
    return _report("orbit check", rank=L.rank, signature=L.signature(), **rep.to_json())


def cmd_orbit_transfer(a) -> dict:
    x0 = symplectic_from_json(Path(a.manifold0))
    x1 = symplectic_from_json(Path(a.manifold1))
    rep = stabilization_transfer(x0, x1, Stabilizer.parse(a.stabilizer), with_classes=True)
    return _report("orbit transfer", **rep.to_json())


def cmd_orbit_brute_force(a) -> dict:
    res = verify_cp_transfer(a.rank, a.bound, a.k)
    return _report("orbit brute-force", rank=a.rank, bound=a.bound, k=a.k, **res.to_json())


def cmd_orbit_random(a) -> dict:
    rng = random.Random(a.seed)
    distinct = contradicted = 0
    for _ in range(a.count):
        L = random_unimodular_lattice(rng, a.max_rank)
        v0 = [rng.randint(-3, 3) for _ in range(L.rank)]
        v1 = [rng.randint(-3, 3) for _ in range(L.rank)]
        if same_orbit_obstruction(L, v0, v1).verdict == DISTINCT:
            distinct += 1
            if bounded_isometry_search(L, v0, v1, a.bound) is not None:
                contradicted += 1
    return _report("orbit random", seed=a.seed, count=a.count, bound=a.bound, distinct=distinct,
                   contradicted=contradicted, sound=contradicted == 0)


# ------------------------------------------------------------ polytope

def _norm_spec(a) -> NormSpec:
    if a.generators:
        return NormSpec.parse(a.generators)
    return PRESETS[a.preset]()


def cmd_polytope_facets(a) -> dict:
    spec = _norm_spec(a)
    fs = facets(spec)
    rows = [dict(index=i, **f.to_json()) for i, f in enumerate(fs)]
    out = _report("polytope facets", spec=spec.to_json(),
                  zonotope_vertices=[list(u) for u in zonotope_vertices(spec)],
                  facet_count=len(fs), rows=rows)
    if spec.dim == 3:
        out["euler_characteristic"] = euler_characteristic(fs)
    return out


def cmd_polytope_face_orbit(a) -> dict:
    spec = _norm_spec(a)
    fs = facets(spec)
    f0, f1 = facet_by_index(fs, a.f0), facet_by_index(fs, a.f1)
    res = faces_equivalent(f0, f1, spec, a.bound)
    return _report("polytope face-orbit", f0=f0.to_json(), f1=f1.to_json(), bound=a.bound, **res.to_json())


def cmd_polytope_norm(a) -> dict:
    spec = _norm_spec(a)
    x = [Fraction(s) for s in a.x.split(",")]
    return _report("polytope norm", x=[str(v) for v in x], value=norm_value(spec, x))


# ------------------------------------------------------------ pipeline

def cmd_pipeline_fibre_sums(a) -> dict:
    return {"command": "pipeline smith", **pipeline_fibre_sums(a.n)}


def cmd_pipeline_lemma57(a) -> dict:
    return {"command": "pipeline lemma57", **pipeline_s2xs2_chain()}


# ------------------------------------------------------------ wiring

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stabsym", description="Stabilization obstructions and GW recursion, exactly.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    verbs = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def sub(parent, name, func, help_text):
        sp = parent.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)
        return sp

    gw = verbs.add_parser("gw", help="Gromov-Witten invariants of S2 and (S2)^k").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    s = sub(gw, "sphere", cmd_gw_sphere, "evaluate GW^S2_{g,n,d}")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--insert", help="comma-separated classes in H*(S2), e.g. h,1,2*h")
    s.add_argument("--cap", choices=("pt", "full"), default="pt")
    s.add_argument("--trace", action="store_true", help="also show the first canonical rewrite")
    s = sub(gw, "table", cmd_gw_table, "the 2^g table")
    s.add_argument("--max-genus", type=int, required=True)
    s.add_argument("--points", type=int)
    s = sub(gw, "solve", cmd_gw_solve, "integer feasibility of an equation script")
    s.add_argument("script", help="file with one equation per line, or - for stdin")
    s = sub(gw, "lift", cmd_gw_lift, "unstable invariant via two divisor insertions")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--insert")
    s.add_argument("--beta", default="h")
    s = sub(gw, "power", cmd_gw_power, "GW of (S2)^k by the product formula")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--degrees", required=True, help="one degree per factor, e.g. 1,1")
    s.add_argument("--insert", help="classes in H*((S2)^k), e.g. h1*h2,1,h1")

    ch = verbs.add_parser("chern", help="Chern and Pontryagin bookkeeping").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    s = sub(ch, "parse", cmd_chern_parse, "parse a class expression in a preset ring")
    s.add_argument("--preset", required=True)
    s.add_argument("--expr", required=True)
    for name, func, text in (("stabilize", cmd_chern_stabilize, "c1 of X x Y"),
                             ("fingerprint", cmd_chern_fingerprint, "orbit invariants of c1")):
        s = sub(ch, name, func, text)
        s.add_argument("--manifold", help="manifold JSON file")
        s.add_argument("--preset")
        s.add_argument("--c1")
        if name == "stabilize":
            s.add_argument("--stabilizer", required=True, help="CPk, S2^k, T2^k or Sigmag^k")
    s = sub(ch, "p1", cmd_chern_p1, "p1 number of X x Sigma^k")
    s.add_argument("--sigma", type=int, default=0)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--t4", type=int, default=1, help="number of T4 summands in a fibre sum")
    s.add_argument("--e1", type=int, help="number of E(1) summands in a fibre sum")

    ob = verbs.add_parser("orbit", help="lattice orbit obstructions").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    s = sub(ob, "check", cmd_orbit_check, "compare two classes")
    s.add_argument("--gram", required=True, help="JSON file or rows like '0,1;1,0'")
    s.add_argument("--v0", required=True)
    s.add_argument("--v1", required=True)
    s.add_argument("--search-bound", type=int)
    s = sub(ob, "transfer", cmd_orbit_transfer, "carry a verdict to X x Y")
    s.add_argument("--manifold0", required=True)
    s.add_argument("--manifold1", required=True)
    s.add_argument("--stabilizer", required=True)
    s = sub(ob, "brute-force", cmd_orbit_brute_force, "box check of the CP^k transfer")
    s.add_argument("--rank", type=int, default=2)
    s.add_argument("--bound", type=int, default=2)
    s.add_argument("--k", type=int, default=1)
    s = sub(ob, "random", cmd_orbit_random, "randomized soundness check")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1000)
    s.add_argument("--bound", type=int, default=3)
    s.add_argument("--max-rank", type=int, default=4)

    po = verbs.add_parser("polytope", help="norm balls and facets").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name, func, text in (("facets", cmd_polytope_facets, "facet list"),
                             ("face-orbit", cmd_polytope_face_orbit, "compare two facets"),
                             ("norm", cmd_polytope_norm, "evaluate the norm")):
        s = sub(po, name, func, text)
        g = s.add_mutually_exclusive_group()
        g.add_argument("--generators", help="covectors like '1,0,0;0,1,0;0,0,1;1,1,1'")
        g.add_argument("--preset", choices=sorted(PRESETS), default="borromean")
        if name == "face-orbit":
            s.add_argument("--f0", type=int, required=True)
            s.add_argument("--f1", type=int, required=True)
            s.add_argument("--bound", type=int, default=1)
        if name == "norm":
            s.add_argument("--x", required=True)

    pi = verbs.add_parser("pipeline", help="named reproductions").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    s = sub(pi, "smith", cmd_pipeline_fibre_sums, "fibre-sum family Z_n")
    s.add_argument("--n", type=int, required=True)
    sub(pi, "lemma57", cmd_pipeline_lemma57, "S2 x S2 chain and (a, b) classification")
    return p


def to_tsv(doc: dict) -> str:
    rows = doc.get("rows")
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        cols = sorted({k for r in rows for k in r})
        lines = ["\t".join(cols)]
        for r in rows:
            lines.append("\t".join(_cell(r.get(c)) for c in cols))
        return "\n".join(lines) + "\n"
    return "".join(f"{k}\t{_cell(v)}\n" for k, v in sorted(doc.items()))


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, sort_keys=True, separators=(",", ":"))


def emit(doc: dict, fmt: str, stream) -> None:
    doc = _jsonable(doc)
    if fmt == "tsv":
        stream.write(to_tsv(doc))
    else:
        stream.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _error(kind: str, exc: Exception) -> dict:
    err = exc.to_json() if isinstance(exc, ParseError) else {"type": kind, "message": str(exc)}
    return {"schema_version": SCHEMA_VERSION, "error": err}


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "tsv" if "tsv" in argv and "--format" in argv else "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        doc = args.func(args)
    except UsageError as exc:
        emit(_error("usage_error", exc), fmt, stdout)
        return 2
    except ParseError as exc:
        emit(_error("parse_error", exc), fmt, stdout)
        return 1
    except (ValueError, KeyError, IndexError, OSError, ArithmeticError) as exc:
        emit(_error(type(exc).__name__, exc), fmt, stdout)
        return 1
    emit(doc, fmt, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
