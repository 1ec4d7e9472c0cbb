"""
Command-line front end and JSON schemas.

Every command builds one structured report; ``--json`` prints it verbatim,
otherwise a plain-text rendering is derived from it.  Exit codes: 0 success
or verified, 1 verified negative, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import catalog
from .cohomology import ADJOINT, COEFFS, TRIVIAL, Cochain, CochainError, cohomology
from .deformation import (ANY, Deformation, DeformationError, ModuliPoint, canonicalize, deform,
                          deformation_residual, extract_deformation, massey_obstruction,
                          moduli_normal_form, nonsingular_classify, orbit_equivalent,
                          tangent_dims)
from .exactla import FactorizationOverflow, format_rational, parse_rational
from .liealg import (BasisChange, LieAlgebra, LieAlgebraError, apply_basis_change,
                     is_filiform, jacobi_residual)
from .symplectic import (DEFAULT_TRIALS, EXISTS, SymplecticError,
                         central_extension, contact_check, is_closed, nondegenerate,
                         symplectic_decision)

GOLDEN_DIR = Path(__file__).with_name("golden")
DEFAULT_MAX_N = 24


class InputError(Exception):
    """Bad user input: exit code 2."""


def max_n() -> int:
    raw = os.environ.get("FILIFORM_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise InputError("FILIFORM_MAX_N must be an integer, got %r" % raw) from None


def check_dim(n: int) -> int:
    if not isinstance(n, int) or n < 0:
        raise InputError("dimension must be a non-negative integer")
    cap = max_n()
    if n > cap:
        raise InputError("dimension %d exceeds FILIFORM_MAX_N=%d" % (n, cap))
    return n


# ---------------------------------------------------------------------------
# schemas


def _q(c) -> str:
    return format_rational(Fraction(c))


def _rat(s) -> Fraction:
    if isinstance(s, bool):
        raise InputError("expected a rational, got %r" % s)
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputError("rationals are strings \"p/q\", got %r" % (s,))
    try:
        return parse_rational(s)
    except (ValueError, ZeroDivisionError):
        raise InputError("not a rational: %r" % s) from None


def _field(d: dict, key: str, kind=None):
    if not isinstance(d, dict):
        raise InputError("expected an object, got %s" % type(d).__name__)
    if key not in d:
        raise InputError("missing field %r" % key)
    v = d[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise InputError("field %r must be an integer" % key)
    if kind is list and not isinstance(v, list):
        raise InputError("field %r must be a list" % key)
    return v


def algebra_to_json(g: LieAlgebra) -> dict:
    rows = []
    for (i, j), terms in sorted(g.brackets.items()):
        rows.append({"i": i, "j": j,
                     "terms": [{"k": k, "c": _q(c)} for k, c in sorted(terms.items())]})
    return {"name": g.name, "dim": g.n, "weights": list(g.weights), "flavor": g.flavor,
            "brackets": rows}


def algebra_from_json(d: dict) -> LieAlgebra:
    n = check_dim(_field(d, "dim", int))
    br = {}
    for row in _field(d, "brackets", list):
        i, j = _field(row, "i", int), _field(row, "j", int)
        if (i, j) in br:
            raise InputError("bracket (%d, %d) given twice" % (i, j))
        br[i, j] = {_field(t, "k", int): _rat(_field(t, "c")) for t in _field(row, "terms", list)}
    try:
        return LieAlgebra(n, br, tuple(d.get("weights") or ()), d.get("flavor", "plain"),
                          d.get("name", ""))
    except LieAlgebraError as exc:
        raise InputError(str(exc)) from None


def cochain_to_json(c: Cochain) -> dict:
    terms = []
    for (t, idx), a in sorted(c.terms.items()):
        row = {"idx": list(idx), "c": _q(a)}
        if c.coeff == ADJOINT:
            row = {"k": t, **row}
        terms.append(row)
    return {"n": c.n, "q": c.q, "coeff": c.coeff, "terms": terms}


def cochain_from_json(d: dict) -> Cochain:
    n = check_dim(_field(d, "n", int))
    q = _field(d, "q", int)
    coeff = _field(d, "coeff")
    if coeff not in COEFFS:
        raise InputError("coeff must be one of %s" % ", ".join(COEFFS))
    terms = {}
    for row in _field(d, "terms", list):
        t = _field(row, "k", int) if coeff == ADJOINT else 0
        terms[t, tuple(_field(row, "idx", list))] = _rat(_field(row, "c"))
    try:
        return Cochain(n, q, coeff, terms)
    except CochainError as exc:
        raise InputError(str(exc)) from None


def form_to_json(w: Cochain) -> dict:
    """TwoForm schema for 2-forms; ``{"i", "c"}`` rows for 1-forms."""
    if w.coeff != TRIVIAL or w.q not in (1, 2):
        raise ValueError("form schema covers trivial 1- and 2-forms")
    if w.q == 1:
        rows = [{"i": idx[0], "c": _q(c)} for (_, idx), c in sorted(w.terms.items())]
    else:
        rows = [{"i": idx[0], "j": idx[1], "c": _q(c)} for (_, idx), c in sorted(w.terms.items())]
    return {"n": w.n, "terms": rows}


def form_from_json(d: dict, q: int = 2) -> Cochain:
    n = check_dim(_field(d, "n", int))
    entries = {}
    for row in _field(d, "terms", list):
        idx = (_field(row, "i", int),) if q == 1 else (_field(row, "i", int), _field(row, "j", int))
        entries[idx] = entries.get(idx, 0) + _rat(_field(row, "c"))
    try:
        return Cochain.form(n, entries)
    except (CochainError, ValueError) as exc:
        raise InputError(str(exc)) from None


def deformation_to_json(p: Deformation) -> dict:
    comps = []
    for l, c in p.components.items():
        rows = [{"i": i, "j": j, "k": k, "c": _q(a)} for (k, (i, j)), a in sorted(c.terms.items())]
        comps.append({"weight": l, "terms": rows})
    return {"n": p.n, "components": comps}


def deformation_from_json(d: dict) -> Deformation:
    n = check_dim(_field(d, "n", int))
    comps = {}
    for comp in _field(d, "components", list):
        l = _field(comp, "weight", int)
        terms = {}
        for row in _field(comp, "terms", list):
            key = (_field(row, "k", int), (_field(row, "i", int), _field(row, "j", int)))
            terms[key] = terms.get(key, 0) + _rat(_field(row, "c"))
        try:
            c = Cochain(n, 2, ADJOINT, terms)
        except CochainError as exc:
            raise InputError(str(exc)) from None
        comps[l] = comps[l] + c if l in comps else c
    try:
        return Deformation(n, comps)
    except DeformationError as exc:
        raise InputError(str(exc)) from None


def point_to_json(p: ModuliPoint) -> dict:
    return {"n": p.n, "x": [_q(a) for a in p.x]}


def point_from_json(d: dict) -> ModuliPoint:
    n = check_dim(_field(d, "n", int))
    x = _field(d, "x", list)
    if len(x) != 5:
        raise InputError("a moduli point has five coordinates")
    return ModuliPoint(n, tuple(_rat(a) for a in x))


def basis_change_to_json(phi: BasisChange) -> dict:
    return {"n": phi.n,
            "columns": [[{"k": k, "c": _q(c)} for k, c in sorted(col.items())] for col in phi.columns]}


def report_to_json(rep) -> dict:
    blocks = []
    for b in rep.blocks:
        row = {"weight": b.weight, "dim_c": b.dim_c, "dim_z": b.dim_z, "dim_b": b.dim_b,
               "dim_h": b.dim_h}
        if b.reps:
            row["reps"] = [cochain_to_json(c) for c in b.reps]
        blocks.append(row)
    return {"degree": rep.q, "coeff": rep.coeff, "total": rep.total, "blocks": blocks}


# ---------------------------------------------------------------------------
# input


def load_json(path: str) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s: malformed JSON at line %d column %d (char %d): %s"
                         % (path, exc.lineno, exc.colno, exc.pos, exc.msg)) from None


def digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def bundle(command: str, inputs: list[str], result: dict) -> dict:
    return {"tool": "filiform", "version": __version__, "command": command,
            "inputs": {p: digest(p) for p in inputs}, "result": result}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                out.append("%s%s:" % (pad, k))
                out.extend(_text(v, indent + 1))
            else:
                out.append("%s%s: %s" % (pad, k, v))
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                out.append("%s-" % pad)
                out.extend(_text(v, indent + 1))
            else:
                out.append("%s- %s" % (pad, v))
    else:
        out.append(pad + str(obj))
    return out


def cohomology_table(result: dict) -> str:
    lines = ["H^%d (%s)  total %d" % (result["degree"], result["coeff"], result["total"]),
             "%8s %6s %6s %6s %6s" % ("weight", "dim C", "dim Z", "dim B", "dim H")]
    for b in result["blocks"]:
        if not b["dim_h"] and b["weight"] is not None:
            continue
        w = "-" if b["weight"] is None else b["weight"]
        lines.append("%8s %6d %6d %6d %6d" % (w, b["dim_c"], b["dim_z"], b["dim_b"], b["dim_h"]))
    return "\n".join(lines)


def emit(args, command: str, inputs: list[str], result: dict,
         text: Callable[[dict], str] | None = None) -> None:
    if args.json:
        sys.stdout.write(dumps(bundle(command, inputs, result)))
    elif text is not None:
        sys.stdout.write(text(result) + "\n")
    else:
        sys.stdout.write("\n".join(_text(result)) + "\n")


def write_or_print(obj, out: str | None) -> None:
    if out:
        Path(out).write_text(dumps(obj))
    else:
        sys.stdout.write(dumps(obj))


# ---------------------------------------------------------------------------
# commands


def cmd_algebra_verify(args) -> int:
    g = algebra_from_json(load_json(args.file))
    res = jacobi_residual(g)
    rows = [{"triple": list(t), "residual": {str(k): _q(c) for k, c in sorted(v.items())}}
            for t, v in res]
    emit(args, "algebra verify", [args.file],
         {"name": g.name, "dim": g.n, "jacobi_ok": not rows, "residual": rows})
    return 0 if not rows else 1


def _parse_x(raw: str | None, count: int = 4) -> tuple:
    if raw is None:
        return (0,) * count
    parts = [p for p in raw.split(",") if p.strip()]
    if len(parts) != count:
        raise InputError("--x needs %d comma-separated rationals" % count)
    return tuple(_rat(p.strip()) for p in parts)


ALGEBRA_NAMES = ("v", "m0", "m1", "m2", "abelian", "heisenberg", "g8", "g10", "gx")


def _catalog_algebra(name: str, dim: int | None, param, x) -> LieAlgebra:
    need_dim = name in ("v", "m0", "m1", "m2", "abelian", "gx")
    if need_dim and dim is None:
        raise InputError("catalog %s needs --dim" % name)
    if dim is not None:
        check_dim(dim)
    if name in ("g8", "g10") and param is None:
        raise InputError("catalog %s needs --param" % name)
    build = {
        "v": lambda: catalog.V(dim),
        "m0": lambda: catalog.m0(dim),
        "m1": lambda: catalog.m1(dim),
        "m2": lambda: catalog.m2(dim),
        "abelian": lambda: catalog.abelian(dim),
        "heisenberg": catalog.heisenberg,
        "g8": lambda: catalog.g8(param),
        "g10": lambda: catalog.g10(param),
        "gx": lambda: catalog.gX(dim, x),
    }
    return build[name]()


def cmd_catalog(args) -> int:
    name = args.name.lower()
    param = _rat(args.param) if args.param is not None else None
    try:
        if name == "psi":
            if args.n is None or args.l is None:
                raise InputError("catalog psi needs --n and --l")
            obj = cochain_to_json(catalog.psi(check_dim(args.n), args.l))
        elif name == "form":
            of = (args.of or "").lower()
            if of == "gx":
                if args.dim is None:
                    raise InputError("catalog form --of gx needs --dim")
                w = catalog.omega_X(check_dim(args.dim), _parse_x(args.x),
                                    _rat(args.x5) if args.x5 else 0)
            else:
                key = {"v": "V", "m0": "m0", "g8": "g8", "g10": "g10"}.get(of)
                if key is None:
                    raise InputError("catalog form --of must be one of v, m0, g8, g10, gx")
                w = catalog.omega_catalog(key, args.dim, param)
            obj = form_to_json(w)
        elif name in ALGEBRA_NAMES:
            obj = algebra_to_json(_catalog_algebra(name, args.dim, param, _parse_x(args.x)))
        else:
            raise InputError("unknown catalog entry %r" % args.name)
    except (catalog.CatalogError, LieAlgebraError, CochainError) as exc:
        raise InputError(str(exc)) from None
    write_or_print(obj, args.out)
    return 0


def cmd_cohomology(args) -> int:
    g = algebra_from_json(load_json(args.file))
    weights = [args.weight] if args.weight is not None else None
    rep = cohomology(g, args.deg, args.coeff, weights=weights, reps=args.reps)
    emit(args, "cohomology", [args.file], report_to_json(rep), cohomology_table)
    return 0


def _load_deformation_or_algebra(path: str) -> Deformation:
    d = load_json(path)
    if isinstance(d, dict) and "components" in d:
        return deformation_from_json(d)
    g = algebra_from_json(d)
    try:
        return extract_deformation(g, catalog.V(g.n))
    except DeformationError as exc:
        raise InputError(str(exc)) from None


def cmd_deform_residual(args) -> int:
    p = _load_deformation_or_algebra(args.file)
    v = catalog.V(p.n)
    r = deformation_residual(v, p)
    comps = r.components(v.weights)
    result = {"n": p.n, "zero": r.is_zero(),
              "nonzero_weights": sorted(comps),
              "terms": len(r.terms)}
    emit(args, "deform residual", [args.file], result)
    return 0 if r.is_zero() else 1


def cmd_deform_canonicalize(args) -> int:
    p = _load_deformation_or_algebra(args.file)
    try:
        pt, trail = canonicalize(p)
    except DeformationError as exc:
        raise InputError(str(exc)) from None
    result = {"point": point_to_json(pt), "trail": [basis_change_to_json(s) for s in trail]}
    emit(args, "deform canonicalize", [args.file], result)
    return 0


def _alphas(a) -> list[str]:
    return [_q(x) for x in sorted(a)]


def cmd_deform_orbit_eq(args) -> int:
    p, q = point_from_json(load_json(args.p)), point_from_json(load_json(args.q))
    try:
        a = orbit_equivalent(p, q)
    except (DeformationError, FactorizationOverflow) as exc:
        raise InputError(str(exc)) from None
    if a == ANY:
        result = {"equivalent": True, "alpha": ANY}
    else:
        result = {"equivalent": a is not None, "alpha": _alphas(a) if a else []}
    emit(args, "deform orbit-eq", [args.p, args.q], result)
    return 0 if result["equivalent"] else 1


def cmd_deform_normal_form(args) -> int:
    p = point_from_json(load_json(args.file))
    try:
        q = moduli_normal_form(p)
    except FactorizationOverflow as exc:
        raise InputError(str(exc)) from None
    result = {"normal_form": point_to_json(q)}
    if p.n >= 16:
        result["nonsingular"] = nonsingular_classify(p)
    emit(args, "deform normal-form", [args.file], result)
    return 0


def cmd_deform_tangent_dims(args) -> int:
    p = _load_deformation_or_algebra(args.file)
    try:
        t = tangent_dims(catalog.V(p.n), p)
    except DeformationError as exc:
        raise InputError(str(exc)) from None
    emit(args, "deform tangent-dims", [args.file],
         {"n": p.n, "kernel_c1": t.kernel_c1, "orbit_dim": t.orbit_dim, "z2": t.z2,
          "stabilizer": t.stabilizer})
    return 0


def cmd_deform_massey(args) -> int:
    p = _load_deformation_or_algebra(args.file)
    try:
        o = massey_obstruction(catalog.V(p.n), p.components, args.k)
    except DeformationError as exc:
        raise InputError(str(exc)) from None
    emit(args, "deform massey", [args.file],
         {"weight": o.weight, "zero": o.is_zero, "coordinates": [_q(c) for c in o.coordinates],
          "representative": cochain_to_json(o.representative)})
    return 0 if o.is_zero else 1


def cmd_symplectic_decide(args) -> int:
    g = algebra_from_json(load_json(args.file))
    try:
        dec = symplectic_decision(g, seed=args.seed, trials=args.trials)
    except SymplecticError as exc:
        raise InputError(str(exc)) from None
    result = {"verdict": dec.verdict, "trials": dec.trials, "seed": args.seed}
    if dec.witness is not None:
        result["witness"] = form_to_json(dec.witness)
    if dec.certificate:
        result["certificate"] = dec.certificate
    emit(args, "symplectic decide", [args.file], result)
    return 0 if dec.verdict == EXISTS else 1


def _algebra_and_form(args, q: int = 2):
    g = algebra_from_json(load_json(args.file))
    w = form_from_json(load_json(args.form), q)
    if w.n != g.n:
        raise InputError("form has dimension %d, algebra %d" % (w.n, g.n))
    return g, w


def cmd_symplectic_verify(args) -> int:
    g, w = _algebra_and_form(args)
    closed, nondeg = is_closed(g, w), nondegenerate(g, w)
    emit(args, "symplectic verify", [args.file, args.form],
         {"closed": closed, "nondegenerate": nondeg, "symplectic": closed and nondeg})
    return 0 if closed and nondeg else 1


def cmd_extend(args) -> int:
    g, w = _algebra_and_form(args)
    try:
        h = central_extension(g, w)
    except SymplecticError as exc:
        raise InputError(str(exc)) from None
    write_or_print(algebra_to_json(h), args.out)
    if args.out:
        sys.stderr.write("extension of dimension %d written to %s (filiform: %s)\n"
                         % (h.n, args.out, is_filiform(h)))
    return 0


def cmd_contact(args) -> int:
    g, theta = _algebra_and_form(args, 1)
    try:
        ok = contact_check(g, theta)
    except SymplecticError as exc:
        raise InputError(str(exc)) from None
    emit(args, "contact", [args.file, args.form], {"contact": ok})
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# golden tables


def _poly_table() -> dict:
    return {fam: {str(j): _q(catalog.poly(fam, j)) for j in range(2, 13)}
            for fam in catalog.POLY_FAMILIES}


def table_catalog() -> dict:
    algebras = {
        "V6": catalog.V(6), "m0_8": catalog.m0(8), "m1_8": catalog.m1(8), "m2_8": catalog.m2(8),
        "heisenberg": catalog.heisenberg(), "g8_1": catalog.g8(1), "g10_1": catalog.g10(1),
        "gX16_1_2_3_4": catalog.gX(16, (1, 2, 3, 4)),
    }
    forms = {
        "m0_8": catalog.omega_catalog("m0", 8), "V8": catalog.omega_catalog("V", 8),
        "g8_1": catalog.omega_catalog("g8", alpha=1), "g10_1": catalog.omega_catalog("g10", alpha=1),
        "OmegaX16_1_2_3_4_5": catalog.omega_X(16, (1, 2, 3, 4), 5),
    }
    return {
        "algebras": {k: algebra_to_json(g) for k, g in algebras.items()},
        "forms": {k: form_to_json(w) for k, w in forms.items()},
        "psi16": {str(l): cochain_to_json(catalog.psi(16, l)) for l in catalog.PSI_LEVELS},
        "polynomials": _poly_table(),
    }


def _dims(g, q, coeff) -> dict:
    return {str(w): d for w, d in cohomology(g, q, coeff).dims().items()}


def table_cohomology(ns=range(12, 21)) -> dict:
    out = {}
    for n in ns:
        v = catalog.V(n)
        out[str(n)] = {
            "adjoint": {"H0": _dims(v, 0, ADJOINT), "H1": _dims(v, 1, ADJOINT),
                        "H2": _dims(v, 2, ADJOINT)},
            "trivial": {"H2": _dims(v, 2, TRIVIAL), "H3": _dims(v, 3, TRIVIAL)},
        }
    return out


def _random_unitriangular(n: int, rng: random.Random) -> BasisChange:
    cols = []
    for i in range(1, n + 1):
        col = {i: Fraction(1)}
        for k in range(i + 1, n + 1):
            if rng.random() < 0.3:
                col[k] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        cols.append(col)
    return BasisChange(n, tuple(cols))


def moduli_round_trip(n: int, rng: random.Random) -> dict:
    x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5))
    v = catalog.V(n)
    g = apply_basis_change(deform(v, catalog.psi_sum(n, x)), _random_unitriangular(n, rng))
    pt, trail = canonicalize(extract_deformation(g, v))
    return {"n": n, "x": [_q(a) for a in x], "recovered": [_q(a) for a in pt.x],
            "steps": len(trail), "normal_form": point_to_json(moduli_normal_form(pt))["x"]}


def table_moduli(seed: int = 0) -> dict:
    rng = random.Random(seed)
    return {"seed": seed, "round_trips": [moduli_round_trip(16, rng) for _ in range(3)]}


SECTIONS: dict[str, Callable[[], dict]] = {
    "catalog": table_catalog,
    "cohomology": table_cohomology,
    "moduli": table_moduli,
}


def first_divergence(expected, actual, path: str = "") -> str | None:
    """Path of the first differing cell, or None."""
    if isinstance(expected, dict) and isinstance(actual, dict):
        for k in list(expected) + [k for k in actual if k not in expected]:
            if k not in expected or k not in actual:
                return "%s/%s" % (path, k)
            hit = first_divergence(expected[k], actual[k], "%s/%s" % (path, k))
            if hit:
                return hit
        return None
    if isinstance(expected, list) and isinstance(actual, list):
        for i, (a, b) in enumerate(zip(expected, actual)):
            hit = first_divergence(a, b, "%s[%d]" % (path, i))
            if hit:
                return hit
        if len(expected) != len(actual):
            return "%s[%d]" % (path, min(len(expected), len(actual)))
        return None
    return None if expected == actual else path or "/"


def _lookup(obj, path: str):
    for part in re.findall(r"/([^/\[]+)|\[(\d+)\]", path):
        key, idx = part
        try:
            obj = obj[int(idx)] if idx else obj[key]
        except (KeyError, IndexError, TypeError):
            return None
    return obj


def cmd_paper_tables(args) -> int:
    gdir = Path(args.golden_dir) if args.golden_dir else GOLDEN_DIR
    names = args.section or list(SECTIONS)
    status = {}
    failed = False
    for name in names:
        fresh = SECTIONS[name]()
        path = gdir / ("%s.json" % name)
        if args.write:
            gdir.mkdir(parents=True, exist_ok=True)
            path.write_text(dumps(fresh))
            status[name] = "written"
            continue
        if not path.exists():
            status[name] = {"status": "missing", "file": str(path)}
            failed = True
            continue
        try:
            golden = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise InputError("%s: malformed JSON at line %d column %d" % (path, exc.lineno, exc.colno)) from None
        cell = first_divergence(golden, json.loads(dumps(fresh)))
        if cell is None:
            status[name] = "ok"
        else:
            failed = True
            status[name] = {"status": "mismatch", "cell": name + cell,
                            "golden": _lookup(golden, cell), "computed": _lookup(fresh, cell)}
    emit(args, "paper-tables", [], {"sections": status})
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")

    ap = argparse.ArgumentParser(prog="filiform", description="Exact cohomology and deformations "
                                 "of filiform Lie algebras.")
    ap.add_argument("--version", action="version", version="filiform " + __version__)
    sub = ap.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("algebra", help="algebra utilities").add_subparsers(dest="sub", required=True)
    p = alg.add_parser("verify", parents=[common], help="Jacobi residual report")
    p.add_argument("file")
    p.set_defaults(func=cmd_algebra_verify)

    p = sub.add_parser("catalog", parents=[common], help="emit catalog algebras, forms and cocycles")
    p.add_argument("name", help="%s, psi or form" % ", ".join(ALGEBRA_NAMES))
    p.add_argument("--param", help="alpha for g8/g10")
    p.add_argument("--dim", type=int)
    p.add_argument("--x", help="x1,x2,x3,x4 for gx")
    p.add_argument("--x5", help="x5 for the gx form")
    p.add_argument("--of", help="algebra whose form to emit (with name 'form')")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("cohomology", parents=[common], help="per-weight cohomology table")
    p.add_argument("file")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--coeff", choices=COEFFS, default=ADJOINT)
    p.add_argument("--weight", type=int)
    p.add_argument("--reps", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    dfm = sub.add_parser("deform", help="deformations of V_n").add_subparsers(dest="sub", required=True)
    for name, func, help_ in (("residual", cmd_deform_residual, "deformation residual"),
                              ("canonicalize", cmd_deform_canonicalize, "moduli coordinates"),
                              ("normal-form", cmd_deform_normal_form, "orbit representative"),
                              ("tangent-dims", cmd_deform_tangent_dims, "kernel/orbit/Z2 dims")):
        p = dfm.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.set_defaults(func=func)
    p = dfm.add_parser("orbit-eq", parents=[common], help="weighted-orbit equivalence")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_deform_orbit_eq)
    p = dfm.add_parser("massey", parents=[common], help="obstruction class at weight k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_deform_massey)

    sym = sub.add_parser("symplectic", help="symplectic structures").add_subparsers(dest="sub", required=True)
    p = sym.add_parser("decide", parents=[common], help="existence decision")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.set_defaults(func=cmd_symplectic_decide)
    p = sym.add_parser("verify", parents=[common], help="check a 2-form")
    p.add_argument("file")
    p.add_argument("form")
    p.set_defaults(func=cmd_symplectic_verify)

    p = sub.add_parser("extend", parents=[common], help="central extension by a closed 2-form")
    p.add_argument("file")
    p.add_argument("form")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("contact", parents=[common], help="contact check for a 1-form")
    p.add_argument("file")
    p.add_argument("form")
    p.set_defaults(func=cmd_contact)

    p = sub.add_parser("paper-tables", parents=[common], help="regenerate and diff golden tables")
    p.add_argument("--golden-dir")
    p.add_argument("--section", action="append", choices=list(SECTIONS))
    p.add_argument("--write", action="store_true", help="overwrite the golden files")
    p.set_defaults(func=cmd_paper_tables)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write("filiform: error: %s\n" % exc)
        return 2
    except (LieAlgebraError, CochainError, DeformationError, SymplecticError,
            catalog.CatalogError, FactorizationOverflow) as exc:
        sys.stderr.write("filiform: error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
