"""Command-line front end.

Every analysis command reads a model (a JSON file, ``-`` for stdin, or
``catalog:NAME``) and prints a deterministic report. Exit status is 0 when all
verifications pass, 1 when some verification reports a defect, and 2 on input
errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from typing import Callable

from . import __version__, catalog
from .centre import (
    CentreElement,
    bracket_forms,
    centre_algebra,
    centre_bcm,
    centre_carrier,
    delta_matrix,
    six_term_report,
)
from .cohomology import (
    _setup,
    cohomology,
    g_matrix,
    obstruction_g,
    obstruction_sequence_report,
    pi1_centre_iso,
)
from .crossed import homotopy, validate_braided, validate_crossed
from .exact_linalg import FieldSpec, Matrix, ModP, Subspace
from .guin import guin_h, verify_guin_diagram
from .lie2cat import CatMorphism, tau_family, verify_category_laws, verify_centre_category
from .modelio import Model, ModelError, crossed_to_json, lie_to_json, loads_model

__all__ = ["main", "run"]


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# plain-data conversion

def _plain(F: FieldSpec, obj):
    if isinstance(obj, (Fraction, ModP)):
        return F.format(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _plain(F, v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(F, v) for v in obj]
    if isinstance(obj, Matrix):
        return [_plain(F, r) for r in obj.rows]
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": _plain(F, obj.basis)}
    if isinstance(obj, CentreElement):
        return {"x": _plain(F, obj.x), "xi": _plain(F, obj.xi.columns())}
    if isinstance(obj, CatMorphism):
        return {"source": _plain(F, obj.source), "label": _plain(F, obj.label),
                "target": _plain(F, obj.target)}
    return str(obj)


# ---------------------------------------------------------------------------
# analyses: each returns (results, ok)

def a_validate(m: Model):
    X = m.xmod
    F = X.field
    res = {"crossed_violations": [v.describe(F) for v in validate_crossed(X)]}
    if m.braided is not None:
        res["braided_violations"] = [v.describe(F) for v in validate_braided(m.braided)]
    ok = not any(res.values())
    res["valid"] = ok
    return res, ok


def a_homotopy(m: Model):
    X = m.xmod
    h = homotopy(X)
    return {
        "pi0": lie_to_json(h.pi0),
        "pi1": h.pi1,
        "image": h.image,
        "induced_action": h.induced_action.action,
    }, True


def a_centre(m: Model):
    X = m.xmod
    Z = centre_carrier(X)
    els = Z.elements()
    B = centre_bcm(X)
    viol = [v.describe(X.field) for v in validate_braided(B.bcm)]
    forms_ok = True
    for p in els:
        for q in els:
            a, b, c = bracket_forms(X, p, q)
            forms_ok = forms_ok and a == b == c
    res = {
        "dim_Z0": Z.dim,
        "basis": els,
        "braiding": B.bcm.braiding,
        "bracket": lie_to_json(centre_algebra(X)),
        "delta": [list(c) for c in delta_matrix(X).columns()],
        "braided_violations": viol,
        "bracket_forms_agree": forms_ok,
    }
    return res, not viol and forms_ok


def a_quotient(m: Model):
    from .centre import action_and_quotient
    Q = action_and_quotient(m.xmod)
    viol = [v.describe(Q.field) for v in validate_crossed(Q)]
    res = {"model": crossed_to_json(Q), "violations": viol}
    if not viol:
        h = homotopy(Q)
        res["dim_pi0"] = h.pi0.dim
        res["dim_pi1"] = h.pi1.dim
    return res, not viol


def a_cohomology(m: Model, deg: int):
    S = _setup(m.xmod)
    H = cohomology(S.pi0, S.module, deg)
    return {
        "degree": deg,
        "dim_cochains": H.cochains.dim,
        "dim_cocycles": H.cocycles.dim,
        "dim_coboundaries": H.coboundaries.dim,
        "dim": H.dim,
        "representatives": H.representatives(),
    }, True


def a_exact_seq(m: Model):
    X = m.xmod
    rep = obstruction_sequence_report(X)
    S = _setup(X)
    reps = [S.section.apply(v) for v in S.restricted.basis]
    checks_ok = all(all(obstruction_g(X, x).checks.values()) for x in reps)
    independent = g_matrix(X) == g_matrix(X, reverse=True)
    iso = pi1_centre_iso(X)
    res = rep.to_dict()
    res.update({
        "obstruction_checks": checks_ok,
        "complement_independent": independent,
        "pi1_iso": {"dim_ker_delta": iso.ker_delta.dim, "dim_H0": iso.h0.dim, "bijective": iso.bijective},
    })
    return res, rep.exact and checks_ok and independent and iso.bijective


def a_six_term(m: Model):
    rep = six_term_report(m.xmod)
    return rep.to_dict(), rep.exact


def a_guin(m: Model, strict: bool):
    X = m.xmod
    H0, H1 = guin_h(X, strict)
    rep = verify_guin_diagram(X, strict)
    res = rep.to_dict()
    res["sign_mode"] = "strict" if strict else "delta-compatible"
    res["H0_basis"] = H0.basis
    return res, rep.passed


def a_cat2(m: Model, check: bool):
    X = m.xmod
    res = {"tau_families": [tau_family(X, p) for p in centre_carrier(X).elements()]}
    ok = True
    if check:
        laws = verify_category_laws(X)
        cc = verify_centre_category(X)
        res["category_laws"] = laws.to_dict()
        res["centre_category"] = cc.to_dict()
        ok = laws.passed and cc.passed
    return res, ok


def a_report(m: Model, strict: bool = False):
    res, ok = {}, True
    r, v = a_validate(m)
    res["validate"] = r
    if not v:
        return res, False
    steps: list[tuple[str, Callable]] = [
        ("homotopy", a_homotopy),
        ("centre", a_centre),
        ("quotient", a_quotient),
        ("cohomology_0", lambda mm: a_cohomology(mm, 0)),
        ("cohomology_1", lambda mm: a_cohomology(mm, 1)),
        ("cohomology_2", lambda mm: a_cohomology(mm, 2)),
        ("exact_seq", a_exact_seq),
        ("six_term", a_six_term),
        ("guin", lambda mm: a_guin(mm, strict)),
        ("cat2", lambda mm: a_cat2(mm, True)),
    ]
    verdicts = {}
    for name, fn in steps:
        r, v = fn(m)
        res[name] = r
        verdicts[name] = v
        ok = ok and v
    res["verdicts"] = verdicts
    return res, ok


# ---------------------------------------------------------------------------
# input

def _load(source: str, field: FieldSpec | None) -> tuple[Model, str]:
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        try:
            X = catalog.builtin(name, field or FieldSpec.rationals()).xmod
        except KeyError as e:
            raise InputError(str(e.args[0])) from None
        text = _dumps(crossed_to_json(X))
        return Model(X), hashlib.sha256(text.encode()).hexdigest()
    if source == "-":
        raw = sys.stdin.buffer.read()
    else:
        try:
            with open(source, "rb") as fh:
                raw = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {source}: {e.strerror}") from None
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{source}: not UTF-8") from None
    try:
        model = loads_model(text, field)
    except ModelError as e:
        raise InputError(str(e)) from None
    except ValueError as e:
        raise InputError(f"$: {e}") from None
    return model, hashlib.sha256(raw).hexdigest()


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(pad + _inline(obj))
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(a, (dict, list)) for a in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_inline(a) for a in v) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


def _emit(payload: dict, as_text: bool, out) -> None:
    if as_text:
        out.write("\n".join(_text(payload)) + "\n")
    else:
        out.write(_dumps(payload) + "\n")


# ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xmodlie", description="Crossed modules of Lie algebras and their centres.")
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the model field: Q or Fp:<p>")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true", help="human-readable output")
    common.set_defaults(text=False)
    sub = p.add_subparsers(dest="command", required=True)

    def model_cmd(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("model", help="model file, '-' for stdin, or catalog:NAME")
        return sp

    model_cmd("validate", "check both crossed-module axiom systems (and braided ones if present)")
    model_cmd("homotopy", "pi0, pi1 and the induced action")
    model_cmd("centre", "the centre Z0 as a braided crossed module")
    model_cmd("quotient", "the crossed module Z0 -> L0")
    c = model_cmd("cohomology", "H^n(pi0, pi1)")
    c.add_argument("--deg", type=int, default=1, choices=(0, 1, 2))
    model_cmd("exact-seq", "0 -> H1 -> pi0(Z) -> Z_pi1(pi0) -> H2 and the obstruction map")
    model_cmd("six-term", "the six-term sequence of pi1/pi0 for Z -> L -> L//Z")
    g = model_cmd("guin", "Der, H0 and H1 and the comparison diagram with the centre")
    g.add_argument("--strict-paper-signs", dest="strict", action="store_true",
                   help="use eta_a(t) = t.a instead of the delta-compatible -t.a")
    k = model_cmd("cat2", "the Lie 2-algebra layer and the centre category")
    k.add_argument("--check", action="store_true", help="verify all laws")
    r = model_cmd("report", "run every analysis and aggregate verdicts")
    r.add_argument("--strict-paper-signs", dest="strict", action="store_true")

    cat = sub.add_parser("catalog", parents=[common], help="built-in examples")
    cat.add_argument("action", choices=("list", "dump"))
    cat.add_argument("name", nargs="?")
    return p


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = _parser().parse_args(argv)
    try:
        field = FieldSpec.parse(args.field) if args.field else None
    except ValueError as e:
        err.write(f"error: --field: {e}\n")
        return 2

    if args.command == "catalog":
        F = field or FieldSpec.rationals()
        if args.action == "list":
            rows = {n: catalog.builtin(n, F).notes for n in catalog.names()}
            _emit(rows, args.text, out)
            return 0
        if not args.name:
            err.write("error: catalog dump needs a NAME\n")
            return 2
        try:
            X = catalog.builtin(args.name, F).xmod
        except KeyError as e:
            err.write(f"error: {e.args[0]}\n")
            return 2
        _emit(crossed_to_json(X), args.text, out)
        return 0

    try:
        model, digest = _load(args.model, field)
    except InputError as e:
        err.write(f"error: {e}\n")
        return 2

    cmd = args.command
    if cmd == "validate":
        res, ok = a_validate(model)
    else:
        vres, valid = a_validate(model)
        if not valid:
            res, ok = {"validate": vres}, False
        elif cmd == "homotopy":
            res, ok = a_homotopy(model)
        elif cmd == "centre":
            res, ok = a_centre(model)
        elif cmd == "quotient":
            res, ok = a_quotient(model)
        elif cmd == "cohomology":
            res, ok = a_cohomology(model, args.deg)
        elif cmd == "exact-seq":
            res, ok = a_exact_seq(model)
        elif cmd == "six-term":
            res, ok = a_six_term(model)
        elif cmd == "guin":
            res, ok = a_guin(model, args.strict)
        elif cmd == "cat2":
            res, ok = a_cat2(model, args.check)
        else:
            res, ok = a_report(model, args.strict)

    F = model.xmod.field
    payload = {
        "command": cmd,
        "input": {"source": args.model, "sha256": digest},
        "field": "Q" if F.is_rational else f"Fp:{F.modulus}",
        "results": _plain(F, res),
        "ok": ok,
        "version": __version__,
    }
    _emit(payload, args.text, out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
