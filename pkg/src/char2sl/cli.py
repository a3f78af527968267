"""Command-line entry point: ``char2sl <command> [options]``.

Exit status: 0 on success or pass, 1 when a verification fails, 2 on usage
or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .bilinear import are_congruent_proj, classify_outer
from .errors import Char2Error
from .fields import parse_field
from .fixed_points import enumerate_fixed_group, predicate_set
from .involutions import (
    OUTER,
    Automorphism,
    are_isomorphic,
    canonical_matrix,
    classify_inner,
    is_involution,
    make_L_np,
)
from .serialize import automorphism_from_json, dumps, matrix_to_json
from .smallfield import DEFAULT_BUDGET
from .variety import audit_formula_n2, enumerate_variety

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

def _read_json(path):
    try:
        text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def _field(args, required=True):
    if args.field is None:
        if required:
            raise UsageError("--field is required")
        return None
    return parse_field(args.field)


def _automorphism(obj, args) -> Automorphism:
    """Automorphism JSON, or a bare matrix (rows list / Matrix JSON) read as inner."""
    field = _field(args, required=False)
    if isinstance(obj, dict) and "A" in obj:
        phi = automorphism_from_json(obj, field, args.n)
    elif isinstance(obj, (list, dict)):
        if isinstance(obj, list) and field is None:
            raise UsageError("a bare matrix needs --field")
        phi = automorphism_from_json({"parity": args.parity, "A": obj}, field, args.n)
    else:
        raise UsageError("expected an automorphism or matrix")
    if not is_involution(phi):
        raise UsageError("the automorphism is not an involution")
    return phi


def _witness_json(parity, C, p):
    key = "Q" if parity == OUTER else "C"
    return {key: matrix_to_json(C), "p": p.field.format_element(p)}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _label_and_witness(phi):
    A = phi.mat
    if phi.parity == OUTER:
        label = classify_outer(A)
        canon = canonical_matrix(label, phi.n, phi.field)
        _, (Q, p) = are_congruent_proj(A, canon)
        return label, canon, _witness_json(OUTER, Q, p)
    r = classify_inner(A)
    return r.label, r.canonical, _witness_json(phi.parity, r.C, r.p)


def cmd_classify(args):
    phi = _automorphism(_read_json(args.input), args)
    label, canon, witness = _label_and_witness(phi)
    return EXIT_OK, {"parity": phi.parity, "label": label.to_json(),
                     "canonical": matrix_to_json(canon), "witness": witness}


def cmd_iso_test(args):
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise UsageError("--p and --q go together")
        F = _field(args)
        n = args.n or 2
        phis = [Automorphism.inner(make_L_np(F, n, F.parse_element(s))) for s in (args.p, args.q)]
        for phi in phis:
            if not is_involution(phi):
                raise UsageError("p and q must be nonzero")
    else:
        if len(args.inputs) == 2:
            objs = [_read_json(path) for path in args.inputs]
        elif len(args.inputs) <= 1:
            objs = _read_json(args.inputs[0] if args.inputs else None)
            if not isinstance(objs, list) or len(objs) != 2 or not all(isinstance(o, (dict, list)) for o in objs):
                raise UsageError("expected a JSON array of two automorphisms")
        else:
            raise UsageError("iso-test takes at most two input files")
        phis = [_automorphism(o, args) for o in objs]
    ok, wit = are_isomorphic(*phis)
    return EXIT_OK, {"isomorphic": ok,
                     "witness": None if wit is None else _witness_json(phis[0].parity, *wit)}


def cmd_fixed_points(args):
    phi = _automorphism(_read_json(args.input), args)
    if not phi.field.is_finite:
        raise UsageError("fixed-point enumeration needs a finite field")
    label = classify_outer(phi.mat) if phi.parity == OUTER else classify_inner(phi.mat).label
    rep = enumerate_fixed_group(phi, args.budget, seed=args.seed, label=label)
    out = rep.to_json()
    if phi.parity == OUTER:
        pred = predicate_set(label, phi.field, phi.n, args.budget, A=phi.mat)
    else:
        # the coordinate description is stated for the canonical representative
        pred = predicate_set(label, phi.field, phi.n, args.budget) if phi.mat == canonical_matrix(
            label, phi.n, phi.field) else None
    out["predicate_agrees"] = None if pred is None else pred == sorted(rep.encoded)
    return EXIT_OK, out


def cmd_variety(args):
    phi = _automorphism(_read_json(args.input), args)
    if not phi.field.is_finite:
        raise UsageError("variety enumeration needs a finite field")
    out = enumerate_variety(phi, args.budget).to_json()
    if args.audit is not None:
        if phi.n != 2:
            raise UsageError("the formula audit is for n = 2")
        out["audit"] = audit_formula_n2(phi.field, phi.field.parse_element(args.audit), args.budget).to_json()
    return EXIT_OK, out


def cmd_verify(args):
    field = _field(args, required=False)
    tags = args.tags or list(oracle.TAGS)
    for t in tags:
        if t not in oracle.TAGS:
            raise UsageError(f"unknown tag {t!r}; known: {', '.join(oracle.TAGS)}")
    reports = [oracle.verify_theorem(t, field=field, n=args.n, budget=args.budget, seed=args.seed) for t in tags]
    ok = all(r.passed for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), {"passed": ok, "reports": [r.to_json() for r in reports]}


def cmd_census(args):
    field = _field(args)
    if args.n is None:
        raise UsageError("--n is required")
    if not field.is_finite:
        raise UsageError("census needs a finite field")
    rep = oracle.involution_census(field, args.n, args.budget)
    return (EXIT_OK if rep.passed else EXIT_FAIL), rep.to_json()


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _is_matrix(v):
    return isinstance(v, list) and v and all(isinstance(r, list) and r and all(isinstance(c, str) for c in r)
                                             for r in v)


def _render(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        if set(obj) == {"field", "n", "rows"}:
            return _render(obj["rows"], indent)
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not (isinstance(v, list) and all(
                    isinstance(x, (str, int, float, bool)) or x is None for x in v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if _is_matrix(obj):
        width = max(len(c) for r in obj for c in r)
        return [pad + "[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in obj]
    if isinstance(obj, list):
        for i, v in enumerate(obj):
            lines.append(f"{pad}- [{i}]")
            lines.extend(_render(v, indent + 1))
        return lines
    return [pad + json.dumps(obj)]


def render_text(obj) -> str:
    return "\n".join(_render(obj))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field descriptor: gf2, gf2e:r=<r>[:mod=<hex>], ratfunc:q=<2^r>")
    common.add_argument("--n", type=int, help="matrix dimension")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum enumeration size")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    parser = argparse.ArgumentParser(prog="char2sl", description="Involutions of SL(n, k) in characteristic 2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def automorphism_cmd(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("input", nargs="?", help="JSON file (default: stdin)")
        p.add_argument("--parity", choices=("inner", "outer"), default="inner",
                       help="parity when the input is a bare matrix")
        return p

    automorphism_cmd("classify", "label an involution and give a witness").set_defaults(func=cmd_classify)
    p = sub.add_parser("iso-test", parents=[common], help="decide isomorphy of two involutions")
    p.add_argument("inputs", nargs="*", help="one file with a two-element array, or two files")
    p.add_argument("--parity", choices=("inner", "outer"), default="inner")
    p.add_argument("--p", help="compare L_p with L_q (inner, block-diagonal)")
    p.add_argument("--q", help="see --p")
    p.set_defaults(func=cmd_iso_test)
    automorphism_cmd("fixed-points", "enumerate the fixed-point group").set_defaults(func=cmd_fixed_points)
    p = automorphism_cmd("variety", "enumerate the symmetric variety")
    p.add_argument("--audit", metavar="P", help="also audit the n = 2 semisimplicity formula for L_P")
    p.set_defaults(func=cmd_variety)
    p = sub.add_parser("verify", parents=[common], help="run theorem suites")
    p.add_argument("tags", nargs="*", help=f"subset of: {' '.join(oracle.TAGS)}")
    p.set_defaults(func=cmd_verify)
    sub.add_parser("census", parents=[common], help="exhaustive involution census").set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.func(args)
    except (UsageError, Char2Error, ValueError) as exc:
        print(f"char2sl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps(payload) if args.format == "json" else render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
