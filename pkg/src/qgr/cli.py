"""``qgr``: command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coeff import Scalar, ScalarDivisionError
from .dehom import DhomElem, gens_expand
from .grassmann import (
    GrassElem,
    InvalidPlueckerInput,
    commutation_check,
    embed,
    pluecker_relation,
    straighten,
    straighten_by_rewriting,
)
from .kernel import BACKEND
from .parser import ParseError, parse_and_eval
from .poset import all_maximal_paths, gk_dimension, hasse_dot, hilbert_dimension, maximal_path_length
from .qmatrix import (
    Ambient,
    IndexRangeError,
    MatAlgElem,
    TensorElem,
    lambda_coaction,
    quantum_determinant,
    quantum_minor,
)
from .textio import (
    dhom_to_json,
    format_terms,
    grass_to_json,
    matalg_to_json,
)
from .verify import ALIASES, SUITES, run_suite


class UsageError(Exception):
    pass


def _ints(text):
    text = text.strip().strip("[]{}")
    parts = text.replace(",", " ").split()
    if len(parts) == 1 and len(parts[0]) > 1:
        parts = list(parts[0])
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"expected a list of integers, got {text!r}") from None


def _q_value(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q-at expects a rational like 3/2, got {text!r}") from None


def _eval_scalar(c, x):
    try:
        return Scalar(c.evaluate(x))
    except (ZeroDivisionError, ScalarDivisionError):
        raise UsageError(f"a coefficient has a pole at q = {x}") from None


def render(value, args):
    """Text or JSON for a result value; ``--q-at`` evaluates coefficients."""
    x = _q_value(args.q_at) if args.q_at else None
    if isinstance(value, Scalar):
        if x is not None:
            v = value.evaluate(x)
            return json.dumps(str(v)) if args.json else str(v)
        return json.dumps(value.to_json()) if args.json else str(value)
    if isinstance(value, (MatAlgElem, GrassElem, DhomElem)):
        if x is not None:
            value = _with_terms(value, {k: _eval_scalar(c, x) for k, c in value.terms.items()})
        if args.json:
            if isinstance(value, MatAlgElem):
                return json.dumps(matalg_to_json(value))
            if isinstance(value, GrassElem):
                return json.dumps(grass_to_json(value))
            return json.dumps(dhom_to_json(value))
        return str(value)
    if args.json:
        return json.dumps(value)
    return str(value)


def _with_terms(value, terms):
    terms = {k: v for k, v in terms.items() if v}
    return type(value)._wrap(value.ambient, terms)


def _ambient(args, need=True):
    if args.m is None or args.n is None:
        if need:
            raise UsageError("--m and --n are required")
        return None
    if not (1 <= args.m <= args.n):
        raise UsageError("need 1 <= m <= n")
    return Ambient(args.m, args.n)


def _parse(args, context):
    amb = _ambient(args)
    return parse_and_eval(args.expr, amb, context)


# ---------------------------------------------------------------------------
# commands


def cmd_normal_form(args):
    print(render(_parse(args, "matalg"), args))
    return 0


def cmd_minor(args):
    amb = _ambient(args)
    cols = _ints(args.cols)
    rows = _ints(args.rows) if args.rows else tuple(range(1, len(cols) + 1))
    print(render(quantum_minor(rows, cols, amb), args))
    return 0


def cmd_straighten(args):
    g = _parse(args, "grass")
    if not isinstance(g, GrassElem):
        g = GrassElem.scalar(_ambient(args), g)
    out = straighten_by_rewriting(g) if args.strategy == "rewrite" else straighten(g)
    print(render(out, args))
    return 0


def cmd_pluecker(args):
    amb = _ambient(args)
    rel = pluecker_relation(_ints(args.J1 or ""), _ints(args.J2 or ""), _ints(args.K), amb)
    ok = embed(rel).is_zero()
    if args.json:
        print(json.dumps({"relation": grass_to_json(rel), "vanishes": ok}))
    else:
        print(render(rel, args))
        print("embedding vanishes" if ok else "embedding does NOT vanish")
    return 0 if ok else 1


def cmd_commutation(args):
    amb = _ambient(args)
    r = commutation_check(_ints(args.I), _ints(args.J), amb)
    if args.json:
        print(json.dumps({"s": r["s"], "defect": grass_to_json(r["defect"]), "conforms": r["conforms"]}))
    else:
        print(f"s = {r['s']}")
        print(f"defect = {render(r['defect'], args)}")
        print(f"conforms = {str(r['conforms']).lower()}")
    return 0 if r["conforms"] else 1


def cmd_hilbert(args):
    _ambient(args)
    if args.degree is None:
        raise UsageError("--degree is required")
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    if args.json:
        print(json.dumps([hilbert_dimension(args.m, args.n, d) for d in range(args.degree + 1)]))
    else:
        print(hilbert_dimension(args.m, args.n, args.degree))
    return 0


def cmd_paths(args):
    _ambient(args)
    if args.dot:
        print(hasse_dot(args.m, args.n))
        return 0
    length = maximal_path_length(args.m, args.n)
    if args.all:
        paths = all_maximal_paths(args.m, args.n)
        if args.json:
            print(json.dumps({"length": length, "paths": [[list(s) for s in p] for p in paths]}))
        else:
            for p in paths:
                print(" < ".join("[" + " ".join(map(str, s)) + "]" for s in p))
        return 0
    print(json.dumps({"length": length}) if args.json else length)
    return 0


def cmd_gk(args):
    _ambient(args)
    print(gk_dimension(args.m, args.n))
    return 0


def cmd_dehom_eval(args):
    d = _parse(args, "dhom")
    print(render(d, args))
    return 0


def cmd_gens_expand(args):
    amb = _ambient(args)
    e = gens_expand(_ints(args.I), amb)
    ok = e.evaluate() == DhomElem.brace(amb, _ints(args.I))
    if args.json:
        items = [{"word": [list(w) for w in word], "coeff": c.to_json()} for word, c in sorted(e.terms.items())]
        print(json.dumps({"expansion": items, "validated": ok}))
    else:
        print(e)
    return 0 if ok else 1


def cmd_coinv_check(args):
    amb = _ambient(args)
    from itertools import combinations

    D = quantum_determinant(Ambient(amb.m, amb.m))
    rows = tuple(range(1, amb.m + 1))
    sets = [_ints(args.J)] if args.J else list(combinations(range(1, amb.n + 1), amb.m))
    all_ok = True
    report = []
    for J in sets:
        x = quantum_minor(rows, J, amb)
        ok = lambda_coaction(x) == TensorElem.pure(D, x)
        all_ok &= ok
        report.append({"minor": list(J), "coinvariant": ok})
    if args.json:
        print(json.dumps(report))
    else:
        for r in report:
            print(f"[{' '.join(map(str, r['minor']))}]: {'PASS' if r['coinvariant'] else 'FAIL'}")
    return 0 if all_ok else 1


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [ALIASES.get(args.suite, args.suite)]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    if (args.m is None) != (args.n is None):
        raise UsageError("give both --m and --n, or neither")
    failed = 0
    payload = []
    for name in names:
        try:
            cases = run_suite(name, args.m, args.n, args.suite_filter)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        bad = sum(1 for c in cases if not c.passed)
        failed += bad
        if args.json:
            payload.append({"suite": name, "passed": bad == 0,
                            "cases": [{"key": c.key, "passed": c.passed, "detail": c.detail} for c in cases]})
        else:
            for c in cases:
                line = f"{'PASS' if c.passed else 'FAIL'}  {c.key}"
                if not c.passed and c.detail:
                    line += f"  [{c.detail}]"
                print(line)
            print(f"{name}: {len(cases) - bad}/{len(cases)} passed")
    if args.json:
        print(json.dumps(payload))
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="number of rows")
    common.add_argument("--n", type=int, help="number of columns")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--q-at", dest="q_at", metavar="P/R", help="evaluate coefficients at a rational q")

    p = argparse.ArgumentParser(prog="qgr", description="Quantum matrices and quantum grassmannians.")
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernel)")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("normal-form", cmd_normal_form, "PBW normal form of an expression in X[i,j]")
    sp.add_argument("expr")
    sp = add("minor", cmd_minor, "quantum minor [rows|cols]")
    sp.add_argument("cols", help="column set, e.g. '1 3'")
    sp.add_argument("--rows", help="row set (default 1..|cols|)")
    sp = add("straighten", cmd_straighten, "rewrite onto preferred tableaux")
    sp.add_argument("expr")
    sp.add_argument("--strategy", choices=["solve", "rewrite"], default="solve")
    sp = add("pluecker", cmd_pluecker, "generalised Pluecker relation for (J1, J2, K)")
    sp.add_argument("--J1", default="")
    sp.add_argument("--J2", default="")
    sp.add_argument("--K", required=True)
    sp = add("commutation", cmd_commutation, "commutation defect of [I][J]")
    sp.add_argument("I")
    sp.add_argument("J")
    sp = add("hilbert", cmd_hilbert, "dimension of the degree-d component")
    sp.add_argument("--degree", type=int)
    sp = add("paths", cmd_paths, "maximal path length in the generator poset")
    sp.add_argument("--all", action="store_true", help="list every maximal path")
    sp.add_argument("--dot", action="store_true", help="print the Hasse diagram in DOT format")
    add("gk", cmd_gk, "GK dimension m(n-m)+1")
    sp = add("dehom-eval", cmd_dehom_eval, "evaluate in the dehomogenisation at the top minor")
    sp.add_argument("expr")
    sp = add("gens-expand", cmd_gens_expand, "write {I} through the brace generators")
    sp.add_argument("I")
    sp = add("coinv-check", cmd_coinv_check, "check lambda([J]) = D_q (x) [J]")
    sp.add_argument("J", nargs="?")
    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    sp.add_argument("--suite-filter", dest="suite_filter", help="only cases whose key contains this text")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, ParseError, InvalidPlueckerInput, IndexRangeError) as exc:
        print(f"qgr: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"qgr: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
