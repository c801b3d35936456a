"""Command-line surface: evaluate, normalize, run the rule and qudit checks.

JSON results go to stdout; human-readable report tables go to stderr.
Exit status is 0 when every requested check passes, 1 when a check fails,
and 2 on bad input (parse errors, arity errors, incompatible flags).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ring as _ring
from . import term as _term
from . import semantics as _sem
from . import normalform as _nf
from . import rules as _rules
from . import qudit as _qudit


class UsageError(Exception):
    pass


def _ring_from_flags(args) -> _ring.RingDescriptor:
    name = args.ring
    if name == "Z":
        return _ring.Z()
    if name == "Qi":
        return _ring.Qi()
    if name == "Zn":
        if args.mod is None:
            raise UsageError("--ring Zn needs --mod N")
        return _ring.Zn(args.mod)
    if name == "C":
        return _ring.C(args.tol)
    raise UsageError(f"unknown ring {name!r}")


def _emit(data, args):
    text = json.dumps(data, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_eval(args) -> int:
    ring = _ring_from_flags(args)
    t = _term.parse(args.term, ring)
    m = _sem.interpret(t, ring, args.d)
    _emit(_sem.to_json_dict(m), args)
    return 0


def _cmd_normalize(args) -> int:
    ring = _ring_from_flags(args)
    if not ring.exact:
        raise UsageError("normalize runs over exact rings")
    t = _term.parse(args.term, ring)
    m = _nf.normalize(t, ring)
    data = _nf.to_json_dict(m.nf)
    data["in"] = m.n_in
    data["out"] = m.n_out
    data["term"] = _term.render(_nf.nf_to_term(m.nf))
    _emit(data, args)
    return 0


def _cmd_roundtrip(args) -> int:
    ring = _ring_from_flags(args)
    t = _term.parse(args.term, ring)
    m = _nf.normalize(t, ring)
    direct = _sem.interpret(t, ring, 2)
    agree = _sem.map_equal(m.to_sparse(ring), direct)
    _emit({"term": args.term, "agree": agree}, args)
    return 0 if agree else 1


def _bounds_from_flags(args) -> _rules.RuleBounds:
    labels = tuple(args.labels.split(",")) if args.labels else \
        _rules.DEFAULT_BOUNDS.label_samples
    return _rules.RuleBounds(args.max_arity, args.max_nm, labels)


def _run_rule_checks(instances, ring, args) -> int:
    reports = _rules.check_all(instances, ring)
    failed = [r for r in reports if not r.passed]
    for rep in reports:
        print(rep, file=sys.stderr)
    _emit({
        "ring": str(ring),
        "checked": len(reports),
        "failed": len(failed),
        "failures": [
            {"name": r.name, "params": r.params,
             "witness": list(r.witness)} for r in failed
        ],
    }, args)
    return 1 if failed else 0


def _cmd_check_axioms(args) -> int:
    ring = _ring_from_flags(args)
    return _run_rule_checks(_rules.axiom_instances(_bounds_from_flags(args), ring),
                            ring, args)


def _cmd_check_derived(args) -> int:
    ring = _ring_from_flags(args)
    return _run_rule_checks(_rules.derived_instances(_bounds_from_flags(args), ring),
                            ring, args)


def _cmd_check_qudit(args) -> int:
    p = _qudit.QParams(args.d, tolerance=args.tol)
    reports = [
        _qudit.check_bialgebra(p),
        _qudit.check_commutation(p),
        _qudit.check_antipode(p),
    ]
    vander_ok = all(
        _qudit.check_q_vandermonde(p, n, j, k)
        for n in range(p.d) for j in range(n + 1) for k in range(n + 1))
    reports.append(_qudit.QuditCheckReport(
        "q-vandermonde", p.d, vander_ok, 0.0 if vander_ok else 1.0))
    for rep in reports:
        print(rep, file=sys.stderr)
    failed = [r for r in reports if not r.passed]
    _emit({
        "d": p.d,
        "checked": len(reports),
        "failed": len(failed),
        "reports": [
            {"name": r.name, "passed": r.passed, "max_error": r.max_error}
            for r in reports
        ],
    }, args)
    return 1 if failed else 0


def _cmd_universal(args) -> int:
    p = _qudit.QParams(args.d, tolerance=args.tol)
    ring = p.ring()
    data = json.loads(args.state)
    state = _sem.from_json_dict(data, ring)
    term, nf = _qudit.qudit_universal_nf(state, p)
    rebuilt = _sem.interpret(term, ring, p.d)
    agree = _sem.map_equal(rebuilt, state)
    _emit({
        "term": _term.render(term),
        "normal_form": _nf.to_json_dict(nf),
        "roundtrip": agree,
    }, args)
    return 0 if agree else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zwcalc",
        description="evaluate, normalize and verify string-diagram terms")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(sp, with_term=True):
        sp.add_argument("--ring", default="Z", choices=["Z", "Qi", "Zn", "C"])
        sp.add_argument("--mod", type=int, default=None,
                        help="modulus for --ring Zn")
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--d", type=int, default=2)
        sp.add_argument("--output", default=None, help="write JSON here")
        if with_term:
            sp.add_argument("term", help="term in the concrete grammar")

    sp = sub.add_parser("eval", help="interpret a term as a sparse map")
    common(sp)
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("normalize", help="canonical normal form of a term")
    common(sp)
    sp.set_defaults(func=_cmd_normalize)

    sp = sub.add_parser("roundtrip",
                        help="check normalize against the interpreter")
    common(sp)
    sp.set_defaults(func=_cmd_roundtrip)

    for verb, fn in (("check-axioms", _cmd_check_axioms),
                     ("check-derived", _cmd_check_derived)):
        sp = sub.add_parser(verb, help=f"run the {verb.split('-')[1]} catalogue")
        common(sp, with_term=False)
        sp.add_argument("--max-arity", type=int,
                        default=_rules.DEFAULT_BOUNDS.max_spider_arity)
        sp.add_argument("--max-nm", type=int,
                        default=_rules.DEFAULT_BOUNDS.max_nm)
        sp.add_argument("--labels", default=None,
                        help="comma-separated label literals")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("check-qudit", help="anyonic law checks at dimension d")
    common(sp, with_term=False)
    sp.set_defaults(func=_cmd_check_qudit)

    sp = sub.add_parser("universal",
                        help="rebuild a JSON state as a diagram and verify")
    common(sp, with_term=False)
    sp.add_argument("state", help="sparse state as JSON")
    sp.set_defaults(func=_cmd_universal)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, _term.ParseError, _term.ArityError, _ring.RingError,
            _qudit.QuditError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
