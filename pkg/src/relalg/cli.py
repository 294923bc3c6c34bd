"""Batch command-line front end.

Every command reads JSON inputs, runs its checks, writes one JSON report
document to stdout (and to --out when given) and a human summary to stderr.
Exit status: 0 all checks passed, 1 a check failed (counterexample in the
report), 2 malformed input, 3 contract violation (wrong index structure,
missing roles, non-commutative index for a commutative-only suite).
"""

import argparse
import sys

from . import jsonio
from .axioms import SUITES, check_axioms, check_morphism, check_rota_baxter, finite_domain
from .constructions import (
    assoc_from_dend,
    cocycle_twist,
    collapse,
    comm_from_zinbiel,
    dend_from_rb,
    dend_from_zinbiel,
    family_to_pair,
    lie_from_prelie,
    poisson_from_prepoisson,
    prelie_from_dend,
    zinbiel_from_symmetric_dend,
)
from .errors import ConstructionRefused, ContractError, MalformedInputError
from .exprs import eval_expression
from .freecheck import FREE_SUITES, free_check
from .freedend import FreeDendCarrier
from .ops import FiniteRelativeAlgebra
from .reports import to_json
from .semigroups import check_cocycle, check_dimonoid, check_semigroup, dimonoid_from_semigroup
from .trees import tree_print


def _parser():
    parser = argparse.ArgumentParser(
        prog="relalg",
        description="exact checks and constructions for semigroup-indexed algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--out", help="also write the JSON report to this file")
        return p

    p = cmd("check-semigroup", help="associativity, unit and commutativity claims")
    p.add_argument("--semigroup", required=True, metavar="FILE")

    p = cmd("check-dimonoid", help="the five dimonoid identities")
    p.add_argument("--dimonoid", required=True, metavar="FILE")

    p = cmd("check-cocycle", help="the 2-cocycle identity")
    p.add_argument("--cocycle", required=True, metavar="FILE")

    p = cmd("check-algebra", help="run an axiom suite on a finite algebra")
    p.add_argument("--algebra", required=True, metavar="FILE")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))

    p = cmd("check-rb", help="the Rota-Baxter family identity")
    p.add_argument("--rb", required=True, metavar="FILE")
    p.add_argument("--window", type=int, default=20, metavar="N")

    p = cmd("check-morphism", help="structure preservation for a map family")
    p.add_argument("--morphism", required=True, metavar="FILE")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))

    p = cmd("derive", help="run a named construction, emit the derived algebra")
    p.add_argument("--construction", required=True, choices=sorted(CONSTRUCTIONS))
    p.add_argument("--algebra", metavar="FILE")
    p.add_argument("--cocycle", metavar="FILE")
    p.add_argument("--rb", metavar="FILE")
    p.add_argument("--window", type=int, default=20, metavar="N")

    p = cmd("collapse", help="flatten a finite algebra to an ordinary one")
    p.add_argument("--algebra", required=True, metavar="FILE")
    p.add_argument("--suite", choices=sorted(SUITES))

    p = cmd("free-eval", help="evaluate an expression over the free tree carrier")
    p.add_argument("--expr", required=True)
    p.add_argument("--dimonoid", metavar="FILE")
    p.add_argument("--semigroup", metavar="FILE")
    p.add_argument("--decorations", default="x,y", metavar="X,Y,...")

    p = cmd("free-check", help="sampled axiom checks on the free tree carrier")
    p.add_argument("--suite", required=True, choices=sorted(FREE_SUITES))
    p.add_argument("--dimonoid", metavar="FILE")
    p.add_argument("--semigroup", metavar="FILE")
    p.add_argument("--decorations", default="x,y", metavar="X,Y,...")
    p.add_argument("--samples", type=int, default=200, metavar="N")
    p.add_argument("--max-vertices", type=int, default=6, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")

    return parser


def _payload(command, reports, **extra):
    passed = all(r.passed for r in reports)
    out = {
        "command": command,
        "passed": passed,
        "reports": [r.to_payload() for r in reports],
    }
    out.update(extra)
    return out


def _load_free_carrier(args):
    if args.dimonoid:
        dimonoid = jsonio.load_dimonoid(jsonio.load_file(args.dimonoid))
        pre = check_dimonoid(dimonoid)
        if not pre.passed:
            return None, pre
    elif args.semigroup:
        semigroup = jsonio.load_semigroup(jsonio.load_file(args.semigroup))
        pre = check_semigroup(semigroup)
        if not pre.passed:
            return None, pre
        dimonoid = dimonoid_from_semigroup(semigroup)
    else:
        raise MalformedInputError("free carrier needs --dimonoid or --semigroup")
    decorations = [d for d in args.decorations.split(",") if d]
    return FreeDendCarrier(decorations, dimonoid), None


def _checked_algebra(path):
    alg = jsonio.load_algebra(jsonio.load_file(path))
    pre = check_semigroup(alg.index)
    if pre.passed:
        return alg, None
    report = type(pre)(
        check="axioms:precondition:semigroup",
        passed=False,
        instances=pre.instances,
        counterexample=pre.counterexample,
    )
    return alg, report


def run_check_semigroup(args):
    semigroup = jsonio.load_semigroup(jsonio.load_file(args.semigroup))
    return _payload(args.command, [check_semigroup(semigroup)])


def run_check_dimonoid(args):
    dimonoid = jsonio.load_dimonoid(jsonio.load_file(args.dimonoid))
    return _payload(args.command, [check_dimonoid(dimonoid)])


def run_check_cocycle(args):
    cocycle = jsonio.load_cocycle(jsonio.load_file(args.cocycle))
    return _payload(args.command, [check_cocycle(cocycle)])


def run_check_algebra(args):
    alg, pre = _checked_algebra(args.algebra)
    if pre is not None:
        return _payload(args.command, [pre])
    report = check_axioms(alg.as_carrier(), args.suite, finite_domain(alg))
    return _payload(args.command, [report])


def run_check_rb(args):
    rb = jsonio.load_rota_baxter(jsonio.load_file(args.rb))
    window = range(1, args.window + 1)
    return _payload(args.command, [check_rota_baxter(rb, window=window)])


def run_check_morphism(args):
    morphism = jsonio.load_morphism(jsonio.load_file(args.morphism))
    return _payload(args.command, [check_morphism(morphism, args.suite)])


def _require_file(args, attr):
    path = getattr(args, attr)
    if not path:
        raise MalformedInputError(f"construction {args.construction!r} needs --{attr}")
    return path


def _pair_role(alg, role):
    """The role as a pair-indexed operation, lifting a family-indexed table
    through its canonical independence pattern when necessary."""
    if alg.role_arity(role) == 2:
        return alg.op(role)
    return family_to_pair(role, alg.op(role))


def _derive_dispatch(args):
    name = args.construction
    if name in ("cocycle-twist",):
        alg = jsonio.load_algebra(jsonio.load_file(_require_file(args, "algebra")))
        cocycle = jsonio.load_cocycle(jsonio.load_file(_require_file(args, "cocycle")))
        return cocycle_twist(alg, cocycle), []
    if name == "dend-from-rb":
        rb = jsonio.load_rota_baxter(jsonio.load_file(_require_file(args, "rb")))
        if not isinstance(rb.carrier, FiniteRelativeAlgebra):
            raise ContractError(
                "dend-from-rb output can only be materialized over a finite carrier; "
                "use check-rb for the windowed virtual example"
            )
        prec, succ = dend_from_rb(rb)
        return rb.carrier.with_ops(
            {"prec": _materialized(rb.carrier, prec), "succ": _materialized(rb.carrier, succ)}
        ), []
    alg, pre = _checked_algebra(_require_file(args, "algebra"))
    if pre is not None:
        raise ConstructionRefused(pre)
    if name == "assoc-from-dend":
        mul = assoc_from_dend(_pair_role(alg, "prec"), _pair_role(alg, "succ"))
        return alg.with_ops({"mul": _materialized(alg, mul)}), []
    if name == "prelie-from-dend":
        circ = prelie_from_dend(_pair_role(alg, "prec"), _pair_role(alg, "succ"))
        return alg.with_ops({"circ": _materialized(alg, circ)}), []
    if name == "zinbiel-from-symmetric-dend":
        ast = zinbiel_from_symmetric_dend(
            _pair_role(alg, "prec"), _pair_role(alg, "succ"), finite_domain(alg)
        )
        return alg.with_ops({"ast": _materialized(alg, ast)}), []
    if name == "dend-from-zinbiel":
        prec, succ = dend_from_zinbiel(_pair_role(alg, "ast"))
        return alg.with_ops(
            {"prec": _materialized(alg, prec), "succ": _materialized(alg, succ)}
        ), []
    if name == "comm-from-zinbiel":
        mul = comm_from_zinbiel(_pair_role(alg, "ast"))
        return alg.with_ops({"mul": _materialized(alg, mul)}), []
    if name == "lie-from-prelie":
        bracket = lie_from_prelie(_pair_role(alg, "circ"))
        return alg.with_ops({"bracket": _materialized(alg, bracket)}), []
    if name == "poisson-from-prepoisson":
        mul, bracket = poisson_from_prepoisson(
            _pair_role(alg, "circ"), _pair_role(alg, "ast"), finite_domain(alg)
        )
        return alg.with_ops(
            {"mul": _materialized(alg, mul), "bracket": _materialized(alg, bracket)}
        ), []
    raise MalformedInputError(f"unknown construction {name!r}")


def _materialized(alg, op):
    from .ops import materialize_pair_op

    return materialize_pair_op(op, alg.dim, alg.index)


CONSTRUCTIONS = (
    "assoc-from-dend",
    "prelie-from-dend",
    "zinbiel-from-symmetric-dend",
    "dend-from-zinbiel",
    "comm-from-zinbiel",
    "lie-from-prelie",
    "poisson-from-prepoisson",
    "cocycle-twist",
    "dend-from-rb",
)


def run_derive(args):
    derived, reports = _derive_dispatch(args)
    return _payload(
        args.command,
        reports,
        construction=args.construction,
        algebra=jsonio.dump_algebra(derived),
    )


def run_collapse(args):
    alg, pre = _checked_algebra(args.algebra)
    if pre is not None:
        return _payload(args.command, [pre])
    flat = collapse(alg)
    reports = []
    if args.suite:
        reports.append(
            check_axioms(
                flat.as_carrier(),
                args.suite,
                finite_domain(flat),
                check_name=f"collapse:{args.suite}",
            )
        )
    return _payload(args.command, reports, algebra=jsonio.dump_algebra(flat))


def run_free_eval(args):
    carrier, pre = _load_free_carrier(args)
    if pre is not None:
        return _payload(args.command, [pre])
    result = eval_expression(args.expr, carrier)
    return _payload(
        args.command,
        [],
        expr=args.expr,
        result=result.render(tree_print),
        terms=result.to_pairs(tree_print),
    )


def run_free_check(args):
    carrier, pre = _load_free_carrier(args)
    if pre is not None:
        return _payload(args.command, [pre])
    report = free_check(
        carrier,
        args.suite,
        samples=args.samples,
        max_vertices=args.max_vertices,
        seed=args.seed,
    )
    return _payload(args.command, [report])


HANDLERS = {
    "check-semigroup": run_check_semigroup,
    "check-dimonoid": run_check_dimonoid,
    "check-cocycle": run_check_cocycle,
    "check-algebra": run_check_algebra,
    "check-rb": run_check_rb,
    "check-morphism": run_check_morphism,
    "derive": run_derive,
    "collapse": run_collapse,
    "free-eval": run_free_eval,
    "free-check": run_free_check,
}


def _emit(payload, args):
    text = to_json(payload)
    sys.stdout.write(text)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    for report in payload.get("reports", []):
        line = "PASS" if report["passed"] else "FAIL"
        ce = report.get("counterexample")
        where = "" if ce is None else f" at {ce['equation']} {tuple(ce['indices'])}"
        print(f"{line} {report['check']}: {report['instances']} instances{where}", file=sys.stderr)
    if "result" in payload:
        print(payload["result"], file=sys.stderr)


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        payload = HANDLERS[args.command](args)
    except MalformedInputError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except ConstructionRefused as exc:
        payload = _payload(args.command, [exc.report])
        _emit(payload, args)
        return 1
    except ContractError as exc:
        print(f"error: contract violation: {exc}", file=sys.stderr)
        return 3
    _emit(payload, args)
    return 0 if payload["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
