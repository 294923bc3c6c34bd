"""The equation engine: axiom suites compiled to small term trees, evaluated
exactly over enumerated or sampled domains.

Each suite is a closed list of equations over operation roles.  An equation's
sides are expressions built from element variables x, y, z, index variables
a, b, c, indexed applications of roles, and formal sums; index slots carry
index expressions (variables, the unit, or products computed in the carrier's
index structure).  Evaluation is exact; two sides are equal iff their
normalized linear combinations coincide.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import ContractError
from .lincomb import LinComb
from .reports import CheckReport, Counterexample
from .semigroups import DimonoidTable, SemigroupTable, VirtualSemigroup

# ---------------------------------------------------------------------------
# expression trees


@dataclass(frozen=True)
class IxVar:
    name: str


@dataclass(frozen=True)
class IxUnit:
    pass


@dataclass(frozen=True)
class IxProd:
    kind: str  # "mul" for semigroups, "left"/"right" for dimonoids
    a: object
    b: object


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class UnitElem:
    pass


@dataclass(frozen=True)
class App:
    role: str
    idx: tuple
    args: tuple


@dataclass(frozen=True)
class Lin:
    terms: tuple  # of (Fraction, expr)


A, B, C = IxVar("a"), IxVar("b"), IxVar("c")
X, Y, Z = Var("x"), Var("y"), Var("z")
OMEGA = IxUnit()
UNIT = UnitElem()
ZERO_EXPR = Lin(())


def mul(i, j):
    return IxProd("mul", i, j)


def dleft(i, j):
    return IxProd("left", i, j)


def dright(i, j):
    return IxProd("right", i, j)


def app(role, idx, *args):
    return App(role, tuple(idx) if isinstance(idx, (tuple, list)) else (idx,), tuple(args))


def add(*exprs):
    return Lin(tuple((Fraction(1), e) for e in exprs))


def sub(e1, e2):
    return Lin(((Fraction(1), e1), (Fraction(-1), e2)))


@dataclass(frozen=True)
class Equation:
    eqid: str
    lhs: object
    rhs: object
    n_elem: int
    n_idx: int


@dataclass(frozen=True)
class Suite:
    name: str
    op_arity: int  # 1 = family-indexed ops, 2 = pair-indexed ops
    roles: tuple
    equations: tuple
    index_kind: str = "semigroup"  # or "dimonoid"
    requires_commutative: bool = False
    requires_unit: bool = False


def eval_index(ix, env, index):
    if isinstance(ix, IxVar):
        return env[ix.name]
    if isinstance(ix, IxUnit):
        if index.unit is None:
            raise ContractError("suite requires a unit element in the index structure")
        return index.unit
    return index.prod(ix.kind, eval_index(ix.a, env, index), eval_index(ix.b, env, index))


def eval_expr(expr, elem_env, idx_env, ops, index, unit_vector):
    if isinstance(expr, Var):
        return elem_env[expr.name]
    if isinstance(expr, UnitElem):
        if unit_vector is None:
            raise ContractError("suite requires a declared unit vector")
        return unit_vector
    if isinstance(expr, App):
        idx = tuple(eval_index(i, idx_env, index) for i in expr.idx)
        args = tuple(eval_expr(e, elem_env, idx_env, ops, index, unit_vector) for e in expr.args)
        return ops[expr.role](*idx, *args)
    if isinstance(expr, Lin):
        out = LinComb.zero()
        for coeff, sub_expr in expr.terms:
            out = out + eval_expr(sub_expr, elem_env, idx_env, ops, index, unit_vector).scale(coeff)
        return out
    raise TypeError(f"unknown expression node {expr!r}")


# ---------------------------------------------------------------------------
# the suites

_VARS = ("x", "y", "z")
_IVARS = ("a", "b", "c")


def _suite_table():
    eq = Equation
    # pair-indexed associativity: (x.y).z = x.(y.z) with composed indices
    assoc = eq(
        "assoc",
        app("mul", (mul(A, B), C), app("mul", (A, B), X, Y), Z),
        app("mul", (A, mul(B, C)), X, app("mul", (B, C), Y, Z)),
        3,
        3,
    )
    comm = eq("comm", app("mul", (A, B), X, Y), app("mul", (B, A), Y, X), 2, 2)
    unit_right = eq("unit_right", app("mul", (A, OMEGA), X, UNIT), X, 1, 1)
    unit_left = eq("unit_left", app("mul", (OMEGA, A), UNIT, X), X, 1, 1)
    skew = eq(
        "skew",
        add(app("bracket", (A, B), X, Y), app("bracket", (B, A), Y, X)),
        ZERO_EXPR,
        2,
        2,
    )
    jacobi = eq(
        "jacobi",
        add(
            app("bracket", (mul(A, B), C), app("bracket", (A, B), X, Y), Z),
            app("bracket", (mul(C, A), B), app("bracket", (C, A), Z, X), Y),
            app("bracket", (mul(B, C), A), app("bracket", (B, C), Y, Z), X),
        ),
        ZERO_EXPR,
        3,
        3,
    )
    leibniz = eq(
        "leibniz",
        app("bracket", (A, mul(B, C)), X, app("mul", (B, C), Y, Z)),
        add(
            app("mul", (mul(A, B), C), app("bracket", (A, B), X, Y), Z),
            app("mul", (B, mul(A, C)), Y, app("bracket", (A, C), X, Z)),
        ),
        3,
        3,
    )
    rel_dend = (
        eq(
            "dend1",
            app("prec", (mul(A, B), C), app("prec", (A, B), X, Y), Z),
            app(
                "prec",
                (A, mul(B, C)),
                X,
                add(app("prec", (B, C), Y, Z), app("succ", (B, C), Y, Z)),
            ),
            3,
            3,
        ),
        eq(
            "dend2",
            app("prec", (mul(A, B), C), app("succ", (A, B), X, Y), Z),
            app("succ", (A, mul(B, C)), X, app("prec", (B, C), Y, Z)),
            3,
            3,
        ),
        eq(
            "dend3",
            app(
                "succ",
                (mul(A, B), C),
                add(app("prec", (A, B), X, Y), app("succ", (A, B), X, Y)),
                Z,
            ),
            app("succ", (A, mul(B, C)), X, app("succ", (B, C), Y, Z)),
            3,
            3,
        ),
    )
    rel_zinbiel = eq(
        "zinbiel",
        app("ast", (A, mul(B, C)), X, app("ast", (B, C), Y, Z)),
        add(
            app("ast", (mul(A, B), C), app("ast", (A, B), X, Y), Z),
            app("ast", (mul(B, A), C), app("ast", (B, A), Y, X), Z),
        ),
        3,
        3,
    )
    rel_prelie = eq(
        "prelie",
        sub(
            app("circ", (A, mul(B, C)), X, app("circ", (B, C), Y, Z)),
            app("circ", (mul(A, B), C), app("circ", (A, B), X, Y), Z),
        ),
        sub(
            app("circ", (B, mul(A, C)), Y, app("circ", (A, C), X, Z)),
            app("circ", (mul(B, A), C), app("circ", (B, A), Y, X), Z),
        ),
        3,
        3,
    )
    rel_prepoisson = (
        eq(
            "prepoisson1",
            app(
                "ast",
                (mul(A, B), C),
                sub(app("circ", (A, B), X, Y), app("circ", (B, A), Y, X)),
                Z,
            ),
            sub(
                app("circ", (A, mul(B, C)), X, app("ast", (B, C), Y, Z)),
                app("ast", (B, mul(A, C)), Y, app("circ", (A, C), X, Z)),
            ),
            3,
            3,
        ),
        eq(
            "prepoisson2",
            app(
                "circ",
                (mul(A, B), C),
                add(app("ast", (A, B), X, Y), app("ast", (B, A), Y, X)),
                Z,
            ),
            add(
                app("ast", (A, mul(B, C)), X, app("circ", (B, C), Y, Z)),
                app("ast", (B, mul(A, C)), Y, app("circ", (A, C), X, Z)),
            ),
            3,
            3,
        ),
    )
    fam_dend = (
        eq(
            "dend1",
            app("prec", (B,), app("prec", (A,), X, Y), Z),
            app("prec", (mul(A, B),), X, add(app("prec", (B,), Y, Z), app("succ", (A,), Y, Z))),
            3,
            2,
        ),
        eq(
            "dend2",
            app("prec", (B,), app("succ", (A,), X, Y), Z),
            app("succ", (A,), X, app("prec", (B,), Y, Z)),
            3,
            2,
        ),
        eq(
            "dend3",
            app("succ", (mul(A, B),), add(app("prec", (B,), X, Y), app("succ", (A,), X, Y)), Z),
            app("succ", (A,), X, app("succ", (B,), Y, Z)),
            3,
            2,
        ),
    )
    fam_zinbiel = (
        eq(
            "zinbiel",
            app("ast", (A,), X, app("ast", (B,), Y, Z)),
            add(
                app("ast", (mul(A, B),), app("ast", (A,), X, Y), Z),
                app("ast", (mul(A, B),), app("ast", (B,), Y, X), Z),
            ),
            3,
            2,
        ),
        eq(
            "zinbiel_swap",
            app("ast", (A,), X, app("ast", (B,), Y, Z)),
            app("ast", (B,), Y, app("ast", (A,), X, Z)),
            3,
            2,
        ),
    )
    fam_prelie = eq(
        "prelie",
        sub(
            app("circ", (A,), X, app("circ", (B,), Y, Z)),
            app("circ", (mul(A, B),), app("circ", (A,), X, Y), Z),
        ),
        sub(
            app("circ", (B,), Y, app("circ", (A,), X, Z)),
            app("circ", (mul(B, A),), app("circ", (B,), Y, X), Z),
        ),
        3,
        2,
    )
    fam_prepoisson = (
        eq(
            "prepoisson1",
            app(
                "ast",
                (mul(A, B),),
                sub(app("circ", (A,), X, Y), app("circ", (B,), Y, X)),
                Z,
            ),
            sub(
                app("circ", (A,), X, app("ast", (B,), Y, Z)),
                app("ast", (B,), Y, app("circ", (A,), X, Z)),
            ),
            3,
            2,
        ),
        eq(
            "prepoisson2",
            app(
                "circ",
                (mul(A, B),),
                add(app("ast", (A,), X, Y), app("ast", (B,), Y, X)),
                Z,
            ),
            add(
                app("ast", (A,), X, app("circ", (B,), Y, Z)),
                app("ast", (B,), Y, app("circ", (A,), X, Z)),
            ),
            3,
            2,
        ),
    )
    # dimonoid-indexed single-index dendriform axioms: index products split
    # into the left/right dimonoid operations
    dimo_dend = (
        eq(
            "dend1",
            app("prec", (B,), app("prec", (A,), X, Y), Z),
            add(
                app("prec", (dleft(A, B),), X, app("prec", (B,), Y, Z)),
                app("prec", (dright(A, B),), X, app("succ", (A,), Y, Z)),
            ),
            3,
            2,
        ),
        eq(
            "dend2",
            app("prec", (B,), app("succ", (A,), X, Y), Z),
            app("succ", (A,), X, app("prec", (B,), Y, Z)),
            3,
            2,
        ),
        eq(
            "dend3",
            add(
                app("succ", (dleft(A, B),), app("prec", (B,), X, Y), Z),
                app("succ", (dright(A, B),), app("succ", (A,), X, Y), Z),
            ),
            app("succ", (A,), X, app("succ", (B,), Y, Z)),
            3,
            2,
        ),
    )

    suites = [
        Suite("RelAssoc", 2, ("mul",), (assoc,)),
        Suite("RelUnital", 2, ("mul",), (unit_right, unit_left), requires_unit=True),
        Suite("RelComm", 2, ("mul",), (assoc, comm), requires_commutative=True),
        Suite("RelLie", 2, ("bracket",), (skew, jacobi), requires_commutative=True),
        Suite(
            "RelPoisson",
            2,
            ("mul", "bracket"),
            (assoc, comm, skew, jacobi, leibniz),
            requires_commutative=True,
        ),
        Suite("RelDendriform", 2, ("prec", "succ"), rel_dend),
        Suite("RelZinbiel", 2, ("ast",), (rel_zinbiel,), requires_commutative=True),
        Suite("RelPreLie", 2, ("circ",), (rel_prelie,), requires_commutative=True),
        Suite(
            "RelPrePoisson",
            2,
            ("ast", "circ"),
            (rel_zinbiel, rel_prelie) + rel_prepoisson,
            requires_commutative=True,
        ),
        Suite("FamDendriform", 1, ("prec", "succ"), fam_dend),
        Suite("FamZinbiel", 1, ("ast",), fam_zinbiel, requires_commutative=True),
        Suite("FamPreLie", 1, ("circ",), (fam_prelie,), requires_commutative=True),
        Suite(
            "FamPrePoisson",
            1,
            ("ast", "circ"),
            fam_zinbiel + (fam_prelie,) + fam_prepoisson,
            requires_commutative=True,
        ),
        Suite("DimonoidDendriform", 1, ("prec", "succ"), dimo_dend, index_kind="dimonoid"),
    ]
    return {s.name: s for s in suites}


SUITES = _suite_table()

ROTA_BAXTER_EQUATION = Equation(
    "rota_baxter",
    app("mul", (A, B), app("rb", (A,), X), app("rb", (B,), Y)),
    app(
        "rb",
        (mul(A, B),),
        add(
            app("mul", (A, B), app("rb", (A,), X), Y),
            app("mul", (A, B), X, app("rb", (B,), Y)),
        ),
    ),
    2,
    2,
)


# ---------------------------------------------------------------------------
# evaluation domains


class FiniteDomain:
    """Exhaustive basis tuples and index tuples for a finite carrier; an
    optional predicate on basis-position tuples restricts the element side."""

    def __init__(self, basis_names, index_elems, index_names=str, basis_filter=None):
        self.basis_names = list(basis_names)
        self.index_elems = list(index_elems)
        self.index_names = index_names
        self.basis_filter = basis_filter

    def elements(self, k):
        positions = range(len(self.basis_names))
        for combo in product(positions, repeat=k):
            if self.basis_filter is not None and not self.basis_filter(combo):
                continue
            yield tuple((self.basis_names[i], LinComb.single(i)) for i in combo)

    def indices(self, m):
        return product(self.index_elems, repeat=m)

    def index_name(self, i):
        return self.index_names(i)

    def render_basis(self, b):
        return self.basis_names[b]


def finite_domain(algebra, basis_filter=None):
    index = algebra.index
    return FiniteDomain(
        algebra.basis, range(index.size), index_names=index.name, basis_filter=basis_filter
    )


def window_domain(basis_names, window):
    """Domain for virtual-index carriers: exhaustive basis, caller-chosen
    finite index window."""
    return FiniteDomain(basis_names, list(window), index_names=str)


# ---------------------------------------------------------------------------
# the checker


def _resolve_suite(suite):
    if isinstance(suite, Suite):
        return suite
    try:
        return SUITES[suite]
    except KeyError:
        raise ContractError(f"unknown axiom suite {suite!r}") from None


def _validate_carrier(carrier, suite):
    index = carrier.index
    if suite.index_kind == "dimonoid":
        if not isinstance(index, DimonoidTable):
            raise ContractError(f"suite {suite.name} needs a dimonoid index structure")
    else:
        if not isinstance(index, (SemigroupTable, VirtualSemigroup)):
            raise ContractError(f"suite {suite.name} needs a semigroup index structure")
        if suite.requires_commutative and not index.claims_commutative:
            raise ContractError(f"suite {suite.name} requires a commutative index semigroup")
        if suite.requires_unit and index.unit is None:
            raise ContractError(f"suite {suite.name} requires a monoid index")
    ops = {}
    for role in suite.roles:
        op = carrier.op(role)
        if op.arity != suite.op_arity:
            raise ContractError(
                f"role {role!r} has index arity {op.arity}, suite {suite.name} "
                f"expects {suite.op_arity}"
            )
        ops[role] = op
    if suite.requires_unit and carrier.unit_vector is None:
        raise ContractError(f"suite {suite.name} requires a declared unit vector")
    return ops


def check_axioms(carrier, suite, domain, check_name=None):
    """Verify every equation of the suite over the domain, exactly.

    The scan is deterministic: equations in suite order, element tuples then
    index tuples in domain order; the first violation is reported.
    """
    suite = _resolve_suite(suite)
    ops = _validate_carrier(carrier, suite)
    name = check_name or f"axioms:{suite.name}"
    index = carrier.index
    instances = 0
    per_equation = {}
    for equation in suite.equations:
        count = 0
        for elems in domain.elements(equation.n_elem):
            elem_env = dict(zip(_VARS, (vec for _, vec in elems)))
            for idxs in domain.indices(equation.n_idx):
                idx_env = dict(zip(_IVARS, idxs))
                lhs = eval_expr(equation.lhs, elem_env, idx_env, ops, index, carrier.unit_vector)
                rhs = eval_expr(equation.rhs, elem_env, idx_env, ops, index, carrier.unit_vector)
                count += 1
                if lhs != rhs:
                    per_equation[equation.eqid] = count
                    return CheckReport(
                        check=name,
                        passed=False,
                        instances=instances + count,
                        counterexample=Counterexample(
                            equation=equation.eqid,
                            elements=tuple(label for label, _ in elems),
                            indices=tuple(domain.index_name(i) for i in idxs),
                            lhs=lhs.to_pairs(domain.render_basis),
                            rhs=rhs.to_pairs(domain.render_basis),
                        ),
                        info={"suite": suite.name, "equation_instances": per_equation},
                    )
        per_equation[equation.eqid] = count
        instances += count
    return CheckReport(
        check=name,
        passed=True,
        instances=instances,
        info={"suite": suite.name, "equation_instances": per_equation},
    )


def check_rota_baxter(rb, window=None):
    """The Rota-Baxter family identity over all basis pairs and index pairs.

    The carrier must pass RelAssoc on the same domain first; if it does not,
    that failing report is returned.  ``window`` is required when the carrier
    index is virtual.
    """
    carrier = rb.carrier
    index = carrier.index
    if isinstance(index, VirtualSemigroup):
        if window is None:
            raise ContractError("rota-baxter check over a virtual index requires a window")
        domain = window_domain(_carrier_basis_names(carrier), window)
    else:
        domain = FiniteDomain(_carrier_basis_names(carrier), range(index.size), index.name)
    pre = check_axioms(carrier, "RelAssoc", domain, check_name="rota-baxter:precondition:RelAssoc")
    if not pre.passed:
        return pre
    ops = {"mul": carrier.op("mul"), "rb": lambda a, x: rb.apply(a, x)}
    equation = ROTA_BAXTER_EQUATION
    count = 0
    for elems in domain.elements(equation.n_elem):
        elem_env = dict(zip(_VARS, (vec for _, vec in elems)))
        for idxs in domain.indices(equation.n_idx):
            idx_env = dict(zip(_IVARS, idxs))
            lhs = eval_expr(equation.lhs, elem_env, idx_env, ops, index, None)
            rhs = eval_expr(equation.rhs, elem_env, idx_env, ops, index, None)
            count += 1
            if lhs != rhs:
                return CheckReport(
                    check="rota-baxter",
                    passed=False,
                    instances=count,
                    counterexample=Counterexample(
                        equation=equation.eqid,
                        elements=tuple(label for label, _ in elems),
                        indices=tuple(domain.index_name(i) for i in idxs),
                        lhs=lhs.to_pairs(domain.render_basis),
                        rhs=rhs.to_pairs(domain.render_basis),
                    ),
                )
    return CheckReport(check="rota-baxter", passed=True, instances=count)


def _carrier_basis_names(carrier):
    names = getattr(carrier, "basis", None)
    if names is None:
        raise ContractError("carrier does not expose a finite basis")
    return names


def check_morphism(f, suite):
    """Structure preservation for every role of the suite: applying the map
    at the product index to a source product matches the target product of
    the mapped arguments, for every basis pair and index pair."""
    suite = _resolve_suite(suite)
    if suite.op_arity != 2:
        raise ContractError("morphism checks are defined for pair-indexed suites")
    source, target = f.source, f.target
    for side, alg in (("source", source), ("target", target)):
        rep = check_axioms(
            alg.as_carrier(suite.roles),
            suite,
            finite_domain(alg),
            check_name=f"morphism:precondition:{side}:{suite.name}",
        )
        if not rep.passed:
            return rep
    index = source.index
    n = index.size
    instances = 0
    for role in suite.roles:
        for a, b in product(range(n), repeat=2):
            ab = index.mul(a, b)
            for i, j in product(range(source.dim), repeat=2):
                x = LinComb.single(i)
                y = LinComb.single(j)
                lhs = f.apply(ab, source.apply(role, (a, b), x, y))
                rhs = target.apply(role, (a, b), f.apply(a, x), f.apply(b, y))
                instances += 1
                if lhs != rhs:
                    return CheckReport(
                        check=f"morphism:{suite.name}",
                        passed=False,
                        instances=instances,
                        counterexample=Counterexample(
                            equation=f"morphism_{role}",
                            elements=(source.basis[i], source.basis[j]),
                            indices=(index.name(a), index.name(b)),
                            lhs=lhs.to_pairs(lambda k: target.basis[k]),
                            rhs=rhs.to_pairs(lambda k: target.basis[k]),
                        ),
                    )
    return CheckReport(check=f"morphism:{suite.name}", passed=True, instances=instances)
