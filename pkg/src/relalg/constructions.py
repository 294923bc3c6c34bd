"""Derived structures: dendriform to associative and pre-Lie, zinbiel to and
from dendriform, pre-Lie to Lie, pre-Poisson to Poisson, cocycle twists,
Rota-Baxter to dendriform, family-to-pair lifting, and the collapse of a
finite carrier to an ordinary algebra.

Derived operations are lazy wrappers over their inputs; on finite carriers
they can be materialized to structure constants for serialization.  When a
construction has a hypothesis that is itself an equation (a symmetry clause,
the Rota-Baxter identity, the pre-Poisson compatibilities) it is verified on
a caller-supplied domain and the construction is refused, with the failing
report, if it does not hold.
"""

from itertools import product

from .axioms import Equation, Suite, app, check_axioms, check_rota_baxter, finite_domain, A, B, X, Y
from .errors import ConstructionRefused, ContractError
from .lincomb import LinComb
from .ops import FiniteRelativeAlgebra, OpCarrier, PairIndexedOp
from .semigroups import check_cocycle, trivial_monoid


def _same_index(i1, i2):
    return i1 is i2 or i1 == i2


def _common_index(op1, op2):
    if not _same_index(op1.index, op2.index):
        raise ContractError("operations live over different index structures")
    return op1.index


def _require_commutative(index):
    if not index.claims_commutative:
        raise ContractError("this construction requires a commutative index semigroup")
    return index


def family_to_pair(role, fam):
    """Lift a single-index operation to a pair-indexed one by the role's
    independence pattern: prec reads the second index, succ / ast / circ read
    the first."""
    if role == "prec":
        return PairIndexedOp(fam.index, lambda a, b, x, y: fam(b, x, y))
    if role in ("succ", "ast", "circ"):
        return PairIndexedOp(fam.index, lambda a, b, x, y: fam(a, x, y))
    raise ContractError(f"no pair lifting for role {role!r}")


def assoc_from_dend(prec, succ):
    """mul = succ + prec, pointwise in the index pair."""
    index = _common_index(prec, succ)
    return PairIndexedOp(index, lambda a, b, x, y: succ(a, b, x, y) + prec(a, b, x, y))


def prelie_from_dend(prec, succ):
    """circ(a,b)(x,y) = succ(a,b)(x,y) - prec(b,a)(y,x); needs commutativity
    since the swapped term lands in the same composite index."""
    index = _require_commutative(_common_index(prec, succ))
    return PairIndexedOp(index, lambda a, b, x, y: succ(a, b, x, y) - prec(b, a, y, x))


# Named symmetry hypotheses.  The pair-indexed clause swaps both the
# arguments and the index pair (the swap acts on each tensor factor with its
# index); the single-index clause is the literal pointwise coincidence of the
# two operations, kept as a distinct named check.
PAIR_SYMMETRIC = Suite(
    "PairSymmetric",
    2,
    ("prec", "succ"),
    (Equation("succ_eq_swapped_prec", app("succ", (A, B), X, Y), app("prec", (B, A), Y, X), 2, 2),),
    requires_commutative=True,
)

FAMILY_SYMMETRIC = Suite(
    "FamilySymmetric",
    1,
    ("prec", "succ"),
    (Equation("succ_eq_prec", app("succ", (A,), X, Y), app("prec", (A,), X, Y), 2, 1),),
)


def check_pair_symmetric(prec, succ, domain):
    carrier = OpCarrier(_common_index(prec, succ), {"prec": prec, "succ": succ})
    return check_axioms(carrier, PAIR_SYMMETRIC, domain, check_name="hypothesis:PairSymmetric")


def check_family_symmetric(prec, succ, domain):
    carrier = OpCarrier(_common_index(prec, succ), {"prec": prec, "succ": succ})
    return check_axioms(carrier, FAMILY_SYMMETRIC, domain, check_name="hypothesis:FamilySymmetric")


def zinbiel_from_symmetric_dend(prec, succ, domain):
    """ast = succ, legitimate when succ is prec composed with the swap; the
    hypothesis is verified on the given domain before construction."""
    report = check_pair_symmetric(prec, succ, domain)
    if not report.passed:
        raise ConstructionRefused(report)
    return PairIndexedOp(succ.index, succ.fn)


def dend_from_zinbiel(ast):
    """prec(a,b)(x,y) = ast(b,a)(y,x) and succ = ast; the symmetry clause
    succ(a,b)(x,y) = prec(b,a)(y,x) then holds identically."""
    index = _require_commutative(ast.index)
    prec = PairIndexedOp(index, lambda a, b, x, y: ast(b, a, y, x))
    succ = PairIndexedOp(index, ast.fn)
    return prec, succ


def comm_from_zinbiel(ast):
    """mul(a,b)(x,y) = ast(a,b)(x,y) + ast(b,a)(y,x), manifestly symmetric
    under swapping arguments together with indices."""
    index = _require_commutative(ast.index)
    return PairIndexedOp(index, lambda a, b, x, y: ast(a, b, x, y) + ast(b, a, y, x))


def lie_from_prelie(circ):
    """bracket(a,b)(x,y) = circ(a,b)(x,y) - circ(b,a)(y,x); skew-symmetry
    holds identically by construction."""
    index = _require_commutative(circ.index)
    return PairIndexedOp(index, lambda a, b, x, y: circ(a, b, x, y) - circ(b, a, y, x))


def poisson_from_prepoisson(circ, ast, domain):
    """The symmetrized zinbiel product together with the pre-Lie commutator;
    the pre-Poisson axioms are verified on the domain first."""
    index = _require_commutative(_common_index(circ, ast))
    report = check_axioms(
        OpCarrier(index, {"ast": ast, "circ": circ}),
        "RelPrePoisson",
        domain,
        check_name="construction:poisson-from-prepoisson:precondition",
    )
    if not report.passed:
        raise ConstructionRefused(report)
    return comm_from_zinbiel(ast), lie_from_prelie(circ)


def cocycle_twist(base, cocycle):
    """Rescale an index-independent associative product by a 2-cocycle,
    producing an algebra over the cocycle's semigroup."""
    if not isinstance(base, FiniteRelativeAlgebra) or "mul" not in base.ops:
        raise ContractError("cocycle twist needs a finite algebra with a 'mul' operation")
    if base.role_arity("mul") != 2:
        raise ContractError("cocycle twist needs a pair-indexed 'mul'")
    blocks = set(base.ops["mul"].values())
    if len(blocks) != 1:
        raise ContractError("cocycle twist needs an index-independent product")
    block = blocks.pop()
    assoc = check_axioms(
        base.as_carrier(("mul",)),
        "RelAssoc",
        finite_domain(base),
        check_name="construction:cocycle-twist:precondition:RelAssoc",
    )
    if not assoc.passed:
        raise ConstructionRefused(assoc)
    creport = check_cocycle(cocycle)
    if not creport.passed:
        raise ConstructionRefused(creport)
    semigroup = cocycle.base
    ops = {}
    for a, b in product(range(semigroup.size), repeat=2):
        scale = cocycle(a, b)
        ops.setdefault("mul", {})[(a, b)] = tuple(
            tuple(tuple(scale * c for c in row) for row in plane) for plane in block
        )
    unit_vector = base.unit_vector
    if unit_vector is not None and semigroup.unit is not None:
        w = semigroup.unit
        normalized = all(
            cocycle(a, w) == 1 and cocycle(w, a) == 1 for a in range(semigroup.size)
        )
        if not normalized:
            unit_vector = None
    else:
        unit_vector = None
    return FiniteRelativeAlgebra(base.basis, semigroup, ops, unit_vector)


def dend_from_rb(rb, window=None):
    """prec(a,b)(x,y) = x . R_b(y) and succ(a,b)(x,y) = R_a(x) . y; the
    Rota-Baxter identity is verified (on the window, when virtual) first."""
    report = check_rota_baxter(rb, window=window)
    if not report.passed:
        raise ConstructionRefused(report)
    mul = rb.carrier.op("mul")
    index = mul.index
    prec = PairIndexedOp(index, lambda a, b, x, y: mul(a, b, x, rb.apply(b, y)))
    succ = PairIndexedOp(index, lambda a, b, x, y: mul(a, b, rb.apply(a, x), y))
    return prec, succ


def collapse(alg):
    """Flatten a finite carrier over a finite index semigroup into an
    ordinary algebra of dimension dim * |S|: basis elements are (vector
    basis, index) pairs and every role acts componentwise with the index
    product folded in."""
    if not isinstance(alg, FiniteRelativeAlgebra):
        raise ContractError("collapse is only offered for finite carriers")
    semigroup = alg.index
    dim = alg.dim
    n = semigroup.size
    big = dim * n
    basis = tuple(
        f"{alg.basis[i]}@{semigroup.elements[a]}" for i in range(dim) for a in range(n)
    )

    def flat(i, a):
        return i * n + a

    ops = {}
    for role in alg.roles():
        table = alg.ops[role]
        if alg.role_arity(role) == 1:
            # fold the single-index role through its canonical pair lifting
            if role == "prec":
                table = {(a, b): table[(b,)] for a, b in product(range(n), repeat=2)}
            elif role in ("succ", "ast", "circ"):
                table = {(a, b): table[(a,)] for a, b in product(range(n), repeat=2)}
            else:
                raise ContractError(f"no pair lifting for single-index role {role!r}")
        block = [[[0] * big for _ in range(big)] for _ in range(big)]
        for a, b in product(range(n), repeat=2):
            ab = semigroup.mul(a, b)
            source = table[(a, b)]
            for i, j in product(range(dim), repeat=2):
                row = block[flat(i, a)][flat(j, b)]
                for k, c in enumerate(source[i][j]):
                    row[flat(k, ab)] = c
        ops[role] = {(0, 0): tuple(tuple(tuple(r) for r in plane) for plane in block)}
    unit_vector = None
    if alg.unit_vector is not None and semigroup.unit is not None:
        unit_vector = LinComb(
            (flat(k, semigroup.unit), c) for k, c in alg.unit_vector
        )
    return FiniteRelativeAlgebra(basis, trivial_monoid(), ops, unit_vector)
