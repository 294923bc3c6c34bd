"""Finite semigroups, dimonoids and 2-cocycles given by multiplication tables,
plus a windowed interface for infinite index monoids.

Tables are validated structurally at construction (shapes, index ranges);
the algebraic laws themselves are established by the ``check_*`` functions,
which scan all triples in lexicographic order and report the first violation.
"""

from itertools import product

from .errors import ContractError, MalformedInputError
from .lincomb import format_scalar
from .reports import CheckReport, Counterexample


def _validate_table(table, n, what):
    if len(table) != n:
        raise MalformedInputError(f"{what}: expected {n} rows, got {len(table)}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedInputError(f"{what}[{i}]: expected {n} entries, got {len(row)}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise MalformedInputError(f"{what}[{i}][{j}]: entry {v!r} out of range 0..{n - 1}")
    return tuple(tuple(row) for row in table)


class SemigroupTable:
    """Finite magma table claiming associativity; ``check_semigroup`` decides."""

    __slots__ = ("elements", "product", "unit", "claims_commutative")

    def __init__(self, elements, table, unit=None, commutative=False):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise MalformedInputError("semigroup needs at least one element")
        if len(set(elements)) != len(elements):
            raise MalformedInputError("duplicate element names")
        n = len(elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "product", _validate_table(table, n, "product"))
        if unit is not None and not 0 <= unit < n:
            raise MalformedInputError(f"unit index {unit} out of range")
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "claims_commutative", bool(commutative))

    def __setattr__(self, name, value):
        raise AttributeError("SemigroupTable is immutable")

    @property
    def size(self):
        return len(self.elements)

    def iter_elements(self):
        return range(len(self.elements))

    def mul(self, i, j):
        return self.product[i][j]

    def prod(self, kind, i, j):
        if kind != "mul":
            raise ContractError(f"semigroup index has no {kind!r} operation")
        return self.product[i][j]

    def name(self, i):
        return self.elements[i]

    def index_of(self, name):
        try:
            return self.elements.index(str(name))
        except ValueError:
            raise MalformedInputError(f"unknown element {name!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, SemigroupTable)
            and self.elements == other.elements
            and self.product == other.product
            and self.unit == other.unit
            and self.claims_commutative == other.claims_commutative
        )

    def __repr__(self):
        return f"SemigroupTable({list(self.elements)})"


def trivial_monoid():
    return SemigroupTable(["e"], [[0]], unit=0, commutative=True)


def cyclic_monoid(n):
    """Z/n under addition, elements named "0".."n-1", unit "0"."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return SemigroupTable([str(i) for i in range(n)], table, unit=0, commutative=True)


class VirtualSemigroup:
    """Infinite index structure given by a computed product on opaque elements
    (integers in practice).  Exhaustive checks become windowed checks."""

    __slots__ = ("description", "op", "unit", "commutative")

    def __init__(self, description, op, unit=None, commutative=False):
        object.__setattr__(self, "description", description)
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "commutative", bool(commutative))

    def __setattr__(self, name, value):
        raise AttributeError("VirtualSemigroup is immutable")

    @property
    def claims_commutative(self):
        return self.commutative

    def mul(self, i, j):
        return self.op(i, j)

    def prod(self, kind, i, j):
        if kind != "mul":
            raise ContractError(f"semigroup index has no {kind!r} operation")
        return self.op(i, j)

    def name(self, i):
        return str(i)

    def __repr__(self):
        return f"VirtualSemigroup({self.description!r})"


def positive_integers_additive():
    """The monoid-free semigroup (Z>0, +); commutative, no unit."""
    return VirtualSemigroup("positive integers under addition", lambda i, j: i + j, commutative=True)


class DimonoidTable:
    """Two n x n tables (left and right products) claiming the five dimonoid
    compatibility identities; ``check_dimonoid`` decides."""

    __slots__ = ("elements", "left", "right")

    def __init__(self, elements, left, right):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise MalformedInputError("dimonoid needs at least one element")
        if len(set(elements)) != len(elements):
            raise MalformedInputError("duplicate element names")
        n = len(elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "left", _validate_table(left, n, "left"))
        object.__setattr__(self, "right", _validate_table(right, n, "right"))

    def __setattr__(self, name, value):
        raise AttributeError("DimonoidTable is immutable")

    @property
    def size(self):
        return len(self.elements)

    def iter_elements(self):
        return range(len(self.elements))

    def left_mul(self, i, j):
        return self.left[i][j]

    def right_mul(self, i, j):
        return self.right[i][j]

    def prod(self, kind, i, j):
        if kind == "left":
            return self.left[i][j]
        if kind == "right":
            return self.right[i][j]
        raise ContractError(f"dimonoid index has no {kind!r} operation")

    def name(self, i):
        return self.elements[i]

    def index_of(self, name):
        try:
            return self.elements.index(str(name))
        except ValueError:
            raise MalformedInputError(f"unknown element {name!r}") from None

    def is_semigroup_form(self):
        return self.left == self.right

    def is_matching_form(self):
        n = len(self.elements)
        return all(self.left[i][j] == i and self.right[i][j] == j for i in range(n) for j in range(n))

    def __repr__(self):
        return f"DimonoidTable({list(self.elements)})"


class Cocycle:
    """Nonzero scalar table over a semigroup; ``check_cocycle`` decides the
    cocycle identity."""

    __slots__ = ("base", "values")

    def __init__(self, base, values):
        if not isinstance(base, SemigroupTable):
            raise MalformedInputError("cocycle base must be a finite semigroup table")
        n = base.size
        if len(values) != n or any(len(row) != n for row in values):
            raise MalformedInputError(f"values: expected {n}x{n} table")
        for i, row in enumerate(values):
            for j, v in enumerate(row):
                if v == 0:
                    raise MalformedInputError(f"values[{i}][{j}]: cocycle values must be nonzero")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "values", tuple(tuple(row) for row in values))

    def __setattr__(self, name, value):
        raise AttributeError("Cocycle is immutable")

    def __call__(self, i, j):
        return self.values[i][j]


def check_semigroup(table, window=None):
    """Associativity over all triples, unit law if a unit is declared, and
    table symmetry if commutativity is claimed.  For a VirtualSemigroup a
    finite ``window`` of elements must be supplied."""
    if isinstance(table, VirtualSemigroup):
        if window is None:
            raise ContractError("virtual semigroup check requires a finite window")
        elems = list(window)
        name = str
        mul = table.mul
        unit = table.unit
        commutative = table.commutative
    else:
        elems = list(table.iter_elements())
        name = table.name
        mul = table.mul
        unit = table.unit
        commutative = table.claims_commutative

    instances = 0
    for a, b, c in product(elems, repeat=3):
        lhs = mul(mul(a, b), c)
        rhs = mul(a, mul(b, c))
        instances += 1
        if lhs != rhs:
            return CheckReport(
                check="semigroup",
                passed=False,
                instances=instances,
                counterexample=Counterexample(
                    equation="associativity",
                    indices=(name(a), name(b), name(c)),
                    lhs=name(lhs),
                    rhs=name(rhs),
                ),
            )
    if unit is not None:
        for a in elems:
            for eqn, lhs in (("unit_left", mul(unit, a)), ("unit_right", mul(a, unit))):
                instances += 1
                if lhs != a:
                    return CheckReport(
                        check="semigroup",
                        passed=False,
                        instances=instances,
                        counterexample=Counterexample(
                            equation=eqn, indices=(name(a),), lhs=name(lhs), rhs=name(a)
                        ),
                    )
    if commutative:
        for a, b in product(elems, repeat=2):
            instances += 1
            if mul(a, b) != mul(b, a):
                return CheckReport(
                    check="semigroup",
                    passed=False,
                    instances=instances,
                    counterexample=Counterexample(
                        equation="commutativity",
                        indices=(name(a), name(b)),
                        lhs=name(mul(a, b)),
                        rhs=name(mul(b, a)),
                    ),
                )
    return CheckReport(check="semigroup", passed=True, instances=instances)


# The five compatibility identities between the two dimonoid products, in the
# fixed scan order used for counterexample selection.
_DIMONOID_IDENTITIES = (
    ("left_left_assoc", lambda L, R, a, b, c: (L(L(a, b), c), L(a, L(b, c)))),
    ("left_absorbs_right", lambda L, R, a, b, c: (L(a, L(b, c)), L(a, R(b, c)))),
    ("inner_assoc", lambda L, R, a, b, c: (L(R(a, b), c), R(a, L(b, c)))),
    ("right_absorbs_left", lambda L, R, a, b, c: (R(L(a, b), c), R(a, R(b, c)))),
    ("right_right_assoc", lambda L, R, a, b, c: (R(R(a, b), c), R(a, R(b, c)))),
)


def check_dimonoid(table):
    """The five dimonoid identities over all triples; the counterexample names
    the identity and the lexicographically first violating triple."""
    n = table.size
    instances = 0
    for eqn, law in _DIMONOID_IDENTITIES:
        for a, b, c in product(range(n), repeat=3):
            lhs, rhs = law(table.left_mul, table.right_mul, a, b, c)
            instances += 1
            if lhs != rhs:
                return CheckReport(
                    check="dimonoid",
                    passed=False,
                    instances=instances,
                    counterexample=Counterexample(
                        equation=eqn,
                        indices=(table.name(a), table.name(b), table.name(c)),
                        lhs=table.name(lhs),
                        rhs=table.name(rhs),
                    ),
                )
    return CheckReport(check="dimonoid", passed=True, instances=instances)


def check_cocycle(cocycle):
    """c(a,b)c(ab,c) = c(a,bc)c(b,c) over all triples; the base semigroup is
    re-verified first."""
    base_report = check_semigroup(cocycle.base)
    if not base_report.passed:
        return CheckReport(
            check="cocycle",
            passed=False,
            instances=base_report.instances,
            counterexample=base_report.counterexample,
            info={"precondition": "semigroup"},
        )
    n = cocycle.base.size
    mul = cocycle.base.mul
    name = cocycle.base.name
    instances = 0
    for a, b, c in product(range(n), repeat=3):
        lhs = cocycle(a, b) * cocycle(mul(a, b), c)
        rhs = cocycle(a, mul(b, c)) * cocycle(b, c)
        instances += 1
        if lhs != rhs:
            return CheckReport(
                check="cocycle",
                passed=False,
                instances=instances,
                counterexample=Counterexample(
                    equation="cocycle",
                    indices=(name(a), name(b), name(c)),
                    lhs=format_scalar(lhs),
                    rhs=format_scalar(rhs),
                ),
            )
    return CheckReport(check="cocycle", passed=True, instances=instances)


def dimonoid_from_semigroup(table):
    """Both dimonoid products equal the semigroup product."""
    report = check_semigroup(table)
    if not report.passed:
        raise ContractError(f"not a semigroup: {report.summary()}")
    return DimonoidTable(table.elements, table.product, table.product)


def matching_dimonoid(n):
    """Left product projects on the first argument, right product on the
    second.  Elements are named a, b, c, ... (s0, s1, ... past 26)."""
    if n < 1:
        raise MalformedInputError("matching dimonoid needs n >= 1")
    if n <= 26:
        names = [chr(ord("a") + i) for i in range(n)]
    else:
        names = [f"s{i}" for i in range(n)]
    left = [[i for _ in range(n)] for i in range(n)]
    right = [[j for j in range(n)] for _ in range(n)]
    return DimonoidTable(names, left, right)


def semigroup_from_dimonoid(table):
    """Recover the semigroup underlying a semigroup-form dimonoid.  The unit,
    if any, is detected; commutativity is set from table symmetry."""
    if not table.is_semigroup_form():
        raise ContractError("dimonoid is not of semigroup form (left and right tables differ)")
    n = table.size
    prod = table.left
    unit = None
    for e in range(n):
        if all(prod[e][a] == a and prod[a][e] == a for a in range(n)):
            unit = e
            break
    commutative = all(prod[i][j] == prod[j][i] for i in range(n) for j in range(n))
    return SemigroupTable(table.elements, prod, unit=unit, commutative=commutative)
