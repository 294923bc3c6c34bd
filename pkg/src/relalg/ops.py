"""Operation carriers: indexed bilinear operations and finite-dimensional
algebras given by structure constants.

A pair-indexed operation takes two index elements and two vectors; a
family-indexed operation takes a single index element.  Both are thin
wrappers around a function, tagged with the index structure they live over,
so the axiom engine can validate arity and index compatibility.
"""

from fractions import Fraction
from itertools import product

from .errors import ContractError, MalformedInputError
from .lincomb import LinComb, ZERO
from .semigroups import SemigroupTable


class PairIndexedOp:
    """Bilinear operation indexed by a pair of semigroup elements."""

    __slots__ = ("index", "fn")
    arity = 2

    def __init__(self, index, fn):
        self.index = index
        self.fn = fn

    def __call__(self, a, b, x, y):
        return self.fn(a, b, x, y)


class FamilyIndexedOp:
    """Bilinear operation indexed by a single semigroup (or dimonoid) element."""

    __slots__ = ("index", "fn")
    arity = 1

    def __init__(self, index, fn):
        self.index = index
        self.fn = fn

    def __call__(self, a, x, y):
        return self.fn(a, x, y)


class OpCarrier:
    """Bundle of named operations over a common index structure, the shape the
    axiom engine consumes.  ``basis`` optionally names a finite basis for
    carriers that have one."""

    __slots__ = ("index", "ops", "unit_vector", "basis")

    def __init__(self, index, ops, unit_vector=None, basis=None):
        self.index = index
        self.ops = dict(ops)
        self.unit_vector = unit_vector
        self.basis = basis

    def op(self, role):
        try:
            return self.ops[role]
        except KeyError:
            raise ContractError(f"carrier has no operation for role {role!r}") from None


def _validate_constants(block, dim, where):
    if len(block) != dim:
        raise MalformedInputError(f"{where}: expected {dim} slices, got {len(block)}")
    out = []
    for i, plane in enumerate(block):
        if len(plane) != dim:
            raise MalformedInputError(f"{where}[{i}]: expected {dim} rows")
        rows = []
        for j, row in enumerate(plane):
            if len(row) != dim:
                raise MalformedInputError(f"{where}[{i}][{j}]: expected {dim} coefficients")
            rows.append(tuple(c if isinstance(c, Fraction) else Fraction(c) for c in row))
        out.append(tuple(rows))
    return tuple(out)


class FiniteRelativeAlgebra:
    """Finite-dimensional algebra over a finite index semigroup, with one
    structure-constant block per operation role and index tuple.

    ``ops`` maps a role name to a dict keyed by index tuples: pairs ``(i, j)``
    for pair-indexed roles, singletons ``(i,)`` for family-indexed roles.
    Block ``[i][j][k]`` is the coefficient of basis element k in (e_i op e_j).
    """

    __slots__ = ("basis", "index", "ops", "unit_vector")

    def __init__(self, basis, index, ops, unit_vector=None):
        basis = tuple(str(b) for b in basis)
        if not basis:
            raise MalformedInputError("algebra needs at least one basis element")
        if len(set(basis)) != len(basis):
            raise MalformedInputError("duplicate basis names")
        if not isinstance(index, SemigroupTable):
            raise MalformedInputError("finite algebra requires a finite semigroup index")
        dim = len(basis)
        n = index.size
        clean = {}
        for role, table in ops.items():
            keys = set(table)
            arities = {len(k) for k in keys}
            if len(arities) != 1:
                raise MalformedInputError(f"ops[{role}]: mixed index arities")
            arity = arities.pop()
            if arity not in (1, 2):
                raise MalformedInputError(f"ops[{role}]: index tuples must have 1 or 2 entries")
            expected = set(product(range(n), repeat=arity))
            if keys != expected:
                missing = sorted(expected - keys)
                extra = sorted(keys - expected)
                raise MalformedInputError(
                    f"ops[{role}]: wrong index keys (missing {missing}, extra {extra})"
                )
            clean[role] = {
                key: _validate_constants(block, dim, f"ops[{role}][{key}]")
                for key, block in table.items()
            }
        self.basis = basis
        self.index = index
        self.ops = clean
        if unit_vector is not None and not isinstance(unit_vector, LinComb):
            unit_vector = LinComb(enumerate(unit_vector))
        self.unit_vector = unit_vector

    @property
    def dim(self):
        return len(self.basis)

    def roles(self):
        return sorted(self.ops)

    def role_arity(self, role):
        table = self.ops[role]
        return len(next(iter(table)))

    def basis_comb(self, i):
        return LinComb.single(i)

    def basis_name(self, i):
        return self.basis[i]

    def apply(self, role, idx, x, y):
        """Apply a role at a fixed index tuple to two vectors."""
        block = self.ops[role][idx]
        acc = {}
        for i, ci in x:
            for j, cj in y:
                w = ci * cj
                row = block[i][j]
                for k, ck in enumerate(row):
                    if ck != 0:
                        acc[k] = acc.get(k, ZERO) + w * ck
        return LinComb(acc)

    def op(self, role):
        if role not in self.ops:
            raise ContractError(f"algebra has no operation for role {role!r}")
        arity = self.role_arity(role)
        if arity == 2:
            return PairIndexedOp(self.index, lambda a, b, x, y, r=role: self.apply(r, (a, b), x, y))
        return FamilyIndexedOp(self.index, lambda a, x, y, r=role: self.apply(r, (a,), x, y))

    def as_carrier(self, roles=None):
        names = self.roles() if roles is None else roles
        return OpCarrier(
            self.index, {r: self.op(r) for r in names}, self.unit_vector, basis=self.basis
        )

    def with_ops(self, ops, unit_vector=None):
        return FiniteRelativeAlgebra(
            self.basis, self.index, ops, self.unit_vector if unit_vector is None else unit_vector
        )


def materialize_pair_op(op, dim, index):
    """Evaluate a pair-indexed operation on all basis pairs of a finite
    carrier, producing a structure-constant table."""
    n = index.size
    out = {}
    for a, b in product(range(n), repeat=2):
        block = []
        for i in range(dim):
            rows = []
            for j in range(dim):
                vec = op(a, b, LinComb.single(i), LinComb.single(j))
                row = [ZERO] * dim
                for k, c in vec:
                    row[k] = c
                rows.append(tuple(row))
            block.append(tuple(rows))
        out[(a, b)] = tuple(block)
    return out


class RotaBaxterFamily:
    """A family of linear operators, one per index element, over a carrier
    with a pair-indexed product.

    ``maps`` is either a dict from index element to a square matrix (rows =
    output coordinates) or a callable ``(alpha, vector) -> vector``; the dict
    form raises a window-closure error when asked outside its keys.
    """

    __slots__ = ("carrier", "maps")

    def __init__(self, carrier, maps):
        self.carrier = carrier
        self.maps = maps

    def apply(self, alpha, x):
        if callable(self.maps):
            return self.maps(alpha, x)
        try:
            matrix = self.maps[alpha]
        except KeyError:
            raise ContractError(
                f"window closure: no operator defined for index {alpha!r}"
            ) from None
        return apply_matrix(matrix, x)


def apply_matrix(matrix, x):
    acc = {}
    for j, c in x:
        for i, row in enumerate(matrix):
            v = row[j]
            if v != 0:
                acc[i] = acc.get(i, ZERO) + c * v
    return LinComb(acc)


class MorphismFamily:
    """A family of linear maps between two algebras over the same index
    semigroup, one (target_dim x source_dim) matrix per index element."""

    __slots__ = ("source", "target", "maps")

    def __init__(self, source, target, maps):
        if source.index != target.index:
            raise MalformedInputError("morphism endpoints use different index semigroups")
        n = source.index.size
        if sorted(maps) != list(range(n)):
            raise MalformedInputError("morphism needs exactly one map per index element")
        for a, matrix in maps.items():
            if len(matrix) != target.dim or any(len(row) != source.dim for row in matrix):
                raise MalformedInputError(
                    f"maps[{a}]: expected {target.dim}x{source.dim} matrix"
                )
        self.source = source
        self.target = target
        self.maps = {
            a: tuple(
                tuple(c if isinstance(c, Fraction) else Fraction(c) for c in row)
                for row in matrix
            )
            for a, matrix in maps.items()
        }

    def apply(self, alpha, x):
        return apply_matrix(self.maps[alpha], x)
