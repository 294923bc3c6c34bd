"""Canonical small carriers used by the test suite and the CLI builtins."""

from fractions import Fraction

from .lincomb import LinComb
from .ops import FiniteRelativeAlgebra, OpCarrier, PairIndexedOp, RotaBaxterFamily
from .semigroups import positive_integers_additive, trivial_monoid


def truncated_integration_zinbiel(degree):
    """The polynomial zinbiel product (integrate the left factor, multiply)
    on the basis t^0 .. t^degree, products past the top degree truncated to
    zero: t^m * t^n = t^(m+n+1) / (m+1)."""
    dim = degree + 1
    block = []
    for m in range(dim):
        rows = []
        for n in range(dim):
            row = [Fraction(0)] * dim
            if m + n + 1 <= degree:
                row[m + n + 1] = Fraction(1, m + 1)
            rows.append(tuple(row))
        block.append(tuple(rows))
    return FiniteRelativeAlgebra(
        [f"t^{m}" for m in range(dim)],
        trivial_monoid(),
        {"ast": {(0, 0): tuple(block)}},
    )


def rational_line_carrier():
    """The rationals as a one-dimensional carrier over the positive integers
    under addition, with the index-independent product."""
    index = positive_integers_additive()

    def mul(a, b, x, y):
        return LinComb.single(0, x.coeff(0) * y.coeff(0))

    return OpCarrier(index, {"mul": PairIndexedOp(index, mul)}, basis=("1",))


def reciprocal_rota_baxter():
    """R_n(x) = x / n on the rational line; the standard windowed example."""
    return RotaBaxterFamily(rational_line_carrier(), lambda n, x: x.scale(Fraction(1, n)))
