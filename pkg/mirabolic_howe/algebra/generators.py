"""The generators E_h, F_h, H_a^{+-}, L of MS_{n,d} as explicit combinations of [D]_Delta."""
from mirabolic_howe.algebra.decorated import compositions, diagonal, DecoratedMatrix
from mirabolic_howe.algebra.laurent import LaurentPolynomial
from mirabolic_howe.algebra.module import Context, ModuleElement, Side, TokenKind


def _unit_plus_diagonal(c, row, col):
    size = len(c)
    return DecoratedMatrix(tuple(tuple(c[i] * (i == j) + ((i + 1, j + 1) == (row, col)) for j in range(size))
                                 for i in range(size)))


def generator_components(token, marginal, side=Side.LEFT):
    """Summands of a generator that can multiply a basis element with the given marginal.

    Note:
        On the left, (A, Delta) is multiplied by summands whose column sums equal the row sums of A;
        on the right by summands whose row sums equal the column sums of A. There is at most one such
        summand for E, F and H, and two for L.
    :param token        : generator token
    :param marginal     : row sums of A (left) or column sums of A (right)
    :param side         : Side.LEFT or Side.RIGHT
    :return             : list of (DecoratedMatrix, LaurentPolynomial) in the [.]-basis
    """

    c = list(marginal)
    h = token.index
    if token.kind in (TokenKind.HPLUS, TokenKind.HMINUS):
        sign = -1 if token.kind is TokenKind.HPLUS else 1
        return [(diagonal(c), LaurentPolynomial.monomial(sign * c[h - 1]))]
    if token.kind is TokenKind.L:
        terms = [(diagonal(c), LaurentPolynomial.monomial(-2 * c[0]))]
        if c[0] > 0:
            terms.append((diagonal(c, ((1, 1),)), LaurentPolynomial.monomial(-c[0])))
        return terms

    # E_h = diag + E_{h,h+1}, F_h = diag + E_{h+1,h}; the unit sits in the source column on the left
    # and in the source row on the right.
    if token.kind is TokenKind.E:
        row, col = h, h + 1
    else:
        row, col = h + 1, h
    shrink = col if side is Side.LEFT else row
    if c[shrink - 1] < 1:
        return []
    c[shrink - 1] -= 1
    return [(_unit_plus_diagonal(c, row, col), LaurentPolynomial.one())]


def generator_element(token, n, d):
    """The generator as an element of MS_{n,d}, i.e. of the context (n, n, d)."""

    token.validate(n)
    element = ModuleElement.zero(Context(n, n, d))
    for c in compositions(d, n):
        terms = generator_components(token, c, Side.LEFT)
        if terms:
            element = element + ModuleElement(Context(n, n, d), terms)
    return element
