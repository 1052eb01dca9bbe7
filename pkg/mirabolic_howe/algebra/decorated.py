"""Decorated matrices (A, Delta), the index set of the standard basis of the mirabolic module.

A is an n x m matrix of nonnegative integers and Delta an antichain of positions
(i_1, j_1), ..., (i_k, j_k) with strictly increasing rows, strictly decreasing columns
and a positive entry of A at every position. Positions are 1-based throughout.
"""
import itertools
import json
from dataclasses import dataclass
from enum import Enum

from scipy.special import comb

from mirabolic_howe.errors import MalformedDelta


class Convention(Enum):
    """Readings of the pair sum in the normalization exponent.

    Note:
        AND_UNORDERED counts each unordered pair once; the relation i < k and j < l is antisymmetric,
        so it always agrees with AND_ORDERED. BLM_FLIPPED negates BLM and serves as a negative control.
    """

    OR_ORDERED = 'or-ordered'
    AND_ORDERED = 'and-ordered'
    AND_UNORDERED = 'and-unordered'
    BLM = 'blm'
    BLM_FLIPPED = 'blm-flipped'


DEFAULT_CONVENTION = Convention.BLM


@dataclass(frozen=True)
class DecoratedMatrix(object):
    entries: tuple
    delta: tuple = ()

    def __post_init__(self):
        entries = tuple(tuple(int(a) for a in row) for row in self.entries)
        delta = tuple((int(i), int(j)) for i, j in self.delta)
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'delta', delta)

        if not entries or not entries[0]:
            raise ValueError('a decorated matrix needs at least one row and one column')
        if any(len(row) != len(entries[0]) for row in entries):
            raise ValueError('ragged matrix {}'.format(entries))
        if any(a < 0 for row in entries for a in row):
            raise ValueError('negative entry in {}'.format(entries))
        for t, (i, j) in enumerate(delta):
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise MalformedDelta('position {} outside a {}x{} matrix'.format((i, j), self.n, self.m))
            if entries[i - 1][j - 1] < 1:
                raise MalformedDelta('decorated position {} carries a zero entry'.format((i, j)))
            if t and not (delta[t - 1][0] < i and delta[t - 1][1] > j):
                raise MalformedDelta('decoration {} is not strictly monotone'.format(delta))

    @property
    def n(self):
        return len(self.entries)

    @property
    def m(self):
        return len(self.entries[0])

    @property
    def total(self):
        return sum(sum(row) for row in self.entries)

    def entry(self, i, j):
        """1-based entry, zero outside the matrix."""
        if 1 <= i <= self.n and 1 <= j <= self.m:
            return self.entries[i - 1][j - 1]
        return 0

    def row_of(self, t):
        """i_t with the sentinels i_0 = 0 and i_{k+1} = n + 1 (t is 1-based)."""
        if t < 1:
            return 0
        if t > len(self.delta):
            return self.n + 1
        return self.delta[t - 1][0]

    def col_of(self, t):
        """j_t with the sentinels j_0 = m + 1 and j_{k+1} = 0 (t is 1-based)."""
        if t < 1:
            return self.m + 1
        if t > len(self.delta):
            return 0
        return self.delta[t - 1][1]

    def sort_key(self):
        return tuple(a for row in self.entries for a in row), self.delta

    def label(self):
        """Text label such as '[[1,0],[0,1]]{(1,1)}'."""
        matrix = '[' + ','.join('[' + ','.join(str(a) for a in row) + ']' for row in self.entries) + ']'
        decoration = '{' + ','.join('({},{})'.format(i, j) for i, j in self.delta) + '}'
        return matrix + decoration

    def to_json(self):
        return {'n': self.n, 'm': self.m, 'A': [list(row) for row in self.entries],
                'delta': [list(p) for p in self.delta]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(row) for row in data['A']), tuple(tuple(p) for p in data['delta']))

    @classmethod
    def from_label(cls, text):
        text = text.strip()
        split = text.index('{')
        entries = json.loads(text[:split])
        body = text[split + 1:text.rindex('}')].strip()
        delta = []
        if body:
            for chunk in body.split('),'):
                i, j = chunk.strip().strip('()').split(',')
                delta.append((int(i), int(j)))
        return cls(tuple(tuple(row) for row in entries), tuple(delta))

    def __str__(self):
        return self.label()


def make_decorated(entries, delta):
    """Builds (A, Delta) or returns None when a decorated position would carry a zero entry."""

    for i, j in delta:
        if entries[i - 1][j - 1] < 1:
            return None
    return DecoratedMatrix(entries, delta)


def moved_entries(x, plus, minus):
    """Entries of A + E_plus - E_minus, or None if the result has a negative entry."""

    rows = [list(row) for row in x.entries]
    rows[plus[0] - 1][plus[1] - 1] += 1
    rows[minus[0] - 1][minus[1] - 1] -= 1
    if rows[minus[0] - 1][minus[1] - 1] < 0:
        return None
    return tuple(tuple(row) for row in rows)


def _compositions(total, parts):
    """Weak compositions of total into parts, in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def compositions(total, parts):
    return list(_compositions(total, parts))


def _antichains(entries, row, max_col):
    """Decorations using rows >= row and columns < max_col, on positive cells."""
    yield ()
    for i in range(row, len(entries) + 1):
        for j in range(1, max_col):
            if entries[i - 1][j - 1] > 0:
                for rest in _antichains(entries, i + 1, j):
                    yield ((i, j),) + rest


def enumerate_decorated(n, m, d):
    """All (A, Delta) with A an n x m matrix of total d, ordered by flattened A then by Delta."""

    if n < 1 or m < 1 or d < 0:
        raise ValueError('need n, m >= 1 and d >= 0, got ({}, {}, {})'.format(n, m, d))
    basis = []
    for flat in _compositions(d, n * m):
        entries = tuple(flat[r * m:(r + 1) * m] for r in range(n))
        for delta in sorted(_antichains(entries, 1, m + 1)):
            basis.append(DecoratedMatrix(entries, delta))
    return basis


def dimension_count(n, m, d):
    """Closed-form size of the decorated basis: sum_l C(m,l) C(n,l) C(nm+d-1-l, d-l)."""

    if n < 1 or m < 1 or d < 0:
        raise ValueError('need n, m >= 1 and d >= 0, got ({}, {}, {})'.format(n, m, d))
    return sum(comb(m, l, exact=True) * comb(n, l, exact=True) * comb(n * m + d - 1 - l, d - l, exact=True)
               for l in range(min(n, m, d) + 1))


def marginals(x):
    """Row sums and column sums of A."""
    row_sums = tuple(sum(row) for row in x.entries)
    col_sums = tuple(sum(x.entries[i][j] for i in range(x.n)) for j in range(x.m))
    return row_sums, col_sums


def transpose(x):
    """(A, Delta) -> (A^t, Delta^t); Delta^t lists (j_k, i_k), ..., (j_1, i_1)."""
    entries = tuple(zip(*x.entries))
    delta = tuple((j, i) for i, j in reversed(x.delta))
    return DecoratedMatrix(entries, delta)


def is_dominated(position, delta):
    """True when position <= some (k, l) in Delta coordinatewise."""
    i, j = position
    return any(i <= k and j <= l for k, l in delta)


def _pair_sum(x, convention):
    cells = [(i, j, x.entries[i - 1][j - 1]) for i in range(1, x.n + 1) for j in range(1, x.m + 1)
             if x.entries[i - 1][j - 1]]
    total = 0
    for (i, j, a), (k, l, b) in itertools.product(cells, repeat=2):
        if (i, j) == (k, l):
            continue
        if convention is Convention.OR_ORDERED:
            hit = i < k or j < l
        elif convention in (Convention.AND_ORDERED, Convention.AND_UNORDERED):
            hit = i < k and j < l
        else:
            hit = i >= k and j < l
        if hit:
            total += a * b
    return total


def weight_exponent(x, convention=DEFAULT_CONVENTION):
    """Exponent w(A, Delta) with [A]_Delta = v^w e_(A, Delta).

    Note:
        w = -(pair sum) - (sum of a_ij over positions dominated by Delta). Under the default
        convention the pair sum runs over ordered pairs with i >= k and j < l.
    """

    dominated = sum(x.entries[i - 1][j - 1] for i in range(1, x.n + 1) for j in range(1, x.m + 1)
                    if is_dominated((i, j), x.delta))
    weight = -_pair_sum(x, convention) - dominated
    if convention is Convention.BLM_FLIPPED:
        return -weight
    return weight


def transpose_defect(x, convention=DEFAULT_CONVENTION):
    """w(A, Delta) - w(A^t, Delta^t)."""
    return weight_exponent(x, convention) - weight_exponent(transpose(x), convention)


def diagonal(composition, delta=()):
    """diag(c) decorated by delta."""
    size = len(composition)
    return DecoratedMatrix(tuple(tuple(composition[i] if i == j else 0 for j in range(size))
                                 for i in range(size)), delta)
