"""Classification of triples (f, f', w) into decorated matrices, and orbit tables.

For flags f = (V_i) and f' = (V'_j) the matrix A records the dimensions of V_i n V'_j by
inclusion-exclusion. The decoration of a vector w is read off the smallest lower set L of
cells with w in span(L) = sum over (i, j) in L of V_i n V'_j: Delta is the set of maximal
cells of L.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from mirabolic_howe.algebra.decorated import DecoratedMatrix
from mirabolic_howe.errors import ScaleExceeded
from mirabolic_howe.oracle.field import check_desk_scale, intersect, join, vector_space
from mirabolic_howe.oracle.flags import enumerate_flags
from mirabolic_howe.optimize.config import max_work

logger = logging.getLogger(__name__)


def _lower_sets(n, m):
    """Nonincreasing row-length vectors (lambda_1, ..., lambda_n) with m >= lambda_1, ordered by size."""
    shapes = [s for s in itertools.product(range(m + 1), repeat=n)
              if all(s[i] >= s[i + 1] for i in range(n - 1))]
    return sorted(shapes, key=lambda s: (sum(s), s))


def maximal_cells(shape):
    """Corners (i, lambda_i) of a lower set, in increasing row order."""
    cells = []
    for i, length in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if length > below:
            cells.append((i + 1, length))
    return tuple(cells)


class PairLattice(object):
    """Intersections V_i n V'_j of two flags and the spans of lower sets of cells."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.n = first.n
        self.m = second.n
        self.cells = [[intersect(first.step(i), second.step(j)) for j in range(self.m + 1)]
                      for i in range(self.n + 1)]
        self._spans = {}
        self._decorations = None

    @property
    def entries(self):
        dim = [[self.cells[i][j].dim for j in range(self.m + 1)] for i in range(self.n + 1)]
        return tuple(tuple(dim[i][j] - dim[i - 1][j] - dim[i][j - 1] + dim[i - 1][j - 1]
                           for j in range(1, self.m + 1)) for i in range(1, self.n + 1))

    def span(self, shape):
        """Member bitmask of span(L) for the lower set with row lengths shape."""
        if shape not in self._spans:
            total = self.cells[0][0]
            for i, length in enumerate(shape):
                if length:
                    total = join(total, self.cells[i + 1][length])
            self._spans[shape] = total.members
        return self._spans[shape]

    def decorations(self):
        """Delta for every vector code, from the smallest lower set containing the vector."""
        if self._decorations is None:
            size = vector_space(self.first.steps[0].d, self.first.steps[0].q).size
            decorations = [None] * size
            remaining = (1 << size) - 1
            for shape in _lower_sets(self.n, self.m):
                fresh = self.span(shape) & remaining
                if fresh:
                    delta = maximal_cells(shape)
                    for code in range(size):
                        if fresh >> code & 1:
                            decorations[code] = delta
                    remaining &= ~fresh
                if not remaining:
                    break
            self._decorations = decorations
        return self._decorations


@lru_cache(maxsize=100000)
def pair_lattice(first, second):
    return PairLattice(first, second)


def minimal_lower_set(lattice, code, choose=None):
    """Greedy removal of corner cells while the vector stays in the span.

    :param lattice (PairLattice)    : the two flags
    :param code (int)               : vector code of w
    :param choose                   : picks one cell from the list of removable corners, defaults to the first
    :return                         : row lengths of the fixed point
    """

    shape = [lattice.m] * lattice.n
    while True:
        removable = []
        for i, length in maximal_cells(tuple(shape)):
            smaller = list(shape)
            smaller[i - 1] = length - 1
            if lattice.span(tuple(smaller)) >> code & 1:
                removable.append((i, length))
        if not removable:
            return tuple(shape)
        i, length = choose(removable) if choose else removable[0]
        shape[i - 1] = length - 1


def classify_triple(first, second, code):
    """The decorated matrix of the G-orbit of (f, f', w)."""
    lattice = pair_lattice(first, second)
    delta = maximal_cells(minimal_lower_set(lattice, code))
    return DecoratedMatrix(lattice.entries, delta)


def classify_fast(first, second, code):
    """Same as classify_triple, using the per-pair table of decorations."""
    lattice = pair_lattice(first, second)
    return DecoratedMatrix(lattice.entries, lattice.decorations()[code])


@dataclass
class OrbitEntry(object):
    representative: tuple
    size: int

    def to_json(self):
        first, second, code = self.representative
        q = first.steps[0].q
        vector = vector_space(first.steps[0].d, q).decode(code).tolist()
        return {'size': self.size, 'flag': first.to_json(), 'flag_prime': second.to_json(), 'vector': vector}


class OrbitTable(object):
    """Orbit sizes and first-found representatives for all G-orbits on X_n x X_m x V."""

    def __init__(self, n, m, d, q, entries):
        self.n, self.m, self.d, self.q = n, m, d, q
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __contains__(self, x):
        return x in self.entries

    def size(self, x):
        return self.entries[x].size

    def representative(self, x):
        return self.entries[x].representative

    def keys(self):
        return sorted(self.entries, key=lambda x: x.sort_key())

    def total(self):
        return sum(entry.size for entry in self.entries.values())

    def to_json(self):
        return {'n': self.n, 'm': self.m, 'd': self.d, 'q': self.q,
                'orbits': [dict(matrix=x.to_json(), **self.entries[x].to_json()) for x in self.keys()]}


def triple_count(n, m, d, q):
    return len(enumerate_flags(n, d, q)) * len(enumerate_flags(m, d, q)) * q ** d


def check_budget(n, m, d, q, budget=None):
    check_desk_scale(d, q)
    work = triple_count(n, m, d, q)
    limit = max_work(budget)
    if work > limit:
        raise ScaleExceeded('enumerating {} triples exceeds the work budget {}'.format(work, limit))
    return work


@lru_cache(maxsize=None)
def _build(n, m, d, q):
    entries = {}
    size = q ** d
    for first in enumerate_flags(n, d, q):
        for second in enumerate_flags(m, d, q):
            lattice = pair_lattice(first, second)
            entries_matrix = lattice.entries
            for code, delta in enumerate(lattice.decorations()):
                x = DecoratedMatrix(entries_matrix, delta)
                entry = entries.get(x)
                if entry is None:
                    entries[x] = OrbitEntry((first, second, code), 1)
                else:
                    entry.size += 1
    logger.debug('orbit table (%d,%d,%d) q=%d: %d orbits over %d triples', n, m, d, q, len(entries),
                 len(enumerate_flags(n, d, q)) * len(enumerate_flags(m, d, q)) * size)
    return OrbitTable(n, m, d, q, entries)


def build_orbit_table(n, m, d, q, budget=None):
    """Enumerates X_n x X_m x F_q^d and groups triples by their decorated matrix.

    :raises ScaleExceeded: outside the desk-scale bounds or above the work budget
    """
    check_budget(n, m, d, q, budget)
    return _build(n, m, d, q)
