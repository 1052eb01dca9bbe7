"""Vectors and subspaces of F_q^d for a prime q.

Vectors are encoded as integers in base q (coordinate 0 is the least significant digit).
A subspace is stored by its reduced row echelon basis, which is canonical, and carries the
bitmask of its member codes so that intersection and containment are integer operations.
"""
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from mirabolic_howe.errors import ScaleExceeded
from mirabolic_howe.optimize.config import MAX_DIMENSION, SUPPORTED_FIELDS


def check_desk_scale(d, q):
    """Raises ScaleExceeded outside d <= MAX_DIMENSION and q in SUPPORTED_FIELDS."""
    if q not in SUPPORTED_FIELDS:
        raise ScaleExceeded('q={} is not one of the supported primes {}'.format(q, SUPPORTED_FIELDS))
    if not 0 <= d <= MAX_DIMENSION:
        raise ScaleExceeded('d={} is outside the desk-scale bound 0..{}'.format(d, MAX_DIMENSION))


def mod_p(matrix, q):
    return np.asarray(matrix % q, dtype=np.int64)


def inv_mod_scalar(a, q):
    return pow(int(a) % q, q - 2, q)


def rref_mod(matrix, q):
    """Reduced row echelon form over F_q.

    :param matrix (np.ndarray)  : integer matrix with at least one row
    :param q (int)              : prime modulus
    :return                     : (reduced matrix without zero rows, pivot columns)
    """

    reduced = mod_p(np.array(matrix, dtype=np.int64), q)
    rows, cols = reduced.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(reduced[r:, c])[0]
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            reduced[[r, pivot]] = reduced[[pivot, r]]
        reduced[r] = mod_p(reduced[r] * inv_mod_scalar(reduced[r, c], q), q)
        for i in range(rows):
            if i != r and reduced[i, c]:
                reduced[i] = mod_p(reduced[i] - reduced[i, c] * reduced[r], q)
        pivots.append(c)
        r += 1
    return reduced[:r], pivots


class VectorSpace(object):
    """F_q^d with an addition table over vector codes."""

    def __init__(self, d, q):
        self.d = d
        self.q = q
        self.size = q ** d
        self.powers = np.array([q ** i for i in range(d)], dtype=np.int64)
        self.coords = np.array([[k // q ** i % q for i in range(d)] for k in range(self.size)],
                               dtype=np.int64).reshape(self.size, d)
        total = (self.coords[:, None, :] + self.coords[None, :, :]) % q
        self.add_table = total @ self.powers

    def encode(self, vector):
        return int(np.dot(np.asarray(vector, dtype=np.int64) % self.q, self.powers)) if self.d else 0

    def decode(self, code):
        return self.coords[code]

    def add(self, a, b):
        return int(self.add_table[a, b])

    def negate(self, a):
        return self.encode(-self.decode(a))


@lru_cache(maxsize=None)
def vector_space(d, q):
    return VectorSpace(d, q)


@dataclass(frozen=True)
class Subspace(object):
    """A subspace of F_q^d given by its canonical RREF rows."""

    d: int
    q: int
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)

    @cached_property
    def members(self):
        """Bitmask with bit k set when the vector with code k lies in the subspace."""
        space = vector_space(self.d, self.q)
        if not self.rows:
            return 1
        basis = np.array(self.rows, dtype=np.int64)
        combos = np.array(list(itertools.product(range(self.q), repeat=self.dim)), dtype=np.int64)
        codes = (combos @ basis % self.q) @ space.powers
        mask = 0
        for code in codes.tolist():
            mask |= 1 << code
        return mask

    def contains_vector(self, code):
        return bool(self.members >> code & 1)

    def contains(self, other):
        return other.members & ~self.members == 0

    def transform(self, g):
        """Image under the invertible matrix g, acting on column vectors."""
        if not self.rows:
            return self
        image = mod_p(np.array(self.rows, dtype=np.int64) @ np.asarray(g, dtype=np.int64).T, self.q)
        return subspace_from_vectors(image, self.d, self.q)

    def to_json(self):
        return [list(row) for row in self.rows]


def subspace_from_vectors(vectors, d, q):
    if d == 0:
        return Subspace(d, q, ())
    vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, d)
    if vectors.shape[0] == 0:
        return Subspace(d, q, ())
    reduced, _ = rref_mod(vectors, q)
    return Subspace(d, q, tuple(tuple(int(a) for a in row) for row in reduced))


@lru_cache(maxsize=None)
def subspace_from_members(mask, d, q):
    """The subspace whose member bitmask is mask; mask must describe a subspace."""
    space = vector_space(d, q)
    codes = [k for k in range(space.size) if mask >> k & 1]
    return subspace_from_vectors(space.coords[codes], d, q)


def zero_subspace(d, q):
    return Subspace(d, q, ())


def whole_space(d, q):
    return subspace_from_vectors(np.eye(d, dtype=np.int64), d, q)


def intersect(a, b):
    return subspace_from_members(a.members & b.members, a.d, a.q)


@lru_cache(maxsize=None)
def join(a, b):
    if not a.rows:
        return b
    if not b.rows:
        return a
    return subspace_from_vectors(np.array(a.rows + b.rows, dtype=np.int64), a.d, a.q)


def subspace_algebra(op, a, b):
    """Lattice operation by name: 'intersect', 'sum', 'contains' or 'dim'."""
    if op == 'intersect':
        return intersect(a, b)
    if op == 'sum':
        return join(a, b)
    if op == 'contains':
        return a.contains(b)
    if op == 'dim':
        return a.dim
    raise ValueError('unknown subspace operation {!r}'.format(op))


@lru_cache(maxsize=None)
def enumerate_subspaces(d, q):
    """Every subspace of F_q^d in canonical order: by dimension, pivot columns, then free entries."""

    check_desk_scale(d, q)
    result = []
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, d) if c not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * d for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, c), value in zip(free, values):
                    rows[r][c] = value
                result.append(Subspace(d, q, tuple(tuple(row) for row in rows)))
    return tuple(result)


def count_subspaces(d, k, q):
    """Number of k-dimensional subspaces of F_q^d, by enumeration."""
    return sum(1 for s in enumerate_subspaces(d, q) if s.dim == k)


def random_invertible(d, q, rng):
    """A uniformly drawn element of GL_d(F_q), using the given random.Random."""
    while True:
        g = np.array([[rng.randrange(q) for _ in range(d)] for _ in range(d)], dtype=np.int64)
        _, pivots = rref_mod(g, q)
        if len(pivots) == d:
            return g
