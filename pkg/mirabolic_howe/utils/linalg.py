"""Exact rational elimination on sparse vectors.

A sparse vector is a dict key -> Fraction with no zero values; keys only need a total order.
"""
from fractions import Fraction


def axpy(target, scale, source):
    """target += scale * source in place, dropping entries that cancel."""
    for key, value in source.items():
        total = target.get(key, 0) + scale * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


class EchelonBasis(object):
    """Incrementally built echelon basis of a subspace of Q^keys.

    Note:
        Each stored row is normalized so that its pivot, the smallest key it carries, has value 1,
        and no two rows share a pivot. The smallest key of any nonzero combination of rows is
        then a pivot, so a vector whose smallest key is not a pivot after partial reduction is
        independent of the stored rows.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vector):
        """Partially reduced copy of vector: empty when it lies in the span."""
        residual = {key: Fraction(value) for key, value in vector.items() if value}
        while residual:
            pivot = min(residual)
            row = self.rows.get(pivot)
            if row is None:
                return residual
            axpy(residual, -residual[pivot], row)
        return residual

    def add(self, vector):
        """Adds vector when it is independent; returns True when the rank grew."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        lead = residual[pivot]
        self.rows[pivot] = {key: value / lead for key, value in residual.items()}
        return True

    def contains(self, vector):
        return not self.reduce(vector)


def rank(vectors):
    basis = EchelonBasis()
    for vector in vectors:
        basis.add(vector)
    return basis.rank
