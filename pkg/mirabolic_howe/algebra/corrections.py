"""Registry of places where the printed action formulas and relations are read differently from the letter.

Each entry names the printed reading and the reading the engine uses. Passing an id in the
``literal`` set of the engine (or of the relation checker) evaluates that place as printed,
which is how the duality and presentation reports demonstrate that the correction is needed.
"""
from collections import namedtuple

Correction = namedtuple('Correction', ['id', 'location', 'printed', 'corrected', 'semantic'])

CORRECTIONS = (
    Correction('left-F-f-band', 'left F_h, row h decorated, row h+1 not',
               'exponent beta\'(p) - 1 for i_{l+1} < p <= i_l (row indices, an empty range)',
               'exponent beta\'(p) - 1 for j_{l+1} < p <= j_l', True),
    Correction('left-F-h-band', 'left F_h, rows h and h+1 decorated, unchanged decoration',
               'exponent beta\'(p) for every p != j_{l+1}',
               'exponent beta\'(p) - 1 for j_{l+1} < p <= j_l, beta\'(p) otherwise', True),
    Correction('right-a-range', 'right H_r', 'r in [1, n]', 'r in [1, m]', False),
    Correction('right-b-sum', 'right L, last decorated column > 1',
               'sum over i_k < t <= t', 'sum over i_k < i <= t of a_{i,1}', False),
    Correction('right-c-sum', 'right L, last decorated column = 1',
               'sum over i_{k-1} < <= i_k', 'sum over i_{k-1} < i <= i_k of a_{i,1}', False),
    Correction('right-F-g-xi', 'right F_h, column h+1 decorated, column h not, moved decoration',
               'exponent xi(i_l) - ... + 1', 'exponent xi\'(i_l) - ... + 1', True),
    Correction('right-E-h-band', 'right E_h, columns h and h+1 decorated, unchanged decoration',
               'exponent xi(p) for every p != i_{l-1}',
               'exponent xi(p) - 1 for i_{l-1} < p <= i_l, xi(p) otherwise', True),
    Correction('right-E-h-xi-index', 'right E_h, columns h and h+1 decorated, split decorations',
               'exponent built on xi(j_{l-1})', 'exponent built on xi(i_{l-1})', True),
    Correction('right-F-h-xi-prime', 'right F_h, columns h and h+1 decorated, p = i_l',
               'exponent xi(p) - 1', 'exponent xi\'(p) - 1', True),
    Correction('right-F-h-last', 'right F_h, columns h and h+1 decorated, split decorations',
               'exponent xi(p) - sum_{s<i<=p} a_{i,h+1} - 1',
               'exponent xi\'(p) - sum_{s<i<=p} a_{i,h+1} + 1', True),
    Correction('positivity-filter', 'every case producing a modified matrix',
               'all summands listed', 'summands whose decorated entry vanishes are dropped', False),
    Correction('presentation-H-sign', 'relations involving H',
               'abstract H_a^{+-1} realized as H_a^{+-}', 'abstract H_a^{+-1} realized as H_a^{-+}', True),
    Correction('presentation-LF-order', 'absorption relation for F',
               'L F_i = L F_i L', 'F_i L = L F_i L', True),
)

BY_ID = {correction.id: correction for correction in CORRECTIONS}


def check_literal(literal):
    """Validates a set of correction ids and returns it as a frozenset."""
    literal = frozenset(literal or ())
    unknown = literal - set(BY_ID)
    if unknown:
        raise ValueError('unknown correction ids: {}'.format(', '.join(sorted(unknown))))
    return literal


def as_json():
    return [correction._asdict() for correction in CORRECTIONS]
