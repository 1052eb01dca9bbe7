"""Desk-scale bounds, work budgets and verification profiles.

Values here are defaults; the command line overrides them per request and MIRABOLIC_MAX_WORK
overrides the triple-count budget for every finite-field enumeration.
"""
import os
from collections import namedtuple
from fractions import Fraction

MAX_DIMENSION = 4
SUPPORTED_FIELDS = (2, 3, 5)

DEFAULT_MAX_WORK = 5000000
MAX_WORK_ENV = 'MIRABOLIC_MAX_WORK'

DEFAULT_SAMPLES = (Fraction(2), Fraction(3), Fraction(5, 2))

Profile = namedtuple('Profile', ['name', 'dimension_grid', 'orbit_grid', 'presentation', 'duality',
                                 'agreement_grid', 'bimodule', 'centralizer', 'negative_control'])


def _grid(limit_n, limit_m, limit_d, fields):
    return tuple((n, m, d, q) for n in range(1, limit_n + 1) for m in range(1, limit_m + 1)
                 for d in range(limit_d + 1) for q in fields)


PROFILES = {
    'desk': Profile(
        name='desk',
        dimension_grid=tuple((n, m, d) for n in range(1, 5) for m in range(1, 5) for d in range(6)),
        orbit_grid=_grid(3, 3, 3, (2, 3)),
        presentation=((1, 1, 1), (2, 2, 2), (3, 2, 2), (3, 3, 3)),
        duality=((2, 2, 2), (3, 2, 2), (2, 3, 3), (3, 2, 3), (3, 3, 3)),
        agreement_grid=_grid(3, 3, 3, (2, 3)),
        bimodule=((2, 2, 2), (3, 2, 2)),
        centralizer=((2, 2, 2),),
        negative_control=((2, 1, 1, 2),),
    ),
    'smoke': Profile(
        name='smoke',
        dimension_grid=tuple((n, m, d) for n in range(1, 3) for m in range(1, 3) for d in range(3)),
        orbit_grid=_grid(2, 2, 2, (2,)),
        presentation=((1, 1, 1), (2, 2, 2)),
        duality=((2, 2, 2),),
        agreement_grid=_grid(2, 2, 2, (2,)),
        bimodule=((2, 2, 2),),
        centralizer=((1, 1, 1),),
        negative_control=((2, 1, 1, 2),),
    ),
}


def max_work(explicit=None):
    """The triple-count budget: explicit value, else the environment override, else the default."""
    if explicit is not None:
        budget = int(explicit)
    else:
        budget = int(os.environ.get(MAX_WORK_ENV, DEFAULT_MAX_WORK))
    if budget < 1:
        raise ValueError('the work budget must be positive, got {}'.format(budget))
    return budget


def get_profile(name):
    try:
        return PROFILES[name]
    except KeyError:
        raise ValueError('unknown verification profile {!r}; choose from {}'.format(name, sorted(PROFILES)))
