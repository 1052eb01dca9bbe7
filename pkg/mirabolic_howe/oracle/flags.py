"""Partial flags 0 = V_0 <= V_1 <= ... <= V_n = F_q^d."""
from dataclasses import dataclass
from functools import lru_cache

from mirabolic_howe.oracle.field import check_desk_scale, enumerate_subspaces, whole_space


@dataclass(frozen=True)
class Flag(object):
    """The steps V_1, ..., V_n of a weakly increasing chain ending at the whole space."""

    steps: tuple

    def __post_init__(self):
        if not self.steps:
            raise ValueError('a flag needs at least one step')
        top = self.steps[-1]
        if top.dim != top.d:
            raise ValueError('the last step of a flag must be the whole space')
        for lower, upper in zip(self.steps, self.steps[1:]):
            if not upper.contains(lower):
                raise ValueError('flag steps are not nested')

    @property
    def n(self):
        return len(self.steps)

    def step(self, i):
        """V_i with V_0 = 0."""
        if i == 0:
            return enumerate_subspaces(self.steps[0].d, self.steps[0].q)[0]
        return self.steps[i - 1]

    @property
    def composition(self):
        dims = [0] + [s.dim for s in self.steps]
        return tuple(b - a for a, b in zip(dims, dims[1:]))

    def transform(self, g):
        return Flag(tuple(s.transform(g) for s in self.steps))

    def to_json(self):
        return [s.to_json() for s in self.steps]


@lru_cache(maxsize=None)
def enumerate_flags(n, d, q):
    """All flags with n steps in F_q^d, in a deterministic order."""

    check_desk_scale(d, q)
    if n < 1:
        raise ValueError('flags need n >= 1, got {}'.format(n))
    subspaces = enumerate_subspaces(d, q)
    chains = [(whole_space(d, q),)]
    for _ in range(n - 1):
        chains = [(s,) + chain for chain in chains for s in subspaces if chain[0].contains(s)]
    return tuple(Flag(chain) for chain in chains)


@lru_cache(maxsize=None)
def flags_with_composition(composition, d, q):
    return tuple(f for f in enumerate_flags(len(composition), d, q) if f.composition == tuple(composition))
