"""
Seeded families of random finitely supported distributions for the oracles.
"""

import numpy as np
from tailscore.distribution import DiscreteDistribution, make_discrete


def uniform_four():
    """Uniform distribution on {1, 2, 3, 4}."""
    return make_discrete([(1.0, 0.25), (2.0, 0.25), (3.0, 0.25), (4.0, 0.25)])


def random_distribution(rng, levels=(), support=(0.0, 10.0), n_atoms=(3, 8), decimals=2):
    """Random distribution with atoms on `support` and symmetric Dirichlet masses.

    Parameters
    ----------
    rng : numpy.random.Generator
    levels : sequence of float
        Levels p for which the result must lie in M_(p): one cumulative mass
        is moved onto each level.
    support : tuple of float
    n_atoms : tuple of int
        Inclusive range of the number of atoms.
    decimals : int
        Atoms are rounded to this many decimals.

    """

    levels = sorted(float(level) for level in levels)

    while True:

        n = int(rng.integers(n_atoms[0], n_atoms[1] + 1))
        atoms = np.unique(np.round(rng.uniform(support[0], support[1], n), decimals))
        if atoms.size != n or atoms.size - 1 < len(levels):
            continue

        masses = rng.dirichlet(np.ones(n))
        if levels:
            interior = np.cumsum(masses)[:-1]
            free = np.ones(interior.size, dtype=bool)
            for level in levels:
                index = int(np.argmin(np.where(free, np.abs(interior - level), np.inf)))
                interior[index] = level
                free[index] = False
            interior = np.sort(interior)
            masses = np.diff(np.concatenate(([0.0], interior, [1.0])))

        if np.all(masses > 1e-6):
            return DiscreteDistribution(atoms, masses)


def random_family(n_distributions, seed, levels=(), support=(0.0, 10.0), n_atoms=(3, 8)):
    """List of `n_distributions` seeded random distributions (see :func:`random_distribution`)."""

    rng = np.random.default_rng(seed)
    return [random_distribution(rng, levels, support, n_atoms) for _ in range(n_distributions)]
