import numpy as np
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore.distribution.discrete_distribution import DiscreteDistribution


def discretize(law, n_atoms=1000):
    """Equal-mass discretization of a continuous law.

    The atoms are the quantiles of `law` at the midpoints (i - 1/2)/n of an
    equally spaced probability grid, each with mass 1/n.

    Parameters
    ----------
    law : scipy.stats frozen distribution
        Any object with a vectorized ``ppf`` method.
    n_atoms : int, default: 1000

    Returns
    -------
    DiscreteDistribution

    Examples
    --------
    >>> from scipy import stats
    >>> F = discretize(stats.norm(), 10000)

    """

    n_atoms = int(n_atoms)
    if n_atoms < 1:
        raise InputArgumentError('n_atoms', 'discretize', 'must be positive')

    levels = (np.arange(n_atoms) + 0.5) / n_atoms
    atoms = np.asarray(law.ppf(levels), dtype=float)

    return DiscreteDistribution(atoms, np.ones(n_atoms))
