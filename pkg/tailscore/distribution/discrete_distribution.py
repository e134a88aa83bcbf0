import numpy as np
from tailscore._private_tools.configuration import MASS_TOLERANCE
from tailscore._private_tools.exceptions import ConstructionError, InputArgumentError
from tailscore._private_tools.input_arguments import check_level
from tailscore.distribution.quantile_interval import QuantileInterval


def _read_only(array):

    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


class DiscreteDistribution():

    """ Finitely supported probability distribution.

    Every law handled by the library is one of these: a strictly increasing
    sequence of atoms with positive masses summing to one. Integrals against
    the distribution become exact finite sums.

    Parameters
    ----------
    atoms : array_like
        Support points. Need not be sorted; repeated values are merged by
        summing their masses.
    masses : array_like
        Nonnegative weights, same length as `atoms`. They are normalized to
        sum to one and atoms with zero mass are dropped.

    Attributes
    ----------
    atoms : numpy.ndarray
        Strictly increasing support points (read only).
    masses : numpy.ndarray
        Positive masses summing to one (read only).
    cumulative : numpy.ndarray
        Values F(atom) of the distribution function at the atoms (read only).

    Raises
    ------
    ConstructionError
        Empty input, mismatched lengths, non-finite values, negative masses or
        zero total mass.

    """

    __slots__ = ('atoms', 'masses', 'cumulative')

    def __init__(self, atoms, masses):

        atoms = np.asarray(atoms, dtype=float).ravel()
        masses = np.asarray(masses, dtype=float).ravel()

        if atoms.size == 0:
            raise ConstructionError('A distribution needs at least one atom.')
        if atoms.shape != masses.shape:
            raise ConstructionError('Got {} atoms but {} masses.'.format(atoms.size, masses.size))
        if not np.all(np.isfinite(atoms)):
            raise ConstructionError('Atoms must be finite real numbers.')
        if not np.all(np.isfinite(masses)):
            raise ConstructionError('Masses must be finite real numbers.')
        if np.any(masses < 0.0):
            raise ConstructionError('Masses must be nonnegative.')

        total = masses.sum()
        if not total > 0.0:
            raise ConstructionError('The total mass must be positive.')

        unique_atoms, inverse = np.unique(atoms, return_inverse=True)
        merged = np.bincount(inverse, weights=masses, minlength=unique_atoms.size)
        keep = merged > 0.0
        unique_atoms = unique_atoms[keep]
        merged = merged[keep] / merged[keep].sum()

        cumulative = np.cumsum(merged)
        cumulative[-1] = 1.0

        object.__setattr__(self, 'atoms', _read_only(unique_atoms))
        object.__setattr__(self, 'masses', _read_only(merged))
        object.__setattr__(self, 'cumulative', _read_only(cumulative))

    def __setattr__(self, name, value):
        raise AttributeError('DiscreteDistribution is immutable')

    def __repr__(self):
        return 'DiscreteDistribution(atoms={}, masses={})'.format(self.atoms.tolist(), self.masses.tolist())

    def __len__(self):
        return self.atoms.size

    @classmethod
    def from_pairs(cls, pairs):
        """Build a distribution from ``(value, mass)`` pairs."""

        pairs = list(pairs)
        if len(pairs) == 0:
            raise ConstructionError('A distribution needs at least one (value, mass) pair.')

        try:
            values, masses = zip(*pairs)
        except (TypeError, ValueError):
            raise ConstructionError('Expected a sequence of (value, mass) pairs.')

        return cls(values, masses)

    @classmethod
    def from_sample(cls, observations):
        """Empirical distribution of a sample, each observation with mass 1/n."""

        observations = np.asarray(observations, dtype=float).ravel()
        if observations.size == 0:
            raise ConstructionError('The sample is empty.')

        return cls(observations, np.ones_like(observations))

    @classmethod
    def point_mass(cls, value):

        return cls([value], [1.0])

    @property
    def n_atoms(self):
        return self.atoms.size

    @property
    def min_atom(self):
        return float(self.atoms[0])

    @property
    def max_atom(self):
        return float(self.atoms[-1])

    def cdf(self, x):
        """Right-continuous distribution function F(x) = F((-inf, x])."""

        x = np.asarray(x, dtype=float)
        index = np.searchsorted(self.atoms, x, side='right')
        values = np.where(index > 0, self.cumulative[np.maximum(index - 1, 0)], 0.0)

        return float(values) if values.ndim == 0 else values

    def cdf_left(self, x):
        """Left limit F(x-) = F((-inf, x))."""

        x = np.asarray(x, dtype=float)
        index = np.searchsorted(self.atoms, x, side='left')
        values = np.where(index > 0, self.cumulative[np.maximum(index - 1, 0)], 0.0)

        return float(values) if values.ndim == 0 else values

    def var_minus(self, p):
        """Left p-quantile inf{x : F(x) >= p}."""

        p = check_level(p, 'var_minus')
        index = int(np.searchsorted(self.cumulative, p - MASS_TOLERANCE, side='left'))

        return float(self.atoms[min(index, self.n_atoms - 1)])

    def var_plus(self, p):
        """Right p-quantile inf{x : F(x) > p}."""

        p = check_level(p, 'var_plus')
        index = int(np.searchsorted(self.cumulative, p + MASS_TOLERANCE, side='right'))

        return float(self.atoms[min(index, self.n_atoms - 1)])

    def quantile_interval(self, p):

        return QuantileInterval(self.var_minus(p), self.var_plus(p))

    def expectation(self, function):
        """Exact finite sum of ``function(atom) * mass``.

        Raises
        ------
        InputArgumentError
            If the function is not finite at some atom.

        """

        values = np.broadcast_to(np.asarray(function(self.atoms), dtype=float), self.atoms.shape)
        if not np.all(np.isfinite(values)):
            bad = self.atoms[~np.isfinite(values)][0]
            raise InputArgumentError('function', 'expectation', 'not finite at atom {}'.format(bad))

        return float(np.dot(values, self.masses))

    def mean(self):
        return float(np.dot(self.atoms, self.masses))

    def variance(self):
        centered = self.atoms - self.mean()
        return float(np.dot(centered * centered, self.masses))

    def shift(self, offset):
        """Law of Y + offset."""
        return DiscreteDistribution(self.atoms + float(offset), self.masses)

    def scale(self, factor):
        """Law of factor * Y for a positive factor."""

        factor = float(factor)
        if not factor > 0.0:
            raise InputArgumentError('factor', 'DiscreteDistribution.scale', 'must be positive')

        return DiscreteDistribution(self.atoms * factor, self.masses)

    def reflect(self):
        """Law of -Y."""
        return DiscreteDistribution(-self.atoms, self.masses)

    def is_close(self, other, atol=MASS_TOLERANCE):
        """Atom-by-atom comparison of two distributions within ``atol``."""

        if not isinstance(other, DiscreteDistribution) or other.n_atoms != self.n_atoms:
            return False

        return bool(np.allclose(self.atoms, other.atoms, rtol=0.0, atol=atol)
                    and np.allclose(self.masses, other.masses, rtol=0.0, atol=atol))

    def to_pairs(self):
        return list(zip(self.atoms.tolist(), self.masses.tolist()))
