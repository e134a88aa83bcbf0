"""
Functional interface of the distribution core: construction, evaluation and
the tail, left-tail and body transforms F_p, F^q and F^[p,q].

All transforms act on the cumulative masses at the atoms, so the results are
again finitely supported and every integral stays an exact finite sum.
"""

import numpy as np
from tailscore._private_tools.configuration import MASS_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError, PreconditionError
from tailscore._private_tools.input_arguments import check_level, check_level_pair, check_finite
from tailscore.distribution.discrete_distribution import DiscreteDistribution


def make_discrete(pairs):
    """Sorted, merged and normalized distribution from ``(value, mass)`` pairs.

    Examples
    --------
    >>> make_discrete([(1, .5), (1, .5)]).to_pairs()
    [(1.0, 1.0)]

    """

    return DiscreteDistribution.from_pairs(pairs)


def cdf(F, x):
    return F.cdf(x)


def var_minus(F, p):
    return F.var_minus(p)


def var_plus(F, p):
    return F.var_plus(p)


def quantile_interval(F, p):
    return F.quantile_interval(p)


def in_M_p(F, p):
    """Whether F(VaR_p^-(F)) = p, i.e. F belongs to M_(p)."""

    p = check_level(p, 'in_M_p')
    return abs(F.cdf(F.var_minus(p)) - p) <= MASS_TOLERANCE


def in_M_ge(F, r):
    """Whether the smallest atom of F is at least r, i.e. F belongs to M_{>=r}."""
    return F.min_atom >= r


def expectation(F, function):
    return F.expectation(function)


def _snap(values, level):

    values = np.array(values, dtype=float)
    values[np.abs(values - level) <= MASS_TOLERANCE] = level
    return values


def _from_cumulative(F, cumulative):

    masses = np.diff(cumulative, prepend=0.0)
    masses[masses < 0.0] = 0.0

    return DiscreteDistribution(F.atoms, masses)


def tail_distribution(F, p):
    """Tail distribution F_p with cdf (F(x) - p)_+ / (1 - p).

    Atoms below VaR_p^+ are dropped and the atom at the p-quantile keeps the
    trimmed mass (F(VaR_p^+) - p) / (1 - p).

    """

    p = check_level(p, 'tail_distribution')
    cumulative = np.clip(_snap(F.cumulative, p) - p, 0.0, None) / (1.0 - p)

    return _from_cumulative(F, cumulative)


def left_tail_distribution(F, q):
    """Left tail distribution F^q with cdf min(F(x), q) / q, for q in (0, 1]."""

    q = check_level(q, 'left_tail_distribution', 'q', closed_right=True)
    if q == 1.0:
        return F

    cumulative = np.minimum(_snap(F.cumulative, q), q) / q

    return _from_cumulative(F, cumulative)


def body_distribution(F, p, q):
    """Body distribution F^[p,q] with cdf (min(F(x), q) - p)_+ / (q - p).

    The limits p = 0 and q = 1 are admitted and give the left tail and the
    tail distribution respectively.

    """

    p, q = check_level_pair(p, q, 'body_distribution', closed_left=True, closed_right=True)
    if p == 0.0:
        return left_tail_distribution(F, q)
    if q == 1.0:
        return tail_distribution(F, p)

    cumulative = _snap(_snap(F.cumulative, p), q)
    cumulative = np.clip(np.minimum(cumulative, q) - p, 0.0, None) / (q - p)

    return _from_cumulative(F, cumulative)


def mix_with_atom(G, p, r):
    """Distribution F = (1 - p) G + p delta_r.

    For G with all atoms at or above r, F has VaR_p^-(F) = r and tail
    distribution F_p = G.

    Raises
    ------
    PreconditionError
        If G has an atom below r.

    """

    p = check_level(p, 'mix_with_atom')
    r = check_finite(r, 'mix_with_atom', 'r')
    if not in_M_ge(G, r):
        raise PreconditionError('mix_with_atom needs G with atoms at or above r = {}, '
                                'found atom {}.'.format(r, G.min_atom))

    atoms = np.concatenate(([r], G.atoms))
    masses = np.concatenate(([p], (1.0 - p) * G.masses))

    return DiscreteDistribution(atoms, masses)


def mixture(F0, F1, weight):
    """Convex combination (1 - weight) F0 + weight F1 for weight in (0, 1)."""

    weight = float(weight)
    if not 0.0 < weight < 1.0:
        raise InputArgumentError('weight', 'mixture', 'mixture weight {} outside (0, 1)'.format(weight))

    atoms = np.concatenate((F0.atoms, F1.atoms))
    masses = np.concatenate(((1.0 - weight) * F0.masses, weight * F1.masses))

    return DiscreteDistribution(atoms, masses)
