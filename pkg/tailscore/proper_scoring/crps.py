"""
Proper scoring rules for finitely supported predictive distributions.

Every rule here is an exact finite sum over the steps of the forecast cdf.
The tail rule judges a forecast through its tail beyond the p-quantile, so any
two forecasts with the same tail are scored alike.
"""

import numpy as np
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_level
from tailscore.distribution import DiscreteDistribution, tail_distribution

#: Probabilistic forecasts are finitely supported distributions.
PredictiveDistribution = DiscreteDistribution


def _check_forecast(F, caller):

    if not isinstance(F, DiscreteDistribution):
        raise InputArgumentError('F', caller, 'expected a DiscreteDistribution')


def _crps_single(F, y):

    points = np.union1d(F.atoms, [y])
    heights = F.cdf(points[:-1]) - (y <= points[:-1])

    return float(np.sum(heights * heights * np.diff(points)))


def _vectorized(single, F, y):

    y = np.asarray(y, dtype=float)
    if y.ndim == 0:
        return single(F, float(y))

    return np.array([single(F, float(value)) for value in y.ravel()]).reshape(y.shape)


def crps(F, y):
    """Continuous ranked probability score, the integral of (F(z) - 1{y <= z})^2 dz.

    Parameters
    ----------
    F : DiscreteDistribution
    y : float or array_like

    Returns
    -------
    float or numpy.ndarray

    Examples
    --------
    >>> crps(DiscreteDistribution.point_mass(2.0), 5.0)
    3.0

    """

    _check_forecast(F, 'crps')
    return _vectorized(_crps_single, F, y)


def _energy_single(F, y):

    spread = np.abs(F.atoms[:, np.newaxis] - F.atoms[np.newaxis, :])
    return float(F.masses @ np.abs(F.atoms - y) - 0.5 * F.masses @ spread @ F.masses)


def energy_crps(F, y):
    """CRPS in its kernel form E|X - y| - E|X - X'| / 2, with X, X' independent draws from F."""

    _check_forecast(F, 'energy_crps')
    return _vectorized(_energy_single, F, y)


def tail_crps_score(p, tail_forecast=False):
    """Tail proper scoring rule for the pair (Q_p(F), F_p).

    s(v, G, y) = 1{y > v}(CRPS(H, y) + 2y) + (1{y <= v} - p)(CRPS(H, v) + 2v)

    where H is the tail G_p of the predictive distribution G. The slope of
    y -> CRPS(H, y) is 2H(y) - 1, so adding 2y makes it strictly increasing.

    Parameters
    ----------
    p : float
    tail_forecast : bool, default: False
        Take G as the tail forecast itself (H = G) instead of a full
        predictive distribution.

    Returns
    -------
    callable
        ``score(v, G, y)``.

    """

    p = check_level(p, 'tail_crps_score')

    def shifted(H, z):
        return crps(H, z) + 2.0 * np.asarray(z, dtype=float)

    def score(v, G, y):

        _check_forecast(G, 'tail_crps_score')
        H = G if tail_forecast else tail_distribution(G, p)
        y = np.asarray(y, dtype=float)
        hit = (y <= v).astype(float)
        value = (1.0 - hit) * shifted(H, y) + (hit - p) * shifted(H, v)

        return float(value) if value.ndim == 0 else value

    score.p = p
    score.tail_forecast = tail_forecast

    return score


def _qw_single(F, y, p):

    lower = np.maximum(np.concatenate(([0.0], F.cumulative[:-1])), p)
    upper = F.cumulative
    keep = upper > lower
    a, lo, hi = F.atoms[keep], lower[keep], upper[keep]
    below = (y <= a).astype(float)

    return float(np.sum(2.0 * (a - y) * (below * (hi - lo) - 0.5 * (hi * hi - lo * lo))))


def qw_crps(p):
    """Quantile weighted CRPS, the integral over r in (p, 1) of 2(1{y <= F^-1(r)} - r)(F^-1(r) - y).

    F^-1 is the left quantile, constant on the intervals between consecutive
    cumulative masses, so the integral is a finite sum. At p = 0 it is the
    CRPS; it does not depend on F below its p-quantile.

    Examples
    --------
    >>> qw_crps(0.5)(DiscreteDistribution.point_mass(2.0), 5.0)
    2.25

    """

    p = check_level(p, 'qw_crps', closed_left=True)

    def score(F, y):
        _check_forecast(F, 'qw_crps')
        return _vectorized(lambda G, value: _qw_single(G, value, p), F, y)

    score.p = p

    return score


def expected_rule(rule, F, *forecast):
    """Expectation of ``rule(*forecast, y)`` for y distributed according to F."""

    values = np.array([rule(*forecast, float(atom)) for atom in F.atoms], dtype=float)
    return float(values @ F.masses)
