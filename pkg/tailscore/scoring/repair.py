"""
Monotone repair of scores.

A strictly consistent score S*(x, y) for a generator can be changed by any
function of y alone without losing consistency. When the partial derivative in
y is bounded from below by some h(y), adding an antiderivative of -h plus a
strictly increasing g0 makes the score strictly increasing in y, which is what
the tail lifting needs.
"""

import logging
import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import cumulative_trapezoid
from tailscore._private_tools.configuration import FINE_PARTITION_POINTS
from tailscore._private_tools.exceptions import (InputArgumentError, RepairFailureError, VariationDivergenceError)
from tailscore.building_blocks import BuildingBlock, as_block, get_building_block
from tailscore.scoring.scoring_function import ScoreSpec, min_slope_in_y

logger = logging.getLogger(__name__)


def _antiderivative_of_minus(h, box):
    """A function G with G' = -h and G(0) = 0."""

    if np.isscalar(h):
        c = float(h)
        return lambda y: -c * np.asarray(y, dtype=float)

    if isinstance(h, Polynomial):
        G = -h.integ(lbnd=0.0)
        return lambda y: G(np.asarray(y, dtype=float))

    if isinstance(h, BuildingBlock) and h.antiderivative is not None:
        H = h.antiderivative
        H0 = float(H(np.asarray(0.0)))
        return lambda y: -(np.asarray(H(np.asarray(y, dtype=float)), dtype=float) - H0)

    if not callable(h):
        raise InputArgumentError('h', 'monotone_repair', 'expected a constant, a Polynomial or a callable')

    lo, hi = min(box[0], 0.0), max(box[1], 0.0)
    grid = np.linspace(lo, hi, FINE_PARTITION_POINTS)
    values = -cumulative_trapezoid(np.asarray(h(grid), dtype=float), grid, initial=0.0)
    values -= np.interp(0.0, grid, values)
    slope_lo, slope_hi = -float(h(np.asarray(lo))), -float(h(np.asarray(hi)))

    def G(y):
        y = np.asarray(y, dtype=float)
        inside = np.interp(y, grid, values)
        below = values[0] + slope_lo * (y - lo)
        above = values[-1] + slope_hi * (y - hi)
        return np.where(y < lo, below, np.where(y > hi, above, inside))

    return G


def monotone_repair(Sstar, h, g0=None, check=True):
    """Strongly equivalent version S*(x, y) + G(y) + g0(y) of a score, with G' = -h.

    Parameters
    ----------
    Sstar : ScoreSpec
        Score with one forecast component.
    h : float, numpy.polynomial.Polynomial, BuildingBlock or callable
        Lower bound of the partial derivative of S* in y. Constants and
        polynomials are integrated in closed form, as are building blocks with
        an antiderivative; other callables by the cumulative trapezoidal rule
        on a fine grid over the evaluation box.
    g0 : BuildingBlock, callable or str, default: 'g.identity'
        Strictly increasing function.
    check : bool, default: True
        Run the finite-difference monotonicity scan on the result.

    Returns
    -------
    ScoreSpec

    Raises
    ------
    RepairFailureError
        If the repaired score is not strictly increasing in y somewhere on the
        scan grid.

    Examples
    --------
    >>> from tailscore.scoring import bregman_score
    >>> repaired = monotone_repair(bregman_score(), -1.0)
    >>> repaired.construction
    'repaired bregman'

    """

    if not isinstance(Sstar, ScoreSpec) or Sstar.arity != 1:
        raise InputArgumentError('Sstar', 'monotone_repair', 'expected a score with one forecast component')

    if g0 is None:
        g0 = get_building_block('g.identity')
    elif isinstance(g0, str):
        g0 = get_building_block(g0)
    else:
        g0 = as_block(g0, 'g')

    G = _antiderivative_of_minus(h, Sstar.box)
    star = Sstar.evaluator

    def evaluator(x, y):
        return star(x, y) + G(y) + g0(y)

    parameters = dict(Sstar.parameters, source=Sstar, h=h, g0=g0)
    repaired = ScoreSpec(1, evaluator, Sstar.functional, 'repaired {}'.format(Sstar.construction), parameters,
                         box=Sstar.box)

    if check:
        slope, witness = min_slope_in_y(repaired)
        logger.debug('Repair of %s: minimal slope in y %.4g at %s', Sstar.construction, slope, witness)
        if not slope > 0.0:
            raise RepairFailureError('The repaired {} score is not strictly increasing in y; slope {:.4g}.'.format(
                Sstar.construction, slope), witness=witness)

    return repaired


def scaled(S, factor):
    """Positive multiple factor * S, consistent for the same functional."""

    factor = float(factor)
    if not (np.isfinite(factor) and factor > 0.0):
        raise InputArgumentError('factor', 'scaled', 'must be positive and finite')

    evaluate = S.evaluator
    return ScoreSpec(S.arity, lambda *arguments: factor * evaluate(*arguments), S.functional,
                     '{} x {}'.format(factor, S.construction), dict(S.parameters, factor=factor),
                     S.action_domain, S.box)


def _partition_variation(u, lo, hi, n_points=FINE_PARTITION_POINTS):

    grid = np.linspace(lo, hi, n_points + 1)
    values = np.asarray(u(grid), dtype=float)
    fine = float(np.abs(np.diff(values)).sum())
    coarse = float(np.abs(np.diff(values[::2])).sum())

    if fine > 1.5 * coarse and fine - coarse > 1e-9:
        raise VariationDivergenceError(
            'The variation of {} on [{}, {}] does not settle: {:.6g} on {} points against {:.6g} on {}.'.format(
                getattr(u, 'name', u), lo, hi, fine, n_points + 1, coarse, n_points // 2 + 1))

    return fine


def _signed_variation(u, y):

    lo, hi = min(0.0, y), max(0.0, y)
    if lo == hi:
        return 0.0

    if getattr(u, 'variation', None) is not None:
        amount = float(u.variation(lo, hi))
    else:
        amount = _partition_variation(u, lo, hi)

    return float(np.sign(y)) * amount


def total_variation(u, y):
    """Signed total variation ||u||(y) of `u` on [min(0, y), max(0, y)].

    The variation is exact for building blocks that carry one (monotone,
    piecewise monotone and indicator blocks) and estimated on a fine partition
    otherwise.

    Raises
    ------
    VariationDivergenceError
        If halving the mesh of the partition changes the estimate by more than
        a factor 1.5.

    Examples
    --------
    >>> from tailscore.building_blocks import get_building_block
    >>> total_variation(get_building_block('t.square'), -2.0)
    -4.0

    """

    u = as_block(u, 'u')
    y = np.asarray(y, dtype=float)
    values = np.vectorize(lambda point: _signed_variation(u, float(point)), otypes=[float])(y)

    return float(values) if values.ndim == 0 else values


def ratio_repair(u, t):
    """Repair function g(y) = ||u||(y) + ||t||(y) + y of ratio scores with |phi'| <= 1."""

    u = as_block(u, 'u')
    t = as_block(t, 't')

    def function(y):
        return total_variation(u, y) + total_variation(t, y) + y

    return BuildingBlock('g.ratio_repair', function)


def shortfall_repair_bound(loss):
    """Lower bound h(y) = inf loss - loss(y) of the y-slope of the shortfall score.

    Raises
    ------
    InputArgumentError
        If the loss block carries no finite lower bound.

    """

    if loss.lower_bound is None or not np.isfinite(loss.lower_bound):
        raise InputArgumentError('loss', 'shortfall_repair_bound', 'the loss must be bounded from below')

    bound = float(loss.lower_bound)
    antiderivative = None
    if loss.antiderivative is not None:
        A = loss.antiderivative
        antiderivative = lambda s: bound * s - A(s)  # noqa: E731

    return BuildingBlock('h.shortfall_bound', lambda y: bound - loss(y), antiderivative=antiderivative)
