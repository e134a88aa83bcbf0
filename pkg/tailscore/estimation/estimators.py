"""
M-estimation by exhaustive grid minimization of the mean score, and
sequential Z-estimation for tail pairs: the left empirical p-quantile first,
then a bisection root of the second identification component.
"""

import logging
import warnings
import numpy as np
from scipy import optimize
from tailscore._private_tools.configuration import BRACKET_MARGIN, MAX_BISECTION_ITERATIONS, ROOT_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError, BracketError
from tailscore.identification import IdSpec, expected_id
from tailscore.scoring import ScoreSpec, expected_score
from tailscore.verification.grid import Grid, scan, minimizer_indices
from tailscore.estimation.sample import Sample
from tailscore.estimation.estimate_report import EstimateReport

logger = logging.getLogger(__name__)


def _as_sample(sample):
    return sample if isinstance(sample, Sample) else Sample(sample)


def _as_grid(box, step, arity):

    if isinstance(box, Grid):
        grid = box
    else:
        box = [tuple(bounds) for bounds in box]
        if len(box) == 1 and arity > 1:
            box = box * arity
        steps = np.broadcast_to(np.asarray(step, dtype=float), (len(box),))
        grid = Grid([(lo, hi, s) for (lo, hi), s in zip(box, steps)])

    if grid.dimension != arity:
        raise InputArgumentError('box', 'm_estimate', 'the grid has {} coordinates, the score {}'.format(
            grid.dimension, arity))

    return grid


def m_estimate(S, sample, box, step=None):
    """Grid minimizers of the mean score (1/n) sum S(forecast, y_t).

    Parameters
    ----------
    S : ScoreSpec
    sample : Sample or array_like
    box : Grid or sequence of (lo, hi)
        Search box, one interval per forecast component (a single interval is
        repeated for every component).
    step : float or sequence of float, optional
        Grid step per component; ignored when `box` is a Grid.

    Returns
    -------
    EstimateReport
        The point estimate is the lexicographically smallest minimizer.

    Raises
    ------
    InputArgumentError
        For an empty sample or a degenerate box.
    GridGuardError
        If the grid is too large.

    """

    if not isinstance(S, ScoreSpec):
        raise InputArgumentError('S', 'm_estimate', 'expected a ScoreSpec')

    sample = _as_sample(sample)
    F = sample.distribution
    grid = _as_grid(box, step, S.arity)

    report_warnings = []
    for lo, hi, _ in grid.axes:
        if lo > F.min_atom or hi < F.max_atom:
            message = 'the box [{}, {}] does not cover the sample range [{}, {}]'.format(lo, hi, F.min_atom,
                                                                                     F.max_atom)
            report_warnings.append(message)
            logger.warning('m_estimate: %s', message)

    logger.info('m_estimate: %s on %d points, n = %d', S.construction, grid.n_points, len(sample))
    values = scan(lambda *components: expected_score(S, components, F), grid)
    admissible = scan(lambda *components: S.admissible(*components), grid) > 0.5
    indices, minimum = minimizer_indices(values, admissible)

    estimate_set = np.column_stack(grid.points_at(indices))
    point = tuple(float(value) for value in estimate_set[0])

    return EstimateReport('m', S.functional, point, estimate_set, minimum, len(sample), grid.to_dict(),
                          report_warnings)


def z_estimate(V, sample, x_bracket=None, tolerance=ROOT_TOLERANCE):
    """Sequential Z-estimate (v, x) for a lifted identification function.

    v is the left empirical p-quantile; x is the bisection root of
    x -> (1/n) sum V_2(v, x, y_t).

    Parameters
    ----------
    V : IdSpec
        Two-component identification function built by ``lift_id``.
    sample : Sample or array_like
    x_bracket : tuple of float, optional
        Defaults to the sample range widened by ``BRACKET_MARGIN``.
    tolerance : float, default: 1e-10

    Returns
    -------
    EstimateReport

    Raises
    ------
    BracketError
        If the second component does not change sign over the bracket.

    Warns
    -----
    UserWarning
        When the mean identification is not monotone over the bracket, or the
        quantile component does not vanish (the sample is not in M_(p)).

    """

    if not isinstance(V, IdSpec) or V.arity != 2 or 'p' not in V.parameters:
        raise InputArgumentError('V', 'z_estimate', 'expected a two-component lifted identification function')

    sample = _as_sample(sample)
    F = sample.distribution
    p = V.parameters['p']
    v = F.var_minus(p)

    if x_bracket is None:
        x_bracket = (F.min_atom - BRACKET_MARGIN, F.max_atom + BRACKET_MARGIN)
    lo, hi = (float(bound) for bound in x_bracket)

    def second(x):
        return float(expected_id(V, (v, x), F)[1])

    f_lo, f_hi = second(lo), second(hi)
    if f_lo * f_hi > 0.0:
        raise BracketError('z_estimate: the mean identification has the same sign at x = {} ({:.4g}) and x = {} '
                           '({:.4g}).'.format(lo, f_lo, hi, f_hi))

    report_warnings = []
    profile = expected_id(V, (np.full(64, v), np.linspace(lo, hi, 64)), F)[1]
    steps = np.diff(profile)
    if np.any(steps > tolerance) and np.any(steps < -tolerance):
        report_warnings.append('the mean identification is not monotone in x over [{}, {}]'.format(lo, hi))

    if f_lo == 0.0:
        x = lo
    elif f_hi == 0.0:
        x = hi
    else:
        x = optimize.bisect(second, lo, hi, xtol=tolerance, maxiter=MAX_BISECTION_ITERATIONS)

    objective = tuple(float(value) for value in expected_id(V, (v, x), F))
    if abs(objective[0]) > tolerance:
        report_warnings.append('the quantile component does not vanish ({:.4g}); the sample is not in M_(p) '
                               'for p = {}'.format(objective[0], p))

    for message in report_warnings:
        warnings.warn('z_estimate: ' + message)
        logger.warning('z_estimate: %s', message)

    point = (float(v), float(x))
    return EstimateReport('z', V.functional, point, np.array([point]), objective, len(sample),
                          {'bracket': [lo, hi], 'tolerance': tolerance}, report_warnings)
