"""
Brute-force oracles.

Expected scores and expected identification values are exact finite sums, so
a grid scan gives the minimizer set and the root set up to the grid
resolution. Claimed value sets are compared with what the scan finds, within
one grid step per coordinate.
"""

import logging
import numpy as np
from tailscore._private_tools.configuration import ROOT_TOLERANCE, MASS_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError, PreconditionError
from tailscore.distribution import mixture
from tailscore.identification import expected_id
from tailscore.scoring import expected_score
from tailscore.verification.grid import scan, minimizer_indices
from tailscore.verification.verification_report import VerificationReport

logger = logging.getLogger(__name__)

_SLACK = 1e-9


def _pairs(F):
    return [[float(atom), float(mass)] for atom, mass in F.to_pairs()]


def _box(points):
    return [(float(column.min()), float(column.max())) for column in np.asarray(points).T]


def _agrees(found, claimed, steps):
    return all(abs(f_lo - c_lo) <= step + _SLACK and abs(f_hi - c_hi) <= step + _SLACK
               for (f_lo, f_hi), (c_lo, c_hi), step in zip(found, claimed, steps))


def _outside(points, claimed, steps):
    """Mask of the points farther than one step from the claimed box in some coordinate."""

    mask = np.zeros(points[0].shape, dtype=bool)
    for axis, (lo, hi), step in zip(points, claimed, steps):
        mask |= (axis < lo - step - _SLACK) | (axis > hi + step + _SLACK)

    return mask


def certify_consistency(S, T, family, grid, tolerance=ROOT_TOLERANCE, name='consistency'):
    """Check on a grid that the expected score of S is minimized exactly at the value set T(F).

    For each F of the family, the minimizers of the expected score over the
    admissible grid points must span the claimed intervals within one grid
    step, and every point farther than one step from them must score at least
    `tolerance` above the minimum.

    Parameters
    ----------
    S : ScoreSpec
    T : callable
        ``T(F)`` returning one interval (lo, hi) per forecast component.
    family : sequence of DiscreteDistribution
    grid : Grid
    tolerance : float, default: 1e-10
    name : str

    Returns
    -------
    VerificationReport

    """

    if grid.dimension != S.arity:
        raise InputArgumentError('grid', 'certify_consistency', 'dimension differs from the score arity')

    points = grid.points()
    admissible = np.asarray(S.admissible(*points), dtype=bool)
    steps = grid.steps
    cases, counterexample, margins = [], None, []

    logger.info('certify_consistency[%s]: %d distributions on %d grid points', name, len(family), grid.n_points)

    for number, F in enumerate(family):

        claimed = [(float(lo), float(hi)) for lo, hi in T(F)]
        values = scan(lambda *components: expected_score(S, components, F), grid)
        indices, minimum = minimizer_indices(values, admissible)
        found = _box(np.column_stack([axis[indices] for axis in points]))

        off = _outside(points, claimed, steps) & admissible
        margin = float(values[off].min() - minimum) if np.any(off) else float('inf')
        margins.append(margin)
        passed = _agrees(found, claimed, steps) and margin >= tolerance

        case = {'distribution': number, 'claimed': claimed, 'found': found, 'minimum': minimum, 'margin': margin,
                'passed': passed}
        cases.append(case)
        if not passed and counterexample is None:
            counterexample = dict(case, pairs=_pairs(F))
            logger.info('certify_consistency[%s]: distribution %d fails, claimed %s, found %s', name, number,
                        claimed, found)

    return VerificationReport(name, counterexample is None, len(family), min(margins) if margins else float('nan'),
                              cases, counterexample)


def _cell_extremes(values, n_axes):
    """Minimum and maximum over the 2^d corners of every grid cell."""

    low, high = values, values
    for axis in range(values.ndim - n_axes, values.ndim):
        size = values.shape[axis]
        first = [slice(None)] * values.ndim
        second = [slice(None)] * values.ndim
        first[axis], second[axis] = slice(0, size - 1), slice(1, size)
        low = np.minimum(low[tuple(first)], low[tuple(second)])
        high = np.maximum(high[tuple(first)], high[tuple(second)])

    return low, high


def certify_identifiability(V, T, family, grid, tolerance=ROOT_TOLERANCE, name='identifiability'):
    """Check that the expected identification of V vanishes exactly on the value set T(F).

    Two conditions per distribution: every component of the expected
    identification is within `tolerance` of zero at the lower end of the
    claimed set, and the grid cells on which every component reaches zero or
    changes sign span the claimed intervals within one grid step.

    Returns
    -------
    VerificationReport

    """

    if grid.dimension != V.arity:
        raise InputArgumentError('grid', 'certify_identifiability', 'dimension differs from the arity')

    shape = tuple(len(axis) for axis in grid.coordinates)
    points = grid.points()
    admissible = np.asarray(V.admissible(*points), dtype=bool).reshape(shape)
    cell_admissible = admissible[tuple(slice(0, size - 1) for size in shape)]
    cases, counterexample = [], None

    logger.info('certify_identifiability[%s]: %d distributions on %d grid points', name, len(family),
                grid.n_points)

    for number, F in enumerate(family):

        claimed = [(float(lo), float(hi)) for lo, hi in T(F)]
        at_claim = expected_id(V, [lo for lo, _ in claimed], F)
        exact = bool(np.all(np.abs(at_claim) <= tolerance))

        values = scan(lambda *components: expected_id(V, components, F).T, grid)
        values = np.moveaxis(values.reshape(shape + (V.arity,)), -1, 0)
        low, high = _cell_extremes(values, len(shape))
        candidate = np.all((low <= tolerance) & (high >= -tolerance), axis=0) & cell_admissible

        if np.any(candidate):
            cells = np.nonzero(candidate)
            found = [(float(axis[index].min()), float(axis[index + 1].max()))
                     for axis, index in zip(grid.coordinates, cells)]
            located = _agrees(found, claimed, grid.steps)
        else:
            found, located = [], False

        passed = exact and located
        case = {'distribution': number, 'claimed': claimed, 'found': found,
                'at_claim': [float(value) for value in at_claim], 'passed': passed}
        cases.append(case)
        if not passed and counterexample is None:
            counterexample = dict(case, pairs=_pairs(F))
            logger.info('certify_identifiability[%s]: distribution %d fails, expected value %s at %s', name,
                        number, case['at_claim'], claimed)

    return VerificationReport(name, counterexample is None, len(family), float('nan'), cases, counterexample)


def _intersection(first, second):

    result = []
    for (lo0, hi0), (lo1, hi1) in zip(first, second):
        lo, hi = max(lo0, lo1), min(hi0, hi1)
        if lo > hi + ROOT_TOLERANCE:
            return None
        result.append((lo, hi))

    return result


def cxls_probe(T, F0, F1, weights=(0.25, 0.5, 0.75), tolerance=ROOT_TOLERANCE, name='cxls'):
    """Convex level set probe: mixtures of F0 and F1 must share their common value set.

    If T(F0) and T(F1) intersect, T of every mixture (1 - w) F0 + w F1 must
    equal the intersection within `tolerance`; otherwise the probe passes
    vacuously.

    Returns
    -------
    VerificationReport

    """

    common = _intersection(T(F0), T(F1))
    if common is None:
        return VerificationReport(name, True, 0, float('nan'), [{'vacuous': True}], None)

    cases, counterexample = [], None
    for weight in weights:
        value = [(float(lo), float(hi)) for lo, hi in T(mixture(F0, F1, weight))]
        gap = max(max(abs(lo - c_lo), abs(hi - c_hi)) for (lo, hi), (c_lo, c_hi) in zip(value, common))
        passed = gap <= tolerance
        case = {'weight': float(weight), 'common': common, 'mixture': value, 'gap': gap, 'passed': passed}
        cases.append(case)
        if not passed and counterexample is None:
            counterexample = dict(case, first=_pairs(F0), second=_pairs(F1))

    return VerificationReport(name, counterexample is None, len(weights), float('nan'), cases, counterexample)


def order_sensitivity_probe(S, F, v_pairs, x_values=None, margin=MASS_TOLERANCE, name='order-sensitivity'):
    """Check both order sensitivity statements for a lifted score S(v, x, y).

    For each (v1, v2) with v2 < v1 <= VaR_p^-(F) or VaR_p^+(F) <= v1 < v2:
    the expected score at v1 is smaller than at v2 by at least `margin` for
    every x of `x_values`, and so is its minimum over x.

    Parameters
    ----------
    S : ScoreSpec
        Two-component score with level ``S.parameters['p']``.
    F : DiscreteDistribution
    v_pairs : sequence of (float, float)
    x_values : array_like, optional
        Defaults to a 0.05 grid over the atom hull widened by one.
    margin : float, default: 1e-12

    Raises
    ------
    PreconditionError
        If a pair does not lie on one side of Q_p(F) as required.

    """

    if S.arity != 2 or 'p' not in S.parameters:
        raise InputArgumentError('S', 'order_sensitivity_probe', 'expected a two-component lifted score')

    p = S.parameters['p']
    lower, upper = F.var_minus(p), F.var_plus(p)
    if x_values is None:
        x_values = np.arange(F.min_atom - 1.0, F.max_atom + 1.0 + 1e-9, 0.05)
    x_values = np.asarray(x_values, dtype=float)

    cases, counterexample, gaps = [], None, []
    for v1, v2 in v_pairs:

        v1, v2 = float(v1), float(v2)
        if not (v2 < v1 <= lower or upper <= v1 < v2):
            raise PreconditionError('order_sensitivity_probe: the pair ({}, {}) is not on one side of Q_p = [{}, {}]'
                                    .format(v1, v2, lower, upper))

        first = expected_score(S, (np.full_like(x_values, v1), x_values), F)
        second = expected_score(S, (np.full_like(x_values, v2), x_values), F)
        pointwise = float(np.min(second - first))
        minimized = float(second.min() - first.min())
        gaps.extend([pointwise, minimized])

        passed = pointwise >= margin and minimized >= margin
        case = {'v1': v1, 'v2': v2, 'pointwise_gap': pointwise, 'minimized_gap': minimized, 'passed': passed}
        cases.append(case)
        if not passed and counterexample is None:
            counterexample = dict(case, pairs=_pairs(F))

    return VerificationReport(name, counterexample is None, len(cases), min(gaps) if gaps else float('nan'), cases,
                              counterexample)
