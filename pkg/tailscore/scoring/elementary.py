"""
Strictly consistent scores of the elementary functionals and of the pairs and
triplets (Q_p, ES_p) and (Q_p, Q_q, RVaR_pq).

Unless given, the convex function is the bounded quadratic
phi(x) = x^2 / (1 + |x|), whose subgradient stays in (-1, 1), and the additive
term a(y) is zero.
"""

import warnings
import numpy as np
from scipy import integrate
from tailscore._private_tools.configuration import DEFAULT_BOX, ROOT_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError, QuadratureError
from tailscore._private_tools.input_arguments import check_level, check_level_pair
from tailscore.building_blocks import (BuildingBlock, ConvexSpec, as_block, bounded_quadratic, square,
                                       get_building_block)
from tailscore.identification.identification_function import indicator
from tailscore.identification.elementary import ordered_pair
from tailscore.scoring.scoring_function import ScoreSpec, check_increasing


def linear_block(slope, name='g.linear'):
    """The function y -> slope * y as a building block."""

    slope = float(slope)
    return BuildingBlock(name, lambda y: slope * y, derivative=lambda y: np.full_like(y, slope),
                         antiderivative=lambda y: 0.5 * slope * y * y,
                         variation=lambda lo, hi: abs(slope) * (hi - lo))


def _convex(phi):

    if phi is None:
        return bounded_quadratic()
    if isinstance(phi, str):
        return get_building_block(phi)
    if not isinstance(phi, ConvexSpec):
        raise InputArgumentError('phi', 'scoring', 'expected a ConvexSpec or a registry name')

    return phi


def _block(function, kind, default=None):

    if function is None:
        function = default
    if isinstance(function, str):
        return get_building_block(function)

    return as_block(function, kind)


def _zero(y):
    return np.zeros_like(y)


def _check_strictly_increasing(g, caller, argument, box):

    grid = np.linspace(box[0], box[1], 401)
    if np.any(np.diff(g(grid)) <= 0.0):
        raise InputArgumentError(argument, caller, 'not strictly increasing on [{}, {}]'.format(*box))


def bregman_score(phi=None, a=None, box=None):
    """Bregman score S(x, y) = -phi(x) + phi'(x)(x - y) + a(y), strictly consistent for the mean.

    Examples
    --------
    >>> from tailscore.building_blocks import square
    >>> bregman_score(square(), 'g.square')(2.0, 5.0)
    9.0

    """

    phi = _convex(phi)
    a = _block(a, 'a', _zero)

    def evaluator(x, y):
        return -phi.phi(x) + phi.dphi(x) * (x - y) + a(y)

    return ScoreSpec(1, evaluator, 'mean', 'bregman', {'phi': phi, 'a': a}, box=box)


def quantile_score(p, g=None, a=None, box=None):
    """Generalized piecewise linear score 1{y > x} g(y) + (1{y <= x} - p) g(x) + a(y) for Q_p.

    Parameters
    ----------
    p : float
    g : BuildingBlock, callable or str, default: 'g.identity'
        Strictly increasing function.
    a : BuildingBlock, callable or str, optional
    box : tuple of float, optional

    Raises
    ------
    InputArgumentError
        If `g` is not strictly increasing on the evaluation box.

    """

    p = check_level(p, 'quantile_score')
    g = _block(g, 'g', 'g.identity')
    a = _block(a, 'a', _zero)
    box = DEFAULT_BOX if box is None else box
    _check_strictly_increasing(g, 'quantile_score', 'g', box)

    def evaluator(x, y):
        return indicator(y > x) * g(y) + (indicator(y <= x) - p) * g(x) + a(y)

    return ScoreSpec(1, evaluator, 'Q_p', 'quantile', {'p': p, 'g': g, 'a': a}, box=box)


def pinball_score(p, box=None):
    """Pinball loss (1{y <= x} - p)(x - y)."""

    p = check_level(p, 'pinball_score')
    return quantile_score(p, 'g.identity', linear_block(-(1.0 - p), 'a.linear'), box=box)


def _es_bracket(v, y, p):
    return indicator(y > v) * y + (indicator(y <= v) - p) * v


def fz_score(p, phi=None, g=None, a=None, box=None):
    """Strictly consistent score for (Q_p, ES_p).

    S(v, x, y) = 1{y > v} g(y) + (1{y <= v} - p) g(v)
                 + phi'(x)(x - [1{y > v} y + (1{y <= v} - p) v] / (1 - p)) - phi(x) + a(y)

    Parameters
    ----------
    p : float
    phi : ConvexSpec or str, optional
        Bounded quadratic when not given.
    g : BuildingBlock, callable or str, optional
        Defaults to g(v) = v / (1 - p) + v.
    a : BuildingBlock, callable or str, optional
    box : tuple of float, optional

    Raises
    ------
    MonotonicityError
        If v -> g(v) - phi'(x) v / (1 - p) is not strictly increasing for
        every x of the spot-check grid.

    """

    p = check_level(p, 'fz_score')
    phi = _convex(phi)
    g = _block(g, 'g', linear_block(1.0 / (1.0 - p) + 1.0))
    a = _block(a, 'a', _zero)
    box = DEFAULT_BOX if box is None else box

    check_increasing(lambda x, v: g(v) - phi.dphi(x) * v / (1.0 - p), 'fz_score',
                     "v -> g(v) - phi'(x) v / (1 - p)", box)

    def evaluator(v, x, y):
        return (indicator(y > v) * g(y) + (indicator(y <= v) - p) * g(v)
                + phi.dphi(x) * (x - _es_bracket(v, y, p) / (1.0 - p)) - phi.phi(x) + a(y))

    return ScoreSpec(2, evaluator, '(Q_p, ES_p)', 'fz', {'p': p, 'phi': phi, 'g': g, 'a': a}, box=box)


def _rvar_bracket(v1, v2, y, p, q):
    return (indicator((v1 < y) & (y <= v2)) * y + (indicator(y <= v1) - p) * v1
            - (indicator(y <= v2) - q) * v2)


def rvar_score(p, q, phi=None, g1=None, g2=None, a=None, box=None):
    """Strictly consistent score for (Q_p, Q_q, RVaR_pq) on forecasts with v1 <= v2.

    Both g1 and g2 default to v / (q - p) + v.

    Raises
    ------
    MonotonicityError
        If v1 -> g1(v1) - phi'(x) v1 / (q - p) or v2 -> g2(v2) + phi'(x) v2 / (q - p)
        fails to be strictly increasing on the spot-check grid.

    """

    p, q = check_level_pair(p, q, 'rvar_score')
    phi = _convex(phi)
    g1 = _block(g1, 'g', linear_block(1.0 / (q - p) + 1.0))
    g2 = _block(g2, 'g', linear_block(1.0 / (q - p) + 1.0))
    a = _block(a, 'a', _zero)
    box = DEFAULT_BOX if box is None else box

    check_increasing(lambda x, v: g1(v) - phi.dphi(x) * v / (q - p), 'rvar_score',
                     "v1 -> g1(v1) - phi'(x) v1 / (q - p)", box)
    check_increasing(lambda x, v: g2(v) + phi.dphi(x) * v / (q - p), 'rvar_score',
                     "v2 -> g2(v2) + phi'(x) v2 / (q - p)", box)

    def evaluator(v1, v2, x, y):
        return (indicator(y > v1) * g1(y) + (indicator(y <= v1) - p) * g1(v1)
                + indicator(y > v2) * g2(y) + (indicator(y <= v2) - q) * g2(v2)
                + phi.dphi(x) * (x - _rvar_bracket(v1, v2, y, p, q) / (q - p)) - phi.phi(x) + a(y))

    return ScoreSpec(3, evaluator, '(Q_p, Q_q, RVaR_pq)', 'rvar',
                     {'p': p, 'q': q, 'phi': phi, 'g1': g1, 'g2': g2, 'a': a}, action_domain=ordered_pair, box=box)


def expectile_score(tau, phi=None, g=None, box=None):
    """|1{y <= x} - tau| (phi(y) - phi(x) + phi'(x)(x - y)) + g(y), strictly consistent for the tau-expectile."""

    tau = check_level(tau, 'expectile_score', 'tau')
    phi = _convex(phi)
    g = _block(g, 'g', _zero)

    def evaluator(x, y):
        return np.abs(indicator(y <= x) - tau) * (phi.phi(y) - phi.phi(x) + phi.dphi(x) * (x - y)) + g(y)

    return ScoreSpec(1, evaluator, 'expectile', 'expectile', {'tau': tau, 'phi': phi, 'g': g}, box=box)


def ratio_score(u, t, phi=None, g=None, box=None):
    """-phi(x) t(y) + phi'(x)(x t(y) - u(y)) + g(y), strictly consistent for E u(Y) / E t(Y).

    The denominator `t` is assumed to have a constant sign on the supports of
    interest; the ratio is not defined otherwise.

    """

    u = _block(u, 'u')
    t = _block(t, 't')
    phi = _convex(phi)
    g = _block(g, 'g', _zero)

    def evaluator(x, y):
        ty = t(y)
        return -phi.phi(x) * ty + phi.dphi(x) * (x * ty - u(y)) + g(y)

    return ScoreSpec(1, evaluator, 'ratio', 'ratio', {'u': u, 't': t, 'phi': phi, 'g': g}, box=box)


def _loss_integral(loss):
    """Vectorized (x, y) -> integral of loss(y - z) for z from 0 to x."""

    if loss.antiderivative is not None:
        antiderivative = loss.antiderivative
        return lambda x, y: antiderivative(y) - antiderivative(y - x)

    def single(x, y):
        with warnings.catch_warnings():
            warnings.simplefilter('error', integrate.IntegrationWarning)
            try:
                value, _ = integrate.quad(lambda z: float(loss(np.asarray(y - z))), 0.0, x,
                                          epsabs=ROOT_TOLERANCE, epsrel=ROOT_TOLERANCE, limit=200)
            except integrate.IntegrationWarning as warning:
                raise QuadratureError('Quadrature of the loss {} did not converge at (x, y) = ({}, {}): {}'.format(
                    loss.name, x, y, warning))
        return value

    return np.vectorize(single, otypes=[float])


def shortfall_score(loss, g=None, box=None):
    """-integral_0^x loss(y - z) dz + g(y), strictly consistent for the shortfall risk measure of `loss`.

    The integral is computed from the antiderivative of `loss` when the block
    carries one and by adaptive quadrature otherwise.

    Raises
    ------
    QuadratureError
        At evaluation, if the quadrature fails to converge.

    """

    loss = _block(loss, 'ell')
    if loss is None:
        raise InputArgumentError('loss', 'shortfall_score', 'a loss function is required')

    g = _block(g, 'g', _zero)
    integral = _loss_integral(loss)

    def evaluator(x, y):
        return -integral(x, y) + g(y)

    return ScoreSpec(1, evaluator, 'shortfall', 'shortfall', {'loss': loss, 'g': g}, box=box)


def squared_error():
    """(x - y)^2, the Bregman score of phi(x) = x^2 with a(y) = y^2."""

    return bregman_score(square(), 'g.square')
