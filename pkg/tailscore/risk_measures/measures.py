"""
Law-based risk measures evaluated exactly on finitely supported distributions.

Quantile integrals are computed piece by piece over the flat stretches of the
right quantile function, and the implicit measures (expectiles, shortfall risk)
by bisection on the atom hull widened by ``BRACKET_MARGIN``.
"""

import numpy as np
from scipy import optimize
from tailscore._private_tools.configuration import (MASS_TOLERANCE, ROOT_TOLERANCE, MAX_BISECTION_ITERATIONS,
                                                    BRACKET_MARGIN)
from tailscore._private_tools.exceptions import BracketError, InputArgumentError
from tailscore._private_tools.input_arguments import check_level, check_level_pair
from tailscore.building_blocks import as_block
from tailscore.distribution import tail_distribution


def integrate_var_plus(F, a, b):
    """Exact integral of r -> VaR_r^+(F) over [a, b] with 0 <= a <= b <= 1.

    VaR_r^+ equals the i-th atom for r in [F(atom_{i-1}), F(atom_i)), so the
    integral is the sum of atoms times the overlap of these pieces with [a, b].

    """

    lower = np.concatenate(([0.0], F.cumulative[:-1]))
    upper = F.cumulative
    overlap = np.clip(np.minimum(upper, b) - np.maximum(lower, a), 0.0, None)

    return float(np.dot(F.atoms, overlap))


def mean(F):
    return F.mean()


def variance(F):
    return F.variance()


def es(F, p):
    """Expected Shortfall (1 / (1 - p)) * integral of VaR_r^+ over [p, 1].

    It coincides with the mean of the tail distribution F_p.

    Examples
    --------
    >>> from tailscore.distribution import make_discrete
    >>> es(make_discrete([(1, .25), (2, .25), (3, .25), (4, .25)]), 0.5)
    3.5

    """

    p = check_level(p, 'es')
    return integrate_var_plus(F, p, 1.0) / (1.0 - p)


def es_from_tail(F, p):
    """Expected Shortfall as the mean of the tail distribution F_p."""
    return tail_distribution(F, p).mean()


def rvar(F, p, q):
    """Range Value-at-Risk (1 / (q - p)) * integral of VaR_r^+ over [p, q]."""

    p, q = check_level_pair(p, q, 'rvar')
    return integrate_var_plus(F, p, q) / (q - p)


def lower_es(F, q):
    """Lower Expected Shortfall (1 / q) * integral of VaR_r^+ over [0, q], the mean of F^q."""

    q = check_level(q, 'lower_es', 'q', closed_right=True)
    return integrate_var_plus(F, 0.0, q) / q


def _bracket(F):
    return F.min_atom - BRACKET_MARGIN, F.max_atom + BRACKET_MARGIN


def expectile(F, tau):
    """tau-expectile, the root of x -> tau E(Y - x)_+ - (1 - tau) E(x - Y)_+.

    The function is continuous and strictly decreasing, so the root is unique
    and lies in the atom hull.

    """

    tau = check_level(tau, 'expectile', 'tau')
    atoms, masses = F.atoms, F.masses

    def condition(x):
        gains = np.dot(np.clip(atoms - x, 0.0, None), masses)
        losses = np.dot(np.clip(x - atoms, 0.0, None), masses)
        return tau * gains - (1.0 - tau) * losses

    if F.n_atoms == 1:
        return F.min_atom

    lo, hi = _bracket(F)
    return float(optimize.bisect(condition, lo, hi, xtol=ROOT_TOLERANCE, maxiter=MAX_BISECTION_ITERATIONS))


def shortfall(F, loss):
    """Shortfall risk inf{m : E loss(Y - m) <= 0}.

    The root is bracketed by ``scipy.optimize.bisect`` on the sign of the
    expected loss, so flat stretches where it vanishes resolve to their left
    end. The result is then moved right in steps of ``ROOT_TOLERANCE`` until
    the expected loss is nonpositive there.

    Raises
    ------
    BracketError
        If the expected loss does not change sign on the widened atom hull,
        i.e. F is outside the class on which the measure is defined.

    """

    loss = as_block(loss, 'ell')
    atoms, masses = F.atoms, F.masses

    def expected_loss(m):
        return float(np.dot(loss(atoms - m), masses))

    lo, hi = _bracket(F)
    if not expected_loss(lo) > 0.0 or not expected_loss(hi) <= 0.0:
        raise BracketError('The expected loss does not change sign on [{}, {}]; the distribution is '
                           'outside the admissible class of the shortfall risk measure.'.format(lo, hi))

    def sign(m):
        return 1.0 if expected_loss(m) > 0.0 else -1.0

    m = optimize.bisect(sign, lo, hi, xtol=ROOT_TOLERANCE, maxiter=MAX_BISECTION_ITERATIONS)
    while m < hi and expected_loss(m) > 0.0:
        m = min(max(m + ROOT_TOLERANCE, np.nextafter(m, np.inf)), hi)

    return float(m)


def ratio_of_expectations(F, u, t):
    """E u(Y) / E t(Y).

    Raises
    ------
    InputArgumentError
        If the denominator vanishes.

    """

    numerator = F.expectation(as_block(u, 'u'))
    denominator = F.expectation(as_block(t, 't'))
    if abs(denominator) <= MASS_TOLERANCE:
        raise InputArgumentError('t', 'ratio_of_expectations', 'zero denominator E t(Y) = {}'.format(denominator))

    return numerator / denominator
