"""
Ready-made scores for tail, left tail and body risk measures of the common
generators, repaired so that the lifting applies.
"""

from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_level, check_level_pair
from tailscore.scoring.elementary import (_convex, _block, bregman_score, expectile_score, ratio_score,
                                          shortfall_score, linear_block)
from tailscore.scoring.repair import monotone_repair, scaled, ratio_repair, shortfall_repair_bound
from tailscore.scoring.constructions import lift_score, left_tail_score, body_score


def _derivative_bound(phi, caller):

    if phi.derivative_bound is None:
        raise InputArgumentError('phi', caller, 'the subgradient of {} is not bounded'.format(phi.name))

    return float(phi.derivative_bound)


def tail_mean_score(p, phi=None, box=None):
    """Score for (Q_p, ES_p) obtained by lifting the repaired Bregman score scaled by 1 / (1 - p).

    With the bounded quadratic it coincides with :func:`fz_score` and its
    default g(v) = v / (1 - p) + v.

    """

    p = check_level(p, 'tail_mean_score')
    phi = _convex(phi)
    bound = _derivative_bound(phi, 'tail_mean_score')
    Sstar = monotone_repair(scaled(bregman_score(phi, box=box), 1.0 / (1.0 - p)), -bound / (1.0 - p))

    return lift_score(Sstar, p)


def tail_expectile_score(p, tau, phi=None, box=None):
    """Score for Q_p and the tau-expectile of the tail distribution F_p.

    The expectile score has |d/dy S*| < 2C when |phi'| < C, so it is repaired
    with h = -2C and g0 the identity.

    """

    p = check_level(p, 'tail_expectile_score')
    phi = _convex(phi)
    bound = _derivative_bound(phi, 'tail_expectile_score')
    Sstar = monotone_repair(expectile_score(tau, phi, box=box), -2.0 * bound)

    return lift_score(Sstar, p)


def tail_shortfall_score(p, loss, box=None):
    """Score for Q_p and the shortfall risk measure of the tail; the loss must be bounded from below."""

    p = check_level(p, 'tail_shortfall_score')
    loss = _block(loss, 'ell')
    Sstar = monotone_repair(shortfall_score(loss, box=box), shortfall_repair_bound(loss))

    return lift_score(Sstar, p)


def tail_ratio_score(p, u, t, phi=None, box=None):
    """Score for Q_p and the ratio of expectations of the tail, repaired with ||u|| + ||t|| + y.

    The repair needs phi'(x) in [-1, 1] and phi'(x) x - phi(x) in [0, 1],
    which the bounded quadratic satisfies.

    """

    p = check_level(p, 'tail_ratio_score')
    u = _block(u, 'u')
    t = _block(t, 't')
    Sstar = ratio_score(u, t, phi, g=ratio_repair(u, t), box=box)

    return lift_score(Sstar, p)


def left_tail_mean_score(q, phi=None, box=None):
    """Score for (Q_q, mean of F^q), lifting the Bregman score made decreasing by a(y) = -(C + 1) y."""

    q = check_level(q, 'left_tail_mean_score', 'q')
    phi = _convex(phi)
    bound = _derivative_bound(phi, 'left_tail_mean_score')
    Sstar = bregman_score(phi, linear_block(-(bound + 1.0), 'a.linear'), box=box)

    return left_tail_score(Sstar, q)


def body_mean_score(p, q, phi=None, box=None):
    """Score for (Q_p, Q_q, RVaR_pq) from the Bregman score scaled by 1 / (q - p)."""

    p, q = check_level_pair(p, q, 'body_mean_score')
    phi = _convex(phi)
    _derivative_bound(phi, 'body_mean_score')

    return body_score(scaled(bregman_score(phi, box=box), 1.0 / (q - p)), p, q)
