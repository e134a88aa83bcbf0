"""
Scores for tail risk measures built from a score of their generator.

The right tail lifting pairs the generator score with a generalized piecewise
linear loss for the p-quantile; the left tail and body variants do the same
for F^q and F^[p,q]. Restrictions go the other way and recover a score for
the generator from a score of the tail pair.
"""

from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_level, check_level_pair, check_finite
from tailscore.identification.identification_function import indicator
from tailscore.identification.elementary import ordered_pair
from tailscore.scoring.scoring_function import ScoreSpec, check_increasing
from tailscore.scoring.elementary import _block, _zero, linear_block


def _star(Sstar, caller, arity=1):

    if not isinstance(Sstar, ScoreSpec) or Sstar.arity != arity:
        raise InputArgumentError('Sstar', caller, 'expected a ScoreSpec with {} component(s)'.format(arity))

    return Sstar.evaluator


def lift_score(Sstar, p, a=None, check=True, with_correction=True):
    """Strictly consistent score for (Q_p, rho) from a score S* of the generator rho*.

    S(v, x, y) = 1{y > v} S*(x, y) + (1{y <= v} - p) S*(x, v) + a(y)

    Parameters
    ----------
    Sstar : ScoreSpec
        Strictly consistent score for the generator, strictly increasing in y
        (see :func:`monotone_repair`).
    p : float
    a : BuildingBlock, callable or str, optional
    check : bool, default: True
        Spot-check that S* is strictly increasing in y.
    with_correction : bool, default: True
        Keep the term (1{y <= v} - p) S*(x, v). Without it the score is only a
        weighted score, consistent for rho when v is a p-quantile of a
        distribution in M_(p).

    Raises
    ------
    MonotonicityError
        If the spot check finds a point where S* is not strictly increasing in y.

    """

    p = check_level(p, 'lift_score')
    star = _star(Sstar, 'lift_score')
    a = _block(a, 'a', _zero)

    if check:
        check_increasing(star, 'lift_score', 'y -> S*(x, y)', Sstar.box)

    def evaluator(v, x, y):

        value = indicator(y > v) * star(x, y) + a(y)
        if with_correction:
            value = value + (indicator(y <= v) - p) * star(x, v)

        return value

    construction = 'lift' if with_correction else 'lift without correction'
    return ScoreSpec(2, evaluator, '(Q_p, {}_p)'.format(Sstar.functional), construction,
                     {'p': p, 'a': a, 'generator': Sstar, 'with_correction': bool(with_correction)}, box=Sstar.box)


def conditional_score(Sstar, p, v, a=None):
    """Score x -> S_v(x, y) of rho given a p-quantile forecast v; no monotonicity needed."""

    p = check_level(p, 'conditional_score')
    v = check_finite(v, 'conditional_score', 'v')
    star = _star(Sstar, 'conditional_score')
    a = _block(a, 'a', _zero)

    def evaluator(x, y):
        return indicator(y > v) * star(x, y) + (indicator(y <= v) - p) * star(x, v) + a(y)

    return ScoreSpec(1, evaluator, '{}_p given v'.format(Sstar.functional), 'conditional',
                     {'p': p, 'v': v, 'a': a, 'generator': Sstar}, box=Sstar.box)


def restrict_score(S, p, r):
    """Score (1 - p) S(x, y) + p S(x, r) for the generator on distributions supported on [r, inf)."""

    p = check_level(p, 'restrict_score')
    r = check_finite(r, 'restrict_score', 'r')
    evaluate = _star(S, 'restrict_score')

    def evaluator(x, y):
        return (1.0 - p) * evaluate(x, y) + p * evaluate(x, r)

    return ScoreSpec(1, evaluator, '{}*'.format(S.functional), 'restriction', {'p': p, 'r': r, 'source': S},
                     box=S.box)


def restrict_score_pair(S, p, r):
    """Score (1 - p) S(r, x, y) + p S(r, x, r) for the generator from a score of (Q_p, rho)."""

    p = check_level(p, 'restrict_score_pair')
    r = check_finite(r, 'restrict_score_pair', 'r')
    evaluate = _star(S, 'restrict_score_pair', arity=2)

    def evaluator(x, y):
        return (1.0 - p) * evaluate(r, x, y) + p * evaluate(r, x, r)

    return ScoreSpec(1, evaluator, '{}*'.format(S.functional), 'pair restriction', {'p': p, 'r': r, 'source': S},
                     box=S.box)


def left_tail_score(Sstar, q, a=None, check=True):
    """Strictly consistent score for (Q_q, rho^q) from a score S* strictly decreasing in y.

    S(v, x, y) = 1{y <= v} S*(x, y) - (1{y <= v} - q) S*(x, v) + a(y)

    It is the right tail lifting of x, y -> S*(-x, -y) at level 1 - q,
    evaluated at (-v, -x, -y).

    """

    q = check_level(q, 'left_tail_score', 'q')
    star = _star(Sstar, 'left_tail_score')
    a = _block(a, 'a', _zero)

    if check:
        check_increasing(lambda x, y: -star(x, y), 'left_tail_score', 'y -> -S*(x, y)', Sstar.box)

    def evaluator(v, x, y):
        hit = indicator(y <= v)
        return hit * star(x, y) - (hit - q) * star(x, v) + a(y)

    return ScoreSpec(2, evaluator, '(Q_q, {}^q)'.format(Sstar.functional), 'left tail',
                     {'q': q, 'a': a, 'generator': Sstar}, box=Sstar.box)


def body_score(Sstar, p, q, g1=None, g2=None, a=None, check=True):
    """Strictly consistent score for (Q_p, Q_q, rho^[p,q]) on forecasts with v1 <= v2.

    S(v1, v2, x, y) = 1{v1 < y <= v2} S*(x, y) + (1{y <= v1} - p) S*(x, v1) - (1{y <= v2} - q) S*(x, v2)
                      + (1{y <= v1} - p) g1(v1) + 1{y > v1} g1(y)
                      + (1{y <= v2} - q) g2(v2) + 1{y > v2} g2(y) + a(y)

    Parameters
    ----------
    Sstar : ScoreSpec
    p, q : float
        Levels with 0 < p < q < 1.
    g1, g2 : BuildingBlock, callable or str, optional
        Both default to v / (q - p) + v, which suits the mean score scaled by
        1 / (q - p) with |phi'| < 1.
    a : BuildingBlock, callable or str, optional
    check : bool, default: True
        Spot-check that v -> g1(v) + S*(x, v) and v -> g2(v) - S*(x, v) are
        strictly increasing for every x of the grid.

    Raises
    ------
    MonotonicityError

    """

    p, q = check_level_pair(p, q, 'body_score')
    star = _star(Sstar, 'body_score')
    g1 = _block(g1, 'g', linear_block(1.0 / (q - p) + 1.0))
    g2 = _block(g2, 'g', linear_block(1.0 / (q - p) + 1.0))
    a = _block(a, 'a', _zero)

    if check:
        check_increasing(lambda x, v: g1(v) + star(x, v), 'body_score', 'v1 -> g1(v1) + S*(x, v1)', Sstar.box)
        check_increasing(lambda x, v: g2(v) - star(x, v), 'body_score', 'v2 -> g2(v2) - S*(x, v2)', Sstar.box)

    def evaluator(v1, v2, x, y):

        lower = indicator(y <= v1) - p
        upper = indicator(y <= v2) - q

        return (indicator((v1 < y) & (y <= v2)) * star(x, y) + lower * star(x, v1) - upper * star(x, v2)
                + lower * g1(v1) + indicator(y > v1) * g1(y)
                + upper * g2(v2) + indicator(y > v2) * g2(y) + a(y))

    return ScoreSpec(3, evaluator, '(Q_p, Q_q, {}^[p,q])'.format(Sstar.functional), 'body',
                     {'p': p, 'q': q, 'g1': g1, 'g2': g2, 'a': a, 'generator': Sstar},
                     action_domain=ordered_pair, box=Sstar.box)
