"""
Identification functions built from the identification function of another
functional: lifting a generator to a tail pair, restricting a tail measure to
its generator, and the body triplet.
"""

from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_level, check_level_pair, check_finite
from tailscore.identification.identification_function import IdSpec, indicator
from tailscore.identification.elementary import ordered_pair


def _scalar(V, caller, arity=1):

    if not isinstance(V, IdSpec) or V.arity != arity:
        raise InputArgumentError('V', caller, 'expected an IdSpec with {} component(s)'.format(arity))

    return lambda *arguments: V.evaluator(*arguments)[-1]


def lift_id(Vstar, p, with_correction=True):
    """Identification function of (Q_p, rho) from one of the generator rho*.

    V(v, x, y) = (1{y <= v} - p,
                  1{y > v} V*(x, y) + (1{y <= v} - p) V*(x, v))

    The second term of the second component is the correction term; without
    it the function is still strict on M_(p).

    """

    p = check_level(p, 'lift_id')
    star = _scalar(Vstar, 'lift_id')

    def evaluator(v, x, y):

        hit = indicator(y <= v) - p
        value = indicator(y > v) * star(x, y)
        if with_correction:
            value = value + hit * star(x, v)

        return (hit, value)

    return IdSpec(2, evaluator, '(Q_p, {})'.format(Vstar.functional), 'lift',
                  {'p': p, 'with_correction': bool(with_correction), 'generator': Vstar})


def restrict_id(V, p, r):
    """Identification function (1 - p) V(x, y) + p V(x, r) of the generator on M_{>=r}."""

    p = check_level(p, 'restrict_id')
    r = check_finite(r, 'restrict_id', 'r')
    scalar = _scalar(V, 'restrict_id')

    def evaluator(x, y):
        return ((1.0 - p) * scalar(x, y) + p * scalar(x, r),)

    return IdSpec(1, evaluator, '{}*'.format(V.functional), 'restriction', {'p': p, 'r': r, 'source': V})


def restrict_id_pair(V, p, r):
    """Identification function (1 - p) V2(r, x, y) + p V2(r, x, r) from a pair (Q_p, rho)."""

    p = check_level(p, 'restrict_id_pair')
    r = check_finite(r, 'restrict_id_pair', 'r')
    second = _scalar(V, 'restrict_id_pair', arity=2)

    def evaluator(x, y):
        return ((1.0 - p) * second(r, x, y) + p * second(r, x, r),)

    return IdSpec(1, evaluator, '{}*'.format(V.functional), 'pair restriction', {'p': p, 'r': r, 'source': V})


def body_id(Vstar, p, q, with_correction=True):
    """Identification function of (Q_p, Q_q, rho^[p,q]) from one of the generator.

    Third component:
    1{v1 < y <= v2} V*(x, y) + (1{y <= v1} - p) V*(x, v1) - (1{y <= v2} - q) V*(x, v2),
    the last two terms being the correction terms.

    """

    p, q = check_level_pair(p, q, 'body_id')
    star = _scalar(Vstar, 'body_id')

    def evaluator(v1, v2, x, y):

        lower = indicator(y <= v1) - p
        upper = indicator(y <= v2) - q
        value = indicator((v1 < y) & (y <= v2)) * star(x, y)
        if with_correction:
            value = value + lower * star(x, v1) - upper * star(x, v2)

        return (lower, upper, value)

    return IdSpec(3, evaluator, '(Q_p, Q_q, {}^[p,q])'.format(Vstar.functional), 'body',
                  {'p': p, 'q': q, 'with_correction': bool(with_correction), 'generator': Vstar},
                  action_domain=ordered_pair)
