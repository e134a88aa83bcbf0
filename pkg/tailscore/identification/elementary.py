"""
Strict identification functions of the elementary functionals.
"""

import numpy as np
from tailscore._private_tools.input_arguments import check_level, check_level_pair
from tailscore.building_blocks import as_block
from tailscore.identification.identification_function import IdSpec, indicator


def ordered_pair(v1, v2, *rest):
    return v1 <= v2


def mean_id():
    """V(x, y) = x - y, strict identification function of the mean."""

    return IdSpec(1, lambda x, y: (x - y,), 'mean', 'canonical')


def quantile_id(p):
    """V(x, y) = 1{y <= x} - p, strict on M_(p) for the p-quantile."""

    p = check_level(p, 'quantile_id')
    return IdSpec(1, lambda x, y: (indicator(y <= x) - p,), 'Q_p', 'canonical', {'p': p})


def expectile_id(tau):
    """V(x, y) = |1{y <= x} - tau| (x - y), strict identification function of the tau-expectile."""

    tau = check_level(tau, 'expectile_id', 'tau')
    return IdSpec(1, lambda x, y: (np.abs(indicator(y <= x) - tau) * (x - y),), 'expectile', 'canonical',
                  {'tau': tau})


def shortfall_id(loss):
    """V(m, y) = loss(y - m) for the shortfall risk measure of `loss`."""

    loss = as_block(loss, 'ell')
    return IdSpec(1, lambda m, y: (loss(y - m),), 'shortfall', 'canonical', {'loss': loss})


def ratio_id(u, t):
    """V(x, y) = x t(y) - u(y) for the ratio of expectations E u(Y) / E t(Y)."""

    u = as_block(u, 'u')
    t = as_block(t, 't')
    return IdSpec(1, lambda x, y: (x * t(y) - u(y),), 'ratio', 'canonical', {'u': u, 't': t})


def _es_bracket(v, y, p):
    return indicator(y > v) * y + (indicator(y <= v) - p) * v


def var_es_id(p):
    """Strict identification function of (Q_p, ES_p) on M_(p).

    V(v, x, y) = (1{y <= v} - p,
                  x - [1{y > v} y + (1{y <= v} - p) v] / (1 - p))

    """

    p = check_level(p, 'var_es_id')

    def evaluator(v, x, y):
        return (indicator(y <= v) - p, x - _es_bracket(v, y, p) / (1.0 - p))

    return IdSpec(2, evaluator, '(Q_p, ES_p)', 'canonical', {'p': p})


def _rvar_bracket(v1, v2, y, p, q):
    return (indicator((v1 < y) & (y <= v2)) * y + (indicator(y <= v1) - p) * v1
            - (indicator(y <= v2) - q) * v2)


def rvar_id(p, q):
    """Strict identification function of (Q_p, Q_q, RVaR_{p,q}) on M_(p) and M_(q)."""

    p, q = check_level_pair(p, q, 'rvar_id')

    def evaluator(v1, v2, x, y):
        return (indicator(y <= v1) - p, indicator(y <= v2) - q, x - _rvar_bracket(v1, v2, y, p, q) / (q - p))

    return IdSpec(3, evaluator, '(Q_p, Q_q, RVaR_pq)', 'canonical', {'p': p, 'q': q}, action_domain=ordered_pair)
