"""
Value sets of functionals, as one closed interval (lo, hi) per component.
"""

from tailscore.risk_measures import GeneratorSpec, TailPairSpec, variance


def quantile_value(p):

    def value(F):
        return [(F.var_minus(p), F.var_plus(p))]

    return value


def generator_value(generator):

    def value(F):
        x = float(generator(F))
        return [(x, x)]

    return value


def pair_value(p, generator):
    """(Q_p(F), rho*(F_p)) for a right tail pair."""

    spec = TailPairSpec(generator, p)

    def value(F):
        x = float(spec(F))
        return [(F.var_minus(p), F.var_plus(p)), (x, x)]

    return value


def left_pair_value(q, generator):

    spec = TailPairSpec(generator, variant='left_tail', q=q)

    def value(F):
        x = float(spec(F))
        return [(F.var_minus(q), F.var_plus(q)), (x, x)]

    return value


def triplet_value(p, q, generator):
    """(Q_p(F), Q_q(F), rho*(F^[p,q]))."""

    spec = TailPairSpec(generator, p, variant='body', q=q)

    def value(F):
        x = float(spec(F))
        return [(F.var_minus(p), F.var_plus(p)), (F.var_minus(q), F.var_plus(q)), (x, x)]

    return value


def variance_value(F):
    x = float(variance(F))
    return [(x, x)]


def es_pair_value(p):
    return pair_value(p, GeneratorSpec('mean'))
