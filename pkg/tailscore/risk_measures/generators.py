from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_level, check_level_pair
from tailscore.building_blocks import as_block
from tailscore.distribution import tail_distribution, left_tail_distribution, body_distribution
from tailscore.risk_measures import measures

_KINDS = ('mean', 'var_minus', 'var_plus', 'es', 'expectile', 'shortfall', 'ratio', 'rvar')


class GeneratorSpec():

    """ Descriptor of a generating risk measure rho*.

    Parameters
    ----------
    kind : {'mean', 'var_minus', 'var_plus', 'es', 'expectile', 'shortfall', 'ratio', 'rvar'}
    alpha : float, optional
        Level of ``var_minus``, ``var_plus`` and ``es``, lower level of ``rvar``.
    beta : float, optional
        Upper level of ``rvar``.
    tau : float, optional
        Level of ``expectile``.
    loss : BuildingBlock or callable, optional
        Loss function of ``shortfall``.
    u, t : BuildingBlock or callable, optional
        Numerator and denominator of ``ratio``.

    """

    def __init__(self, kind, alpha=None, beta=None, tau=None, loss=None, u=None, t=None):

        if kind not in _KINDS:
            raise InputArgumentError('kind', 'GeneratorSpec', 'unknown generator {!r}'.format(kind))

        self.kind = kind
        self.parameters = {}

        if kind in ('var_minus', 'var_plus', 'es'):
            self.parameters['alpha'] = check_level(alpha, 'GeneratorSpec', 'alpha')
        elif kind == 'rvar':
            self.parameters['alpha'], self.parameters['beta'] = check_level_pair(alpha, beta, 'GeneratorSpec')
        elif kind == 'expectile':
            self.parameters['tau'] = check_level(tau, 'GeneratorSpec', 'tau')
        elif kind == 'shortfall':
            if loss is None:
                raise InputArgumentError('loss', 'GeneratorSpec', 'shortfall needs a loss function')
            self.parameters['loss'] = as_block(loss, 'ell')
        elif kind == 'ratio':
            if u is None or t is None:
                raise InputArgumentError('u', 'GeneratorSpec', 'ratio needs both u and t')
            self.parameters['u'] = as_block(u, 'u')
            self.parameters['t'] = as_block(t, 't')

    def __call__(self, F):

        parameters = self.parameters

        if self.kind == 'mean':
            return F.mean()
        if self.kind == 'var_minus':
            return F.var_minus(parameters['alpha'])
        if self.kind == 'var_plus':
            return F.var_plus(parameters['alpha'])
        if self.kind == 'es':
            return measures.es(F, parameters['alpha'])
        if self.kind == 'rvar':
            return measures.rvar(F, parameters['alpha'], parameters['beta'])
        if self.kind == 'expectile':
            return measures.expectile(F, parameters['tau'])
        if self.kind == 'shortfall':
            return measures.shortfall(F, parameters['loss'])

        return measures.ratio_of_expectations(F, parameters['u'], parameters['t'])

    def __repr__(self):
        shown = {key: value for key, value in self.parameters.items() if isinstance(value, float)}
        return 'GeneratorSpec({!r}, {})'.format(self.kind, shown)


class TailPairSpec():

    """ A generator together with the transform that induces the tail risk measure.

    Parameters
    ----------
    generator : GeneratorSpec
    p : float, optional
        Level of the right tail; lower level of the body.
    variant : {'right_tail', 'left_tail', 'body'}, default: 'right_tail'
        ``right_tail`` gives rho(F) = rho*(F_p), ``left_tail`` gives
        rho^q(F) = rho*(F^q) and ``body`` gives rho^[p,q](F) = rho*(F^[p,q]).
    q : float, optional
        Level of the left tail; upper level of the body.

    """

    def __init__(self, generator, p=None, variant='right_tail', q=None):

        if not isinstance(generator, GeneratorSpec):
            raise InputArgumentError('generator', 'TailPairSpec', 'expected a GeneratorSpec')

        if variant == 'right_tail':
            p = check_level(p, 'TailPairSpec')
        elif variant == 'left_tail':
            q = check_level(q, 'TailPairSpec', 'q', closed_right=True)
        elif variant == 'body':
            p, q = check_level_pair(p, q, 'TailPairSpec')
        else:
            raise InputArgumentError('variant', 'TailPairSpec', 'unknown variant {!r}'.format(variant))

        self.generator = generator
        self.p = p
        self.q = q
        self.variant = variant

    def transform(self, F):

        if self.variant == 'right_tail':
            return tail_distribution(F, self.p)
        if self.variant == 'left_tail':
            return left_tail_distribution(F, self.q)

        return body_distribution(F, self.p, self.q)

    def __call__(self, F):
        return self.generator(self.transform(F))


def tail_risk(spec, F):
    """Value of the tail risk measure described by `spec` at F.

    Examples
    --------
    >>> from tailscore.distribution import make_discrete
    >>> U4 = make_discrete([(1, .25), (2, .25), (3, .25), (4, .25)])
    >>> tail_risk(TailPairSpec(GeneratorSpec('mean'), 0.5), U4)
    3.5

    """

    return spec(F)
