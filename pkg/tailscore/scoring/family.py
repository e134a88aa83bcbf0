"""
Declarative description of score and identification families.

A family is a construction name, its levels and the registry names of its
building blocks. It round-trips through JSON without loss, so family files can
be kept next to data and reports.
"""

import json
from tailscore._private_tools.configuration import DEFAULT_BOX
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore.building_blocks import get_building_block
from tailscore import identification
from tailscore.scoring import elementary, tail_scores

_FIELDS = ('construction', 'p', 'q', 'tau', 'phi', 'g', 'loss', 'u', 't', 'box')


def _needs(spec, *names):

    for name in names:
        if getattr(spec, name) is None:
            raise InputArgumentError(name, 'FamilySpec', 'construction {!r} needs it'.format(spec.construction))

    return [getattr(spec, name) for name in names]


_SCORES = {
    'bregman': lambda s: elementary.bregman_score(s.phi, s.g, box=s.box),
    'pinball': lambda s: elementary.pinball_score(*_needs(s, 'p'), box=s.box),
    'quantile': lambda s: elementary.quantile_score(*_needs(s, 'p'), s.g, box=s.box),
    'fz': lambda s: elementary.fz_score(*_needs(s, 'p'), s.phi, s.g, box=s.box),
    'rvar': lambda s: elementary.rvar_score(*_needs(s, 'p', 'q'), s.phi, s.g, s.g, box=s.box),
    'expectile': lambda s: elementary.expectile_score(*_needs(s, 'tau'), s.phi, s.g, box=s.box),
    'ratio': lambda s: elementary.ratio_score(*_needs(s, 'u', 't'), s.phi, s.g, box=s.box),
    'shortfall': lambda s: elementary.shortfall_score(*_needs(s, 'loss'), s.g, box=s.box),
    'tail-mean': lambda s: tail_scores.tail_mean_score(*_needs(s, 'p'), s.phi, box=s.box),
    'tail-expectile': lambda s: tail_scores.tail_expectile_score(*_needs(s, 'p', 'tau'), s.phi, box=s.box),
    'tail-shortfall': lambda s: tail_scores.tail_shortfall_score(*_needs(s, 'p', 'loss'), box=s.box),
    'tail-ratio': lambda s: tail_scores.tail_ratio_score(*_needs(s, 'p', 'u', 't'), s.phi, box=s.box),
    'left-tail-mean': lambda s: tail_scores.left_tail_mean_score(*_needs(s, 'q'), s.phi, box=s.box),
    'body-mean': lambda s: tail_scores.body_mean_score(*_needs(s, 'p', 'q'), s.phi, box=s.box),
}

_IDENTIFICATIONS = {
    'id-mean': lambda s: identification.mean_id(),
    'id-quantile': lambda s: identification.quantile_id(*_needs(s, 'p')),
    'id-expectile': lambda s: identification.expectile_id(*_needs(s, 'tau')),
    'id-shortfall': lambda s: identification.shortfall_id(get_building_block(*_needs(s, 'loss'))),
    'id-var-es': lambda s: identification.var_es_id(*_needs(s, 'p')),
    'id-rvar': lambda s: identification.rvar_id(*_needs(s, 'p', 'q')),
    'id-tail-mean': lambda s: identification.lift_id(identification.mean_id(), *_needs(s, 'p')),
    'id-tail-expectile': lambda s: identification.lift_id(identification.expectile_id(*_needs(s, 'tau')),
                                                          *_needs(s, 'p')),
    'id-tail-shortfall': lambda s: identification.lift_id(
        identification.shortfall_id(get_building_block(*_needs(s, 'loss'))), *_needs(s, 'p')),
    'id-tail-ratio': lambda s: identification.lift_id(
        identification.ratio_id(*[get_building_block(name) for name in _needs(s, 'u', 't')]), *_needs(s, 'p')),
    'id-body-mean': lambda s: identification.body_id(identification.mean_id(), *_needs(s, 'p', 'q')),
}


class FamilySpec():

    """ Declarative score or identification family.

    Parameters
    ----------
    construction : str
        One of :func:`family_names`. Names starting with ``id-`` build an
        :class:`IdSpec`, the others a :class:`ScoreSpec`.
    p, q, tau : float, optional
        Levels used by the construction.
    phi, g, loss, u, t : str, optional
        Registry names of the building blocks.
    box : sequence of two floats, optional
        Evaluation box of the monotonicity spot checks.

    Examples
    --------
    >>> family = FamilySpec('fz', p=0.5, phi='phi.bounded_quadratic')
    >>> FamilySpec.from_json(family.to_json()) == family
    True

    """

    def __init__(self, construction, p=None, q=None, tau=None, phi=None, g=None, loss=None, u=None, t=None,
                 box=None):

        if construction not in _SCORES and construction not in _IDENTIFICATIONS:
            raise InputArgumentError('construction', 'FamilySpec', 'unknown family {!r}'.format(construction))

        self.construction = construction
        self.p = None if p is None else float(p)
        self.q = None if q is None else float(q)
        self.tau = None if tau is None else float(tau)
        self.phi = phi
        self.g = g
        self.loss = loss
        self.u = u
        self.t = t
        self.box = tuple(float(value) for value in (DEFAULT_BOX if box is None else box))

        for name in ('phi', 'g', 'loss', 'u', 't'):
            value = getattr(self, name)
            if value is not None:
                get_building_block(value)

    def __eq__(self, other):
        return isinstance(other, FamilySpec) and self.to_dict() == other.to_dict()

    def __repr__(self):
        shown = ', '.join('{}={!r}'.format(key, value) for key, value in self.to_dict().items()
                          if value is not None and key != 'construction')
        return 'FamilySpec({!r}, {})'.format(self.construction, shown)

    @property
    def is_identification(self):
        return self.construction in _IDENTIFICATIONS

    def to_dict(self):

        data = {name: getattr(self, name) for name in _FIELDS}
        data['box'] = list(self.box)

        return data

    @classmethod
    def from_dict(cls, data):

        unknown = set(data) - set(_FIELDS)
        if unknown:
            raise InputArgumentError('data', 'FamilySpec.from_dict', 'unknown keys {}'.format(sorted(unknown)))
        if 'construction' not in data:
            raise InputArgumentError('data', 'FamilySpec.from_dict', 'missing "construction"')

        return cls(**data)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def build(self):
        """The ScoreSpec or IdSpec the family describes."""

        if self.is_identification:
            return _IDENTIFICATIONS[self.construction](self)

        return _SCORES[self.construction](self)


def family_names(kind=None):
    """Known construction names; `kind` is ``'score'``, ``'identification'`` or None for both."""

    if kind == 'score':
        return sorted(_SCORES)
    if kind == 'identification':
        return sorted(_IDENTIFICATIONS)

    return sorted(_SCORES) + sorted(_IDENTIFICATIONS)
