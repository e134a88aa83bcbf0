import numpy as np
from tailscore._private_tools.exceptions import InputArgumentError


class BuildingBlock():

    """ Named real function used to assemble scores, identifications and risk measures.

    Parameters
    ----------
    name : str
        Registry name, for instance ``'g.identity'``.
    function : callable
        Vectorized map from a float array to a float array.
    derivative : callable, optional
        Derivative (a right derivative at kinks).
    antiderivative : callable, optional
        Some antiderivative, used for closed-form integrals.
    variation : callable, optional
        ``variation(lo, hi)`` returning the exact total variation on [lo, hi].
    lower_bound : float, optional
        Infimum of the function over the real line, when finite.

    Attributes
    ----------
    kind : str
        Registry family of the block (``'phi'``, ``'g'``, ``'ell'``, ``'u'``, ``'t'``, ``'h'``).

    """

    def __init__(self, name, function, derivative=None, antiderivative=None, variation=None, lower_bound=None):

        if not callable(function):
            raise InputArgumentError('function', 'BuildingBlock', 'not callable')

        self.name = name
        self.kind = name.split('.')[0] if '.' in name else None
        self.function = function
        self.derivative = derivative
        self.antiderivative = antiderivative
        self.variation = variation
        self.lower_bound = lower_bound

    def __call__(self, x):

        x = np.asarray(x, dtype=float)
        return np.broadcast_to(np.asarray(self.function(x), dtype=float), x.shape) + 0.0

    def __repr__(self):
        return 'BuildingBlock({!r})'.format(self.name)


def as_block(function, name='custom'):
    """Wrap a plain callable (or a constant) into a :class:`BuildingBlock`."""

    if isinstance(function, BuildingBlock):
        return function
    if function is None:
        return None
    if np.isscalar(function):
        value = float(function)
        return BuildingBlock('{}.constant'.format(name), lambda x: np.full_like(x, value),
                             derivative=lambda x: np.zeros_like(x),
                             antiderivative=lambda x: value * x,
                             variation=lambda lo, hi: 0.0,
                             lower_bound=value)

    return BuildingBlock(name, function)


def piecewise_monotone_variation(function, breakpoints=()):
    """Exact total variation of a continuous function monotone between breakpoints."""

    breakpoints = tuple(sorted(breakpoints))

    def variation(lo, hi):

        points = [lo] + [b for b in breakpoints if lo < b < hi] + [hi]
        values = np.asarray(function(np.asarray(points, dtype=float)), dtype=float)
        return float(np.abs(np.diff(values)).sum())

    return variation
