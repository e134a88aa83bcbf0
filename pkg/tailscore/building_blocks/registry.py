"""
Registry of named building blocks.

Names are ``<kind>.<name>``: ``phi.*`` for convex functions, ``g.*`` for
functions of the observation or of a quantile forecast, ``ell.*`` for the loss
functions of shortfall risk measures and ``u.*`` / ``t.*`` for the numerator
and denominator of ratios of expectations. Declarative family files refer to
blocks by these names.
"""

import numpy as np
from tailscore._private_tools.exceptions import UnknownRegistryNameError
from tailscore.building_blocks.building_block import BuildingBlock, piecewise_monotone_variation
from tailscore.building_blocks import convex


def _zero():
    return BuildingBlock('g.zero', lambda x: np.zeros_like(x), derivative=lambda x: np.zeros_like(x),
                         antiderivative=lambda x: np.zeros_like(x), variation=lambda lo, hi: 0.0, lower_bound=0.0)


def _one(kind):
    return BuildingBlock('{}.one'.format(kind), lambda x: np.ones_like(x), derivative=lambda x: np.zeros_like(x),
                         antiderivative=lambda x: x, variation=lambda lo, hi: 0.0, lower_bound=1.0)


def _identity(kind):
    return BuildingBlock('{}.identity'.format(kind), lambda x: x, derivative=lambda x: np.ones_like(x),
                         antiderivative=lambda x: 0.5 * x * x,
                         variation=piecewise_monotone_variation(lambda x: x))


def _square(kind):
    return BuildingBlock('{}.square'.format(kind), lambda x: x * x, derivative=lambda x: 2.0 * x,
                         antiderivative=lambda x: x**3 / 3.0,
                         variation=piecewise_monotone_variation(lambda x: x * x, (0.0,)), lower_bound=0.0)


def clipped_linear(floor=-1.0):
    """Loss ell(x) = max(x, floor), bounded from below by ``floor < 0``."""

    floor = float(floor)

    def antiderivative(s):
        s = np.asarray(s, dtype=float)
        return np.where(s < floor, floor * s, floor * floor + 0.5 * (s * s - floor * floor))

    return BuildingBlock('ell.clipped_linear', lambda x: np.maximum(x, floor),
                         derivative=lambda x: (x >= floor).astype(float), antiderivative=antiderivative,
                         variation=piecewise_monotone_variation(lambda x: np.maximum(x, floor)), lower_bound=floor)


def exp_minus_one():
    """Loss ell(x) = exp(x) - 1, bounded from below by -1."""
    return BuildingBlock('ell.exp_minus_one', lambda x: np.expm1(x), derivative=lambda x: np.exp(x),
                         antiderivative=lambda x: np.expm1(x) - x,
                         variation=piecewise_monotone_variation(np.expm1), lower_bound=-1.0)


def indicator(a, b, kind='u'):
    """Indicator of the half-open interval [a, b); it jumps by one at a and at b.

    Its variation over (lo, hi] counts a jump at c when lo < c <= hi, so a jump
    sitting exactly on lo is left out and one on hi is counted.

    """

    a, b = float(a), float(b)

    def variation(lo, hi):
        return float(sum(1 for jump in (a, b) if lo < jump <= hi))

    return BuildingBlock('{}.indicator'.format(kind), lambda x: ((x >= a) & (x < b)).astype(float),
                         variation=variation, lower_bound=0.0)


_REGISTRY = {
    'phi.bounded_quadratic': convex.bounded_quadratic,
    'phi.square': convex.square,
    'g.zero': _zero,
    'g.identity': lambda: _identity('g'),
    'g.square': lambda: _square('g'),
    'ell.identity': lambda: _identity('ell'),
    'ell.clipped_linear': clipped_linear,
    'ell.exp_minus_one': exp_minus_one,
    'u.one': lambda: _one('u'),
    'u.identity': lambda: _identity('u'),
    'u.square': lambda: _square('u'),
    't.one': lambda: _one('t'),
    't.identity': lambda: _identity('t'),
    't.square': lambda: _square('t'),
}


def get_building_block(name):
    """Fresh instance of the registered building block called `name`.

    Raises
    ------
    UnknownRegistryNameError

    """

    try:
        factory = _REGISTRY[name]
    except KeyError:
        raise UnknownRegistryNameError(name, _REGISTRY.keys())

    return factory()


def registered_names(kind=None):

    names = sorted(_REGISTRY)
    if kind is not None:
        names = [name for name in names if name.startswith(kind + '.')]

    return names
