import numpy as np
from tailscore._private_tools.configuration import DEFAULT_BOX
from tailscore._private_tools.exceptions import InputArgumentError


class ConvexSpec():

    """ Strictly convex function phi with a chosen subgradient phi'.

    Parameters
    ----------
    phi : callable
        Strictly convex function, vectorized.
    dphi : callable
        Subgradient of `phi`; the right derivative at kinks.
    name : str, default: 'phi.custom'
    derivative_bound : float, optional
        A constant C with |phi'| <= C, when one exists. Constructions that
        need a monotone repair read it.
    box : tuple of float, optional
        Interval of the grid on which convexity and monotonicity of the
        subgradient are checked at construction.

    Raises
    ------
    InputArgumentError
        If midpoint convexity of `phi` or monotonicity of `dphi` fails on the
        test grid.

    """

    def __init__(self, phi, dphi, name='phi.custom', derivative_bound=None, box=None):

        self.phi = phi
        self.dphi = dphi
        self.name = name
        self.derivative_bound = derivative_bound

        lo, hi = DEFAULT_BOX if box is None else box
        grid = np.linspace(lo, hi, 401)
        values = np.asarray(phi(grid), dtype=float)
        midpoints = np.asarray(phi(0.5 * (grid[:-2] + grid[2:])), dtype=float)
        if np.any(midpoints >= 0.5 * (values[:-2] + values[2:])):
            raise InputArgumentError('phi', 'ConvexSpec', 'not strictly midpoint convex on [{}, {}]'.format(lo, hi))

        slopes = np.asarray(dphi(grid), dtype=float)
        if np.any(np.diff(slopes) < 0.0):
            raise InputArgumentError('dphi', 'ConvexSpec', 'subgradient not nondecreasing on [{}, {}]'.format(lo, hi))

    def __repr__(self):
        return 'ConvexSpec({!r})'.format(self.name)


def _bounded_quadratic(x):
    return x * x / (1.0 + np.abs(x))


def _bounded_quadratic_derivative(x):
    return (x * x + 2.0 * np.abs(x)) * np.sign(x) / (1.0 + np.abs(x))**2


def bounded_quadratic():
    """phi(x) = x^2 / (1 + |x|), strictly convex with |phi'| < 1."""
    return ConvexSpec(_bounded_quadratic, _bounded_quadratic_derivative, 'phi.bounded_quadratic', derivative_bound=1.0)


def square():
    """phi(x) = x^2; the Bregman score is the squared error."""
    return ConvexSpec(lambda x: x * x, lambda x: 2.0 * x, 'phi.square')
