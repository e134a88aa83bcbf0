import numpy as np
from tailscore._private_tools.configuration import DEFAULT_BOX, MONOTONICITY_GRID, FINITE_DIFFERENCE_STEP
from tailscore._private_tools.exceptions import InputArgumentError, MonotonicityError
from tailscore._private_tools.input_arguments import check_forecast


class ScoreSpec():

    """ Scoring function S(forecast, y) with k forecast components.

    Parameters
    ----------
    arity : int
        Number k of forecast components, 1, 2 or 3.
    evaluator : callable
        ``evaluator(*components, y)`` returning a float array; the arguments
        broadcast against each other.
    functional : str
        Name of the functional the score is meant to elicit.
    construction : str
        Name of the construction that produced the score.
    parameters : dict, optional
        Levels and building blocks used by the construction.
    action_domain : callable, optional
        ``action_domain(*components)`` returning a boolean array of admissible
        forecasts. Triplet scores are defined on v1 <= v2.
    box : tuple of float, optional
        Evaluation box of the monotonicity spot checks, ``DEFAULT_BOX`` when
        not given.

    Attributes
    ----------
    arity : int
    functional : str
    construction : str
    parameters : dict
    box : tuple of float

    """

    def __init__(self, arity, evaluator, functional, construction, parameters=None, action_domain=None, box=None):

        if arity not in (1, 2, 3):
            raise InputArgumentError('arity', 'ScoreSpec', 'must be 1, 2 or 3')

        self.arity = arity
        self.evaluator = evaluator
        self.functional = functional
        self.construction = construction
        self.parameters = dict(parameters or {})
        self.action_domain = action_domain
        self.box = tuple(DEFAULT_BOX if box is None else box)

    def __call__(self, forecast, y):

        components = check_forecast(forecast, self.arity, 'ScoreSpec')
        value = np.asarray(self.evaluator(*components, np.asarray(y, dtype=float)), dtype=float)

        return value[()] if value.ndim == 0 else value

    def __repr__(self):
        return 'ScoreSpec(functional={!r}, construction={!r}, arity={})'.format(self.functional, self.construction,
                                                                              self.arity)

    def admissible(self, *components):

        if self.action_domain is None:
            return np.ones(np.broadcast(*components).shape, dtype=bool)

        return np.asarray(self.action_domain(*components), dtype=bool)


def expected_score(S, forecast, F):
    """Exact expected score, the finite sum of S(forecast, y) F({y}) over the atoms of F.

    Parameters
    ----------
    S : ScoreSpec
    forecast : sequence
        k components; arrays of a common shape are evaluated elementwise.
    F : DiscreteDistribution

    Returns
    -------
    float or numpy.ndarray

    Raises
    ------
    InputArgumentError
        If the number of forecast components does not match the arity of S.

    Examples
    --------
    >>> from tailscore.distribution import DiscreteDistribution
    >>> from tailscore.scoring import pinball_score
    >>> expected_score(pinball_score(0.5), 2.0, DiscreteDistribution.point_mass(5.0))
    1.5

    """

    components = check_forecast(forecast, S.arity, 'expected_score')
    expanded = [component[..., np.newaxis] for component in components]
    values = np.broadcast_to(np.asarray(S.evaluator(*expanded, F.atoms), dtype=float),
                             components[0].shape + F.atoms.shape)
    result = values @ F.masses

    return float(result) if np.ndim(result) == 0 else result


def min_slope(function, box=DEFAULT_BOX, grid=MONOTONICITY_GRID, step=FINITE_DIFFERENCE_STEP):
    """Smallest central difference quotient of ``function(x, y)`` in its second argument.

    The scan runs over a product grid of ``grid[0]`` x-values and ``grid[1]``
    y-values covering `box`.

    Returns
    -------
    slope : float
    witness : tuple of float
        The (x, y) pair where the smallest quotient was found.

    """

    lo, hi = box
    x = np.linspace(lo, hi, grid[0])[:, np.newaxis]
    y = np.linspace(lo, hi, grid[1])[np.newaxis, :]
    quotients = (np.asarray(function(x, y + step), dtype=float)
                 - np.asarray(function(x, y - step), dtype=float)) / (2.0 * step)
    quotients = np.broadcast_to(quotients, (grid[0], grid[1]))
    i, j = np.unravel_index(np.argmin(quotients), quotients.shape)

    return float(quotients[i, j]), (float(x[i, 0]), float(y[0, j]))


def min_slope_in_y(S, box=None):
    """Smallest finite-difference slope of y -> S(x, y) over the evaluation box of S."""

    if S.arity != 1:
        raise InputArgumentError('S', 'min_slope_in_y', 'expected a score with one forecast component')

    return min_slope(S.evaluator, S.box if box is None else box)


def is_strictly_increasing_in_y(S, box=None):
    return min_slope_in_y(S, box)[0] > 0.0


def check_increasing(function, caller, what, box=DEFAULT_BOX, error=MonotonicityError):
    """Raise `error` when ``function(x, y)`` is not strictly increasing in y on the grid of `box`."""

    slope, witness = min_slope(function, box)
    if not slope > 0.0:
        raise error('{}: {} is not strictly increasing on [{}, {}]; slope {:.3g}.'.format(caller, what, *box, slope),
                    witness=witness)

    return slope
