import numpy as np
from tailscore._private_tools.configuration import ROOT_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_forecast


def indicator(condition):
    return np.asarray(condition, dtype=float)


class IdSpec():

    """ Identification function V(forecast, y) with k forecast components.

    Parameters
    ----------
    arity : int
        Number k of forecast components, 1, 2 or 3.
    evaluator : callable
        ``evaluator(*components, y)`` returning a sequence of k arrays. The
        components and y are float arrays that broadcast against each other.
    functional : str
        Name of the identified functional, for instance ``'(Q_p, ES_p)'``.
    construction : str
        Name of the construction that produced the function.
    parameters : dict, optional
        Levels and building blocks the construction used.
    action_domain : callable, optional
        ``action_domain(*components)`` returning a boolean array; forecasts
        outside it are not admissible (triplets need v1 <= v2).

    """

    def __init__(self, arity, evaluator, functional, construction, parameters=None, action_domain=None):

        if arity not in (1, 2, 3):
            raise InputArgumentError('arity', 'IdSpec', 'must be 1, 2 or 3')

        self.arity = arity
        self.evaluator = evaluator
        self.functional = functional
        self.construction = construction
        self.parameters = dict(parameters or {})
        self.action_domain = action_domain

    def __call__(self, forecast, y):

        components = check_forecast(forecast, self.arity, 'IdSpec')
        y = np.asarray(y, dtype=float)
        values = self.evaluator(*components, y)

        return np.stack(np.broadcast_arrays(*[np.asarray(value, dtype=float) for value in values]))

    def __repr__(self):
        return 'IdSpec(functional={!r}, construction={!r}, arity={})'.format(self.functional, self.construction,
                                                                           self.arity)

    def component(self, index):
        """Scalar identification function given by one component."""

        def evaluator(*arguments):
            return (self.evaluator(*arguments)[index],)

        return IdSpec(self.arity, evaluator, self.functional, '{}[{}]'.format(self.construction, index),
                      self.parameters, self.action_domain)

    def admissible(self, *components):

        if self.action_domain is None:
            return np.ones(np.broadcast(*components).shape, dtype=bool)

        return np.asarray(self.action_domain(*components), dtype=bool)


def expected_id(V, forecast, F):
    """Exact expectation of V(forecast, Y) for Y distributed according to F.

    Parameters
    ----------
    V : IdSpec
    forecast : sequence
        k components; each may be an array, all of a common shape S.
    F : DiscreteDistribution

    Returns
    -------
    numpy.ndarray
        Shape (k,) + S.

    Raises
    ------
    InputArgumentError
        If the number of forecast components does not match the arity of V.

    """

    components = check_forecast(forecast, V.arity, 'expected_id')
    expanded = [component[..., np.newaxis] for component in components]
    values = np.stack(np.broadcast_arrays(*[np.asarray(value, dtype=float)
                                            for value in V.evaluator(*expanded, F.atoms)]))

    return values @ F.masses


def grid_root_set(V, coordinates, F, tolerance=ROOT_TOLERANCE):
    """Points of a product grid where every component of the expected identification vanishes.

    Parameters
    ----------
    V : IdSpec
    coordinates : sequence of 1-d arrays
        One array of grid values per forecast component.
    F : DiscreteDistribution
    tolerance : float, default: 1e-10

    Returns
    -------
    numpy.ndarray
        Array of shape (n_roots, k) with the grid roots in lexicographic order.

    """

    mesh = np.meshgrid(*[np.asarray(axis, dtype=float) for axis in coordinates], indexing='ij')
    flat = [axis.ravel() for axis in mesh]
    values = expected_id(V, flat, F)
    mask = np.all(np.abs(values) <= tolerance, axis=0) & V.admissible(*flat)

    return np.column_stack([axis[mask] for axis in flat])
