import numpy as np
from tailscore._private_tools.configuration import GRID_POINT_LIMIT, MASS_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError, GridGuardError
from tailscore._private_tools.parallel import map_chunks


class Grid():

    """ Product grid with one arithmetic progression per forecast component.

    Parameters
    ----------
    axes : sequence of (lo, hi, step)
        One triple per coordinate, with lo < hi and step > 0. The points are
        lo, lo + step, ... up to hi, rounded to 12 decimals so that values
        like 2.0 are hit exactly.

    Attributes
    ----------
    axes : tuple of tuple
    coordinates : list of numpy.ndarray
    n_points : int

    Raises
    ------
    InputArgumentError
        For an empty, reversed or non-finite axis.
    GridGuardError
        If the grid has more than ``GRID_POINT_LIMIT`` points.

    """

    def __init__(self, axes):

        axes = tuple((float(lo), float(hi), float(step)) for lo, hi, step in axes)
        if len(axes) == 0:
            raise InputArgumentError('axes', 'Grid', 'at least one axis is needed')

        self.coordinates = []
        for lo, hi, step in axes:
            if not (np.isfinite([lo, hi, step]).all() and lo < hi and step > 0.0):
                raise InputArgumentError('axes', 'Grid', 'degenerate axis {}:{}:{}'.format(lo, hi, step))
            n = int(np.floor((hi - lo) / step + 1e-9)) + 1
            if n > GRID_POINT_LIMIT:
                raise GridGuardError(n, GRID_POINT_LIMIT)
            self.coordinates.append(np.round(lo + step * np.arange(n), 12))

        self.axes = axes
        self.n_points = int(np.prod([len(axis) for axis in self.coordinates], dtype=float))
        if self.n_points > GRID_POINT_LIMIT:
            raise GridGuardError(self.n_points, GRID_POINT_LIMIT)

    def __repr__(self):
        return 'Grid({})'.format(', '.join('{}:{}:{}'.format(*axis) for axis in self.axes))

    @classmethod
    def parse(cls, specifications):
        """Grid from strings ``'lo:hi:step'``, one per coordinate."""

        axes = []
        for specification in specifications:
            try:
                lo, hi, step = (float(part) for part in specification.split(':'))
            except ValueError:
                raise InputArgumentError('grid', 'Grid.parse', 'expected lo:hi:step, got {!r}'.format(specification))
            axes.append((lo, hi, step))

        return cls(axes)

    @classmethod
    def uniform(cls, lo, hi, step, dimension):
        return cls([(lo, hi, step)] * dimension)

    @property
    def dimension(self):
        return len(self.axes)

    @property
    def steps(self):
        return np.array([step for _, _, step in self.axes])

    def points(self, start=0, stop=None):
        """Grid points ``start:stop`` in lexicographic order, as one array per coordinate."""

        stop = self.n_points if stop is None else stop
        return self.points_at(np.arange(start, stop))

    def points_at(self, indices):

        shape = tuple(len(axis) for axis in self.coordinates)
        unraveled = np.unravel_index(np.asarray(indices, dtype=np.intp), shape)

        return [axis[index] for axis, index in zip(self.coordinates, unraveled)]

    def to_dict(self):
        return {'axes': [list(axis) for axis in self.axes], 'n_points': self.n_points}


def scan(function, grid, n_threads=None):
    """Values of ``function(*components)`` at every grid point, in lexicographic order."""

    return map_chunks(lambda start, stop: np.asarray(function(*grid.points(start, stop)), dtype=float),
                      grid.n_points, n_threads)


def minimizer_indices(values, admissible=None, atol=MASS_TOLERANCE, rtol=MASS_TOLERANCE):
    """Indices of the values within ``atol + rtol |min|`` of the minimum over the admissible points."""

    values = np.asarray(values, dtype=float)
    if admissible is not None:
        values = np.where(admissible, values, np.inf)

    minimum = values.min()
    return np.flatnonzero(values <= minimum + atol + rtol * abs(minimum)), float(minimum)
