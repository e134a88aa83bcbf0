import numpy as np
from tailscore._private_tools.exceptions import InputArgumentError


class ForecastSeries():

    """ Forecasts for k components issued at times t = 0, ..., n - 1, with their realizations.

    Parameters
    ----------
    forecasts : array_like
        Shape (n, k), or (n,) for a single component.
    y : array_like
        Shape (n,).
    index : array_like of int, optional
        Time stamps; 0, ..., n - 1 when not given.

    Attributes
    ----------
    forecasts : numpy.ndarray
        Shape (n, k).
    y : numpy.ndarray
    index : numpy.ndarray
    arity : int

    """

    def __init__(self, forecasts, y, index=None):

        forecasts = np.array(forecasts, dtype=float)
        if forecasts.ndim == 1:
            forecasts = forecasts[:, np.newaxis]
        y = np.array(y, dtype=float).ravel()

        if forecasts.ndim != 2 or forecasts.shape[0] == 0:
            raise InputArgumentError('forecasts', 'ForecastSeries', 'expected a nonempty (n, k) array')
        if forecasts.shape[0] != y.size:
            raise InputArgumentError('y', 'ForecastSeries', '{} forecasts but {} realizations'.format(
                forecasts.shape[0], y.size))
        if not (np.all(np.isfinite(forecasts)) and np.all(np.isfinite(y))):
            raise InputArgumentError('forecasts', 'ForecastSeries', 'non-finite values')

        index = np.arange(y.size) if index is None else np.array(index, dtype=int).ravel()
        if index.size != y.size:
            raise InputArgumentError('index', 'ForecastSeries', 'length differs from the number of records')

        for array in (forecasts, y, index):
            array.flags.writeable = False

        self.forecasts = forecasts
        self.y = y
        self.index = index
        self.arity = forecasts.shape[1]

    def __len__(self):
        return self.y.size

    def __repr__(self):
        return 'ForecastSeries(n={}, arity={})'.format(len(self), self.arity)

    @classmethod
    def static(cls, forecast, y):
        """The same forecast at every time step."""

        y = np.asarray(y, dtype=float).ravel()
        forecast = np.atleast_1d(np.asarray(forecast, dtype=float))

        return cls(np.tile(forecast, (y.size, 1)), y)

    @property
    def components(self):
        return tuple(self.forecasts.T)
