import math
import numpy as np
from uibcdf_stdlib.input_arguments import check_input_argument
from tailscore._private_tools.exceptions import InputArgumentError

REAL_TYPES = [float, int, np.floating, np.integer]
FORECAST_TYPES = [tuple, list, np.ndarray] + REAL_TYPES


def check_real(value, caller, argument):

    if not check_input_argument(value, REAL_TYPES):
        raise InputArgumentError(argument, caller, 'not a real number')

    return float(value)


def check_level(p, caller, argument='p', closed_left=False, closed_right=False):
    """Validate a probability level and return it as a float.

    By default the level must lie in the open interval (0, 1); ``closed_left``
    and ``closed_right`` admit the endpoints 0 and 1.

    """

    p = check_real(p, caller, argument)

    lower_ok = (p >= 0.0) if closed_left else (p > 0.0)
    upper_ok = (p <= 1.0) if closed_right else (p < 1.0)
    if not (math.isfinite(p) and lower_ok and upper_ok):
        interval = '{}0, 1{}'.format('[' if closed_left else '(', ']' if closed_right else ')')
        raise InputArgumentError(argument, caller, 'level {} outside {}'.format(p, interval))

    return p


def check_level_pair(p, q, caller, closed_left=False, closed_right=False):

    p = check_level(p, caller, 'p', closed_left=closed_left)
    q = check_level(q, caller, 'q', closed_right=closed_right)
    if not p < q:
        raise InputArgumentError('q', caller, 'p = {} must be smaller than q = {}'.format(p, q))

    return p, q


def check_finite(value, caller, argument):

    value = check_real(value, caller, argument)
    if not math.isfinite(value):
        raise InputArgumentError(argument, caller, 'not finite')

    return value


def check_forecast(forecast, arity, caller):
    """Turn a forecast into a tuple of ``arity`` float arrays of a common shape."""

    if not check_input_argument(forecast, FORECAST_TYPES):
        raise InputArgumentError('forecast', caller, 'not a number, an array or a sequence of them')

    if np.ndim(forecast) == 0:
        forecast = (forecast,)

    forecast = tuple(np.asarray(component, dtype=float) for component in forecast)
    if len(forecast) != arity:
        raise InputArgumentError('forecast', caller, 'expected {} components, got {}'.format(arity, len(forecast)))

    try:
        forecast = tuple(np.broadcast_arrays(*forecast))
    except ValueError:
        raise InputArgumentError('forecast', caller, 'components of incompatible shapes')

    return forecast
