"""
Numerical defaults shared by the whole library.

The values are read once at import time. The only runtime knob is the
``TAILSCORE_THREADS`` environment variable, which caps the number of worker
threads used by the grid scans.
"""

import os

#: Absolute tolerance for comparisons of probability masses and cdf values.
MASS_TOLERANCE = 1e-12

#: Absolute tolerance for bisection roots (expectiles, shortfall, Z-estimation).
ROOT_TOLERANCE = 1e-10

#: Tolerance of the axiom probes.
AXIOM_TOLERANCE = 1e-9

MAX_BISECTION_ITERATIONS = 200

#: Margin added on both sides of the atom hull when bracketing roots.
BRACKET_MARGIN = 1.0

#: Maximal number of points in a verification or estimation grid.
GRID_POINT_LIMIT = 10**7

#: Evaluation box used by the monotonicity spot checks and the numeric repairs.
DEFAULT_BOX = (-5.0, 15.0)

#: Number of x-values and y-values of the monotonicity spot checks.
MONOTONICITY_GRID = (101, 401)

FINITE_DIFFERENCE_STEP = 1e-5

#: Number of points of the fine partitions (numeric repairs, total variation).
FINE_PARTITION_POINTS = 2**14

#: Version of the JSON documents written by the command line interface.
JSON_SCHEMA_VERSION = 1

THREADS_VARIABLE = 'TAILSCORE_THREADS'


def get_n_threads():
    """Number of worker threads allowed for grid scans.

    Returns
    -------
    int
        Value of the ``TAILSCORE_THREADS`` environment variable, 1 if unset.

    Raises
    ------
    InputArgumentError
        If the variable is set to something other than a positive integer.

    """

    from tailscore._private_tools.exceptions import InputArgumentError

    value = os.environ.get(THREADS_VARIABLE)
    if value is None or value.strip() == '':
        return 1

    try:
        n_threads = int(value)
    except ValueError:
        raise InputArgumentError(THREADS_VARIABLE, 'get_n_threads', 'not an integer: {!r}'.format(value))

    if n_threads < 1:
        raise InputArgumentError(THREADS_VARIABLE, 'get_n_threads', 'must be at least 1')

    return n_threads
