"""
Calibration backtests on mean identification values and comparative
backtests of the Diebold-Mariano type on score differences.

Long-run variances use the Bartlett kernel with ``lag`` lags, by default
floor(n^(1/3)); critical values are normal.
"""

import logging
import warnings
import numpy as np
from scipy import stats
from statsmodels.stats.sandwich_covariance import S_hac_simple, weights_bartlett
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore.identification import IdSpec
from tailscore.scoring import ScoreSpec
from tailscore.backtest.forecast_series import ForecastSeries
from tailscore.backtest.backtest_report import BacktestReport

logger = logging.getLogger(__name__)


def default_lag(n):
    return int(np.floor(n ** (1.0 / 3.0)))


def _check_lag(lag, n, caller):

    if lag is None:
        lag = default_lag(n)

    if int(lag) != lag or lag < 0:
        raise InputArgumentError('lag', caller, 'must be a nonnegative integer')

    return int(min(lag, max(n - 1, 0)))


def long_run_covariance(values, lag):
    """Bartlett-kernel covariance matrix of the column means of `values` (shape (n, k))."""

    values = np.asarray(values, dtype=float)
    n = values.shape[0]
    centered = values - values.mean(axis=0)

    return np.atleast_2d(S_hac_simple(centered, nlags=lag, weights_func=weights_bartlett)) / (n * n)


def _summarize(kind, functional, values, lag, caller):
    """Means, standard errors and test statistics of the columns of `values`."""

    n, k = values.shape
    lag = _check_lag(lag, n, caller)
    means = values.mean(axis=0)

    if n > 1:
        se_plain = values.std(axis=0, ddof=1) / np.sqrt(n)
        covariance = long_run_covariance(values, lag)
        se = np.sqrt(np.clip(np.diag(covariance), 0.0, None))
    else:
        se_plain = np.full(k, np.nan)
        covariance = np.full((k, k), np.nan)
        se = np.full(k, np.nan)

    degenerate = ~(se > 0.0)
    with np.errstate(divide='ignore', invalid='ignore'):
        stat = np.where(se > 0.0, means / se, np.where(means == 0.0, 0.0, np.sign(means) * np.inf))
    stat = np.where(np.isnan(se), np.nan, stat)
    p_value = 2.0 * stats.norm.sf(np.abs(stat))

    joint_stat, joint_p_value = np.nan, np.nan
    if not np.any(degenerate):
        try:
            joint_stat = float(means @ np.linalg.solve(covariance, means))
            joint_p_value = float(stats.chi2.sf(joint_stat, k))
        except np.linalg.LinAlgError:
            degenerate[:] = True

    if np.any(degenerate):
        message = '{} backtest of {}: degenerate standard error for component(s) {}'.format(
            kind, functional, list(np.flatnonzero(degenerate)))
        warnings.warn(message)
        logger.warning(message)

    logger.info('%s backtest of %s: n = %d, lag = %d, stat = %s', kind, functional, n, lag, np.round(stat, 4))

    return BacktestReport(kind, functional, list(means), list(se), list(se_plain), list(stat), list(p_value), n,
                          lag, joint_stat, joint_p_value, list(degenerate))


def calibration_test(V, series, lag=None):
    """Test that the identification values V(forecast_t, y_t) have mean zero.

    Parameters
    ----------
    V : IdSpec
    series : ForecastSeries
    lag : int, optional
        Number of Bartlett lags, floor(n^(1/3)) by default.

    Returns
    -------
    BacktestReport

    Raises
    ------
    InputArgumentError
        If the arity of the series differs from the one of V.

    Warns
    -----
    UserWarning
        When a standard error vanishes or is undefined (for instance n = 1).

    """

    if not isinstance(V, IdSpec):
        raise InputArgumentError('V', 'calibration_test', 'expected an IdSpec')
    if not isinstance(series, ForecastSeries) or series.arity != V.arity:
        raise InputArgumentError('series', 'calibration_test', 'expected a ForecastSeries with {} components'.format(
            V.arity))

    values = V(series.components, series.y).T

    return _summarize('calibration', V.functional, values, lag, 'calibration_test')


def comparative_test(S, series_a, series_b, lag=None):
    """Diebold-Mariano type test on the score differences d_t = S(A_t, y_t) - S(B_t, y_t).

    Negative statistics favour forecast A. Swapping A and B flips the sign of
    the mean and of the statistic.

    Raises
    ------
    InputArgumentError
        If the series have other realizations or a different arity than S.

    """

    if not isinstance(S, ScoreSpec):
        raise InputArgumentError('S', 'comparative_test', 'expected a ScoreSpec')

    for name, series in (('series_a', series_a), ('series_b', series_b)):
        if not isinstance(series, ForecastSeries) or series.arity != S.arity:
            raise InputArgumentError(name, 'comparative_test', 'expected a ForecastSeries with {} components'.format(
                S.arity))

    if series_a.y.shape != series_b.y.shape or not np.array_equal(series_a.y, series_b.y):
        raise InputArgumentError('series_b', 'comparative_test', 'the realizations differ from those of series_a')

    differences = (np.asarray(S(series_a.components, series_a.y), dtype=float)
                   - np.asarray(S(series_b.components, series_b.y), dtype=float))

    return _summarize('comparative', S.functional, differences[:, np.newaxis], lag, 'comparative_test')
