from .forecast_series import ForecastSeries
from .backtest_report import BacktestReport
from .backtests import calibration_test, comparative_test, long_run_covariance, default_lag
