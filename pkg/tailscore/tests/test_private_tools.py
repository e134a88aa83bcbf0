import numpy as np
import pytest
import uibcdf_stdlib.exceptions
from tailscore._private_tools.configuration import get_n_threads, THREADS_VARIABLE
from tailscore._private_tools.exceptions import TailScoreError, InputArgumentError, InputFileError, GridGuardError
from tailscore._private_tools.input_arguments import check_level, check_level_pair, check_finite, check_forecast
from tailscore._private_tools.parallel import map_chunks


def test_get_n_threads(monkeypatch):
    monkeypatch.delenv(THREADS_VARIABLE, raising=False)
    assert get_n_threads() == 1
    monkeypatch.setenv(THREADS_VARIABLE, '4')
    assert get_n_threads() == 4
    monkeypatch.setenv(THREADS_VARIABLE, 'many')
    with pytest.raises(InputArgumentError):
        get_n_threads()
    monkeypatch.setenv(THREADS_VARIABLE, '0')
    with pytest.raises(InputArgumentError):
        get_n_threads()


@pytest.mark.parametrize('n_threads', [1, 3])
def test_map_chunks_keeps_the_order(n_threads):
    n = 100000
    result = map_chunks(lambda start, stop: np.arange(start, stop) * 2.0, n, n_threads)
    assert result.shape == (n,)
    assert np.array_equal(result, np.arange(n) * 2.0)


def test_map_chunks_small():
    calls = []

    def function(start, stop):
        calls.append((start, stop))
        return np.arange(start, stop)

    assert map_chunks(function, 10, 8).tolist() == list(range(10))
    assert calls == [(0, 10)]


def test_check_level():
    assert check_level(0.5, 'caller') == 0.5
    assert check_level(np.float64(0.25), 'caller') == 0.25
    assert check_level(0.0, 'caller', closed_left=True) == 0.0
    for bad in (0.0, 1.0, -0.1, np.nan, 'half', '0.5', None):
        with pytest.raises(InputArgumentError):
            check_level(bad, 'caller')
    assert check_level_pair(0.25, 0.75, 'caller') == (0.25, 0.75)
    with pytest.raises(InputArgumentError):
        check_level_pair(0.5, 0.5, 'caller')


def test_check_finite_and_forecast():
    assert check_finite(2, 'caller', 'r') == 2.0
    with pytest.raises(InputArgumentError):
        check_finite(np.inf, 'caller', 'r')
    v, x = check_forecast((1.0, np.array([1.0, 2.0])), 2, 'caller')
    assert v.shape == x.shape == (2,)
    with pytest.raises(InputArgumentError):
        check_forecast(1.0, 2, 'caller')
    with pytest.raises(InputArgumentError):
        check_forecast((np.zeros(2), np.zeros(3)), 2, 'caller')


def test_error_messages():
    error = InputArgumentError('p', 'es', 'level 2.0 outside (0, 1)')
    assert (error.argument, error.caller) == ('p', 'es')
    assert str(error).endswith('(level 2.0 outside (0, 1))')
    assert isinstance(error, uibcdf_stdlib.exceptions.InputArgumentError)
    assert isinstance(error, TailScoreError)
    assert isinstance(error, ValueError)
    assert str(InputFileError('a.csv', 'bad cell', line=3)).startswith('a.csv:3:')
    assert GridGuardError(10, 5).n_points == 10


def test_public_checks_raise_the_library_error():
    from tailscore.distribution import make_discrete
    F = make_discrete([(1.0, 0.5), (2.0, 0.5)])
    with pytest.raises(uibcdf_stdlib.exceptions.InputArgumentError):
        F.var_minus(1.5)
    with pytest.raises(uibcdf_stdlib.exceptions.InputArgumentError):
        check_forecast({'v': 1.0}, 1, 'caller')
