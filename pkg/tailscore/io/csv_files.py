"""
CSV inputs and outputs: UTF-8, a header row, '.' as decimal separator.
"""

import numpy as np
import pandas as pd
from tailscore._private_tools.exceptions import InputFileError
from tailscore.estimation import Sample
from tailscore.backtest import ForecastSeries

FORECAST_COLUMNS = {1: ['x'], 2: ['v', 'x'], 3: ['v1', 'v2', 'x']}


def _read_columns(path, columns):
    """Float columns of a CSV file; bad cells are reported with their 1-based line number."""

    try:
        frame = pd.read_csv(path, dtype=str, encoding='utf-8', skipinitialspace=True)
    except FileNotFoundError:
        raise InputFileError(path, 'file not found')
    except pd.errors.EmptyDataError:
        raise InputFileError(path, 'the file is empty')
    except (pd.errors.ParserError, UnicodeDecodeError) as error:
        raise InputFileError(path, 'unreadable CSV ({})'.format(error))

    frame.columns = [str(column).strip() for column in frame.columns]
    missing = [column for column in columns if column not in frame.columns]
    if missing:
        raise InputFileError(path, 'missing column(s) {} in header {}'.format(missing, list(frame.columns)), line=1)
    if len(frame) == 0:
        raise InputFileError(path, 'no data rows')

    values = {}
    for column in columns:
        numbers = pd.to_numeric(frame[column].str.strip(), errors='coerce')
        bad = np.flatnonzero(~np.isfinite(numbers.to_numpy(dtype=float)))
        if bad.size:
            row = int(bad[0])
            raise InputFileError(path, 'column {!r}: cannot read {!r} as a finite number'.format(
                column, frame[column].iloc[row]), line=row + 2)
        values[column] = numbers.to_numpy(dtype=float)

    return values


def from_csv_sample(path):
    """Sample from the column ``y`` of a CSV file."""
    return Sample(_read_columns(path, ['y'])['y'])


def from_csv_series(path, arity):
    """ForecastSeries from the columns ``y,x``, ``y,v,x`` or ``y,v1,v2,x`` of a CSV file.

    Parameters
    ----------
    path : str
    arity : int
        Number of forecast components, 1, 2 or 3.

    Raises
    ------
    InputFileError
        For a missing file, a missing column or a row that does not parse.

    """

    columns = FORECAST_COLUMNS[arity]
    values = _read_columns(path, ['y'] + columns)

    return ForecastSeries(np.column_stack([values[column] for column in columns]), values['y'])


def to_csv_scores(series, scores, path):
    """Write the forecast records with an appended ``score`` column."""

    frame = pd.DataFrame({'y': series.y})
    for column, values in zip(FORECAST_COLUMNS[series.arity], series.components):
        frame[column] = values
    frame['score'] = np.asarray(scores, dtype=float)
    frame.to_csv(path, index=False, float_format='%.17g')

    return frame


def to_csv_report(report, path):
    """Write a report as a one-row CSV file.

    List-valued fields are spread over columns ``<field>_1``, ``<field>_2``, ...;
    undefined numbers are left as empty cells.

    """

    row = {}
    for key, value in report.to_dict().items():
        if isinstance(value, list):
            for index, item in enumerate(value, start=1):
                row['{}_{}'.format(key, index)] = item
        else:
            row[key] = value

    frame = pd.DataFrame([row])
    frame.to_csv(path, index=False, float_format='%.17g')

    return frame
