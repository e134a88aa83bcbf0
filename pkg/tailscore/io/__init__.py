from .csv_files import from_csv_sample, from_csv_series, to_csv_scores, to_csv_report, FORECAST_COLUMNS
from .json_files import report_document, to_json_report, from_json_family, to_json_family
