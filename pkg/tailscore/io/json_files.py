import json
import numpy as np
from tailscore._private_tools.configuration import JSON_SCHEMA_VERSION
from tailscore._private_tools.exceptions import InputFileError
from tailscore.scoring import FamilySpec


def _plain(value):

    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return None if value != value else value

    return value


def report_document(command, report):
    """JSON-ready document for a report: the schema version, the command and the report fields."""

    body = report.to_dict() if hasattr(report, 'to_dict') else report
    return {'schema_version': JSON_SCHEMA_VERSION, 'command': command, 'report': _plain(body)}


def to_json_report(command, report, path=None):
    """Serialize a report; write it to `path` when given and return the text."""

    text = json.dumps(report_document(command, report), indent=2, sort_keys=True)
    if path is not None:
        with open(path, 'w', encoding='utf-8') as stream:
            stream.write(text + '\n')

    return text


def from_json_family(path):
    """FamilySpec from a JSON family file."""

    try:
        with open(path, 'r', encoding='utf-8') as stream:
            return FamilySpec.from_dict(json.load(stream))
    except FileNotFoundError:
        raise InputFileError(path, 'file not found')
    except json.JSONDecodeError as error:
        raise InputFileError(path, 'invalid JSON ({})'.format(error.msg), line=error.lineno)


def to_json_family(family, path):

    with open(path, 'w', encoding='utf-8') as stream:
        stream.write(family.to_json() + '\n')
