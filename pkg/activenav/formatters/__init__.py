# app
from ._base import BaseFormatter, format_value, round_floats
from ._colored import ColoredFormatter
from ._csv import CSVFormatter, write_rows
from ._json import JSONFormatter, dumps


FORMATTERS = dict(
    colored=ColoredFormatter,
    csv=CSVFormatter,
    json=JSONFormatter,
)

__all__ = [
    'FORMATTERS', 'BaseFormatter', 'ColoredFormatter', 'CSVFormatter', 'JSONFormatter',
    'format_value', 'round_floats', 'dumps', 'write_rows',
]
