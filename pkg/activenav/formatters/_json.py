# built-in
import json
from typing import Any, Dict, List, Mapping

# external
from pygments import highlight
from pygments.formatters import TerminalFormatter
from pygments.lexers import JsonLexer

# app
from ._base import BaseFormatter, round_floats


def dumps(data: Any, color: bool = False) -> str:
    """Indented JSON with floats rounded to six decimals, highlighted when `color` is on."""
    text = json.dumps(round_floats(data), indent=2)
    if color:
        return highlight(text, JsonLexer(), TerminalFormatter()).rstrip('\n')
    return text


class JSONFormatter(BaseFormatter):
    """Collects the rows and writes one JSON document on stop.

    Output is highlighted only when the stream is a terminal.
    """
    _rows: List[Dict[str, Any]]

    def start(self) -> None:
        self._rows = []

    def format(self, row: Mapping[str, Any]) -> None:
        self._rows.append({column: row.get(column) for column in self.columns})

    def stop(self) -> None:
        isatty = getattr(self.stream, 'isatty', None)
        self._write(dumps(self._rows, color=bool(isatty and isatty())))
