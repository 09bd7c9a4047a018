# built-in
import csv
from io import StringIO
from pathlib import Path
from typing import Any, Mapping, Sequence

# app
from ._base import BaseFormatter, format_value


class CSVFormatter(BaseFormatter):
    def _row(self, values) -> str:
        buffer = StringIO()
        csv.writer(buffer, lineterminator='').writerow(values)
        return buffer.getvalue()

    def start(self) -> None:
        self._write(self._row(self.columns))

    def format(self, row: Mapping[str, Any]) -> str:
        return self._row([format_value(row.get(column)) for column in self.columns])


def write_rows(rows: Sequence[Mapping[str, Any]], columns: Sequence[str], path: Path) -> None:
    with path.open('w', newline='') as stream:
        CSVFormatter(columns=columns, stream=stream).write_all(rows)
