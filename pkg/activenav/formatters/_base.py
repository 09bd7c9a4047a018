# built-in
import sys
from typing import Any, Mapping, Optional, Sequence, TextIO


def format_value(value: Any) -> str:
    """Six decimals for floats, empty for undefined values."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return '{:.6f}'.format(value)
    return str(value)


def round_floats(value: Any) -> Any:
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, Mapping):
        return {key: round_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(item) for item in value]
    return value


class BaseFormatter:
    """Writes a table of result rows, one `format` call per row.
    """

    def __init__(self, columns: Sequence[str], stream: Optional[TextIO] = None):
        self.columns = tuple(columns)
        self.stream = stream if stream is not None else sys.stdout

    def start(self) -> None:
        pass

    def format(self, row: Mapping[str, Any]) -> Optional[str]:
        raise NotImplementedError

    def stop(self) -> None:
        pass

    def handle(self, row: Mapping[str, Any]) -> None:
        line = self.format(row)
        if line is not None:
            self._write(line)

    def write_all(self, rows: Sequence[Mapping[str, Any]]) -> None:
        self.start()
        for row in rows:
            self.handle(row)
        self.stop()

    def _write(self, line: str) -> None:
        self.stream.write(line + '\n')
