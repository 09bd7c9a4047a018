# built-in
from typing import Any, Mapping

# app
from .._logic import color_rate, colored
from ._base import BaseFormatter, format_value


RATES = frozenset({'sr', 'or', 'spl', 'success', 'oracle', 'val_sr', 'rate', 'change_rate', 'corrected_rate'})


class ColoredFormatter(BaseFormatter):
    """Aligned table for the terminal: labels in blue, rates in green or yellow.
    """

    def start(self) -> None:
        self._write(' | '.join(colored(column.ljust(10), 'blue') for column in self.columns))

    def format(self, row: Mapping[str, Any]) -> str:
        cells = []
        for column in self.columns:
            value = row.get(column)
            if column in RATES and isinstance(value, float):
                cell = color_rate(value)
                cells.append(cell + ' ' * max(0, 10 - len(format_value(value))))
            elif value is None:
                cells.append(colored('null'.ljust(10), 'grey'))
            else:
                cells.append(format_value(value).ljust(10))
        return ' | '.join(cells)
