import json
from abc import ABC, abstractmethod
from typing import Dict

import numpy as np
import pandas as pd

from .suites import Report


def format_float(x: float) -> str:
    """17 significant digits; integral values keep a trailing '.0'."""
    s = '%.17g' % x
    if s.lstrip('-').isdigit():
        s += '.0'
    return s


def _format_cell(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return 'true' if x else 'false'
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format_float(float(x))
    return str(x)


class Writer(ABC):
    @abstractmethod
    def table(self, df: pd.DataFrame) -> str:
        raise NotImplementedError

    @abstractmethod
    def report(self, report: Report) -> str:
        raise NotImplementedError


class Csv(Writer):
    def table(self, df: pd.DataFrame) -> str:
        formatted = df.apply(lambda column: column.map(_format_cell))
        return formatted.to_csv(index=False, lineterminator='\n')

    def report(self, report: Report) -> str:
        rows = [{
            'name': c.name,
            'residual': c.residual if c.residual is not None else float('nan'),
            'tolerance': c.tolerance,
            'pass': c.passed,
        } for c in report.checks]
        return self.table(pd.DataFrame(rows, columns=['name', 'residual', 'tolerance', 'pass']))


class Json(Writer):
    def table(self, df: pd.DataFrame) -> str:
        return df.to_json(orient='records', double_precision=15, indent=2) + '\n'

    def report(self, report: Report) -> str:
        return json.dumps(report.to_dict(), indent=2) + '\n'


WRITERS: Dict[str, Writer] = {
    'csv': Csv(),
    'json': Json(),
}
