"""Export code tables (and any additional per-value columns) as CSV, JSON or aligned text."""
import csv
import io
import json
from typing import Any, List, Mapping, Sequence, Tuple

from .code_table import CodeTable

Rows = Tuple[List[str], List[List[Any]]]

formats = ('csv', 'json', 'table')


def table_rows(table: CodeTable, columns: Mapping[str, Sequence[Any]] = None) -> Rows:
    """Return a header and one row (k, codeword, *columns) per value of the table."""
    columns = columns or {}
    for name, column in columns.items():
        assert len(column) == len(table), 'column {0} has the wrong length'.format(name)

    header = ['k', 'codeword'] + list(columns)
    rows = [[k, str(cw)] + [column[k] for column in columns.values()] for k, cw in enumerate(table)]
    return header, rows


def to_csv(rows: Rows) -> str:
    """Format rows as CSV without a header line."""
    _, data = rows
    f = io.StringIO()
    writer = csv.writer(f, lineterminator='\n')
    writer.writerows(data)
    return f.getvalue()


def to_json(rows: Rows) -> str:
    """Format rows as a JSON list of records."""
    header, data = rows
    return json.dumps([dict(zip(header, row)) for row in data], indent=2) + '\n'


def to_text_table(rows: Rows) -> str:
    """Format rows as a right aligned text table with header."""
    header, data = rows
    cells = [[str(c) for c in header]] + [[str(c) for c in row] for row in data]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ['  '.join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'


def format_rows(rows: Rows, format_: str) -> str:
    """Format rows in one of the supported formats."""
    if format_ == 'csv':
        return to_csv(rows)
    if format_ == 'json':
        return to_json(rows)
    if format_ == 'table':
        return to_text_table(rows)
    raise ValueError('unknown format {0!r}'.format(format_))
