"""Tests the coding.table_io module."""
import json
import os

from analysis import near_k_profile
from coding.table_io import format_rows, table_rows


def test_table2_layout(data_dir, table_n4):
    """CSV export with near-1 and near-2 columns equals the golden file byte for byte."""
    columns = {'near-1': near_k_profile(table_n4, 1), 'near-2': near_k_profile(table_n4, 2)}
    with open(os.path.join(data_dir, 'table2.csv')) as f:
        assert format_rows(table_rows(table_n4, columns), 'csv') == f.read()


def test_csv_has_no_header(table_n4):
    """Exported tables start with value 0 and end with value 15."""
    lines = format_rows(table_rows(table_n4), 'csv').splitlines()

    assert lines[0] == '0,0000'
    assert lines[-1] == '15,1111'
    assert len(lines) == 16


def test_json_and_text(table_n4):
    """JSON gives one record per value, text has a header and a rule."""
    records = json.loads(format_rows(table_rows(table_n4), 'json'))
    assert records[7] == dict(k=7, codeword='1011')

    lines = format_rows(table_rows(table_n4), 'table').splitlines()
    assert lines[0].split() == ['k', 'codeword']
    assert set(lines[1]) <= {'-', ' '}
    assert lines[-1].split() == ['15', '1111']
