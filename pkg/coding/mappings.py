"""Named value to codeword mappings."""
from collections import OrderedDict
from typing import Callable, Dict

from .code_table import CodeTable, rotate_table
from .countingcode import generate_counting
from .exceptions import ConfigurationException
from .functions import check_width
from .graycode import generate_gray


def generate_binary(n: int) -> CodeTable:
    """O(2^n): Return the natural binary representation of length n."""
    check_width(n)
    return CodeTable.from_bits(range(1 << n), n, name='binary')


mappings = OrderedDict([
    ('binary', generate_binary),
    ('gray', generate_gray),
    ('counting', generate_counting),
])  # type: Dict[str, Callable[[int], CodeTable]]


def mapping_table(name: str, n: int, shift: int = 0) -> CodeTable:
    """Return the table of the named mapping with width n, optionally rotated by shift values."""
    try:
        generate = mappings[name]
    except KeyError:
        raise ConfigurationException('mapping', 'unknown mapping {0!r}, choose from {1}'.format(
            name, ', '.join(mappings)))

    table = generate(n)
    if shift:
        table = rotate_table(table, shift)
    return table
