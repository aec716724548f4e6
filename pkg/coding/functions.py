"""Contains bit helper functions that might be needed by different modules."""
from itertools import combinations
from typing import Iterator

import defaults
from .exceptions import WidthOutOfRangeException


def check_width(width: int, min_width: int = defaults.min_width, max_width: int = defaults.max_width) -> int:
    """Return the width unchanged or raise if it is not in min_width..max_width."""
    if not isinstance(width, int) or isinstance(width, bool) or not min_width <= width <= max_width:
        raise WidthOutOfRangeException('width must be in {0}..{1}, got {2!r}'.format(min_width, max_width, width))
    return width


def mask(width: int) -> int:
    """Return the integer with the lowest `width` bits set."""
    return (1 << width) - 1


def popcount(bits: int) -> int:
    """Return the number of set bits."""
    return bin(bits).count('1')


def parity(bits: int) -> int:
    """Return 0 for an even number of set bits and 1 for an odd number."""
    return popcount(bits) & 1


def masks_of_weight(width: int, weight: int) -> Iterator[int]:
    """Yield all width-bit masks with exactly `weight` bits set, in increasing order of bit positions."""
    for positions in combinations(range(width), weight):
        bits = 0
        for position in positions:
            bits |= 1 << position
        yield bits


def to_bit_string(bits: int, width: int) -> str:
    """Return the bits as a string of length width, most significant bit left."""
    return format(bits, '0{0}b'.format(width)) if width > 0 else ''
