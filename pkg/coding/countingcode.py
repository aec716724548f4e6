"""Construct the new counting code of length n from the binary-reflected Gray code of length n - 1.

The construction has three steps applied to the Gray code (y_0, ..., y_{p-1}):

1. mirror:     (y_0, ..., y_{p-1}, y_{p-1}, ..., y_0)
2. complement: every codeword at an odd index of the doubled sequence is complemented
3. prefix:     even indices get the prefix bit 0, odd indices the prefix bit 1

Near-1 neighbors then differ in at least n - 1 bits and near-2 neighbors in
two bits, except around the middle and the end of the code.
"""
from typing import List, NamedTuple, Sequence

import defaults
from .code_table import CodeTable
from .functions import check_width, mask
from .graycode import gray_bits

GenerationTrace = NamedTuple('GenerationTrace', [('width', int), ('start', List[int]), ('mirrored', List[int]),
                                                 ('complemented', List[int]), ('table', CodeTable)])


def mirror(codes: Sequence[int]) -> List[int]:
    """Return the codes followed by the codes in reverse order."""
    return list(codes) + list(reversed(codes))


def complement_odd(codes: Sequence[int], width: int) -> List[int]:
    """Return the codes with every codeword at an odd index bitwise complemented within width."""
    complement = mask(width)
    return [code ^ complement if j & 1 else code for j, code in enumerate(codes)]


def add_prefixes(codes: Sequence[int], width: int) -> List[int]:
    """Return the codes extended by one leading bit alternating 0, 1, 0, 1, ..."""
    return [(j & 1) << width | code for j, code in enumerate(codes)]


def generation_trace(n: int) -> GenerationTrace:
    """O(2^n): Return all intermediate sequences of the construction of the length n code."""
    check_width(n, min_width=defaults.min_width + 1)

    start = gray_bits(n - 1)
    mirrored = mirror(start)
    complemented = complement_odd(mirrored, n - 1)
    table = CodeTable.from_bits(add_prefixes(complemented, n - 1), n, name='counting')

    return GenerationTrace(n, start, mirrored, complemented, table)


def generate_counting(n: int) -> CodeTable:
    """O(2^n): Return the new counting code of length n, 2 <= n <= 16."""
    return generation_trace(n).table
