"""Generate binary-reflected Gray codes by the reflection method."""
from typing import List, Sequence

from .code_table import CodeTable
from .codeword import Codeword
from .functions import check_width, popcount


def reflect(codes: Sequence[int], width: int) -> List[int]:
    """O(2^n): Return the reflected Gray code of width + 1 from the Gray code `codes` of width `width`.

    The code is listed in reverse, concatenated to itself and the originals get
    the prefix 0 while the reversed copy gets the prefix 1.
    """
    prefix = 1 << width
    return list(codes) + [prefix | code for code in reversed(codes)]


def gray_bits(n: int) -> List[int]:
    """O(2^n): Return the binary-reflected Gray code of length n as plain integers."""
    check_width(n)

    codes = [0, 1]
    for width in range(1, n):
        codes = reflect(codes, width)
    return codes


def generate_gray(n: int) -> CodeTable:
    """O(2^n): Return the binary-reflected Gray code of length n, 1 <= n <= 16."""
    return CodeTable.from_bits(gray_bits(n), n, name='gray')


def is_cyclic_gray(table: Sequence[Codeword]) -> bool:
    """Return True iff every cyclically adjacent pair of codewords differs in exactly one bit."""
    assert len(table) > 0

    return all(popcount(table[j].bits ^ table[(j + 1) % len(table)].bits) == 1 for j in range(len(table)))
