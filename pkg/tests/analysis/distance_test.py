"""Tests the analysis.distance module."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis.strategies import integers

from analysis import MAXIMAL_SEQUENCE_3, average_hamming, hamming, near_k_profile
from coding import Codeword, ValueOutOfRangeException, WidthMismatchException, generate_counting, generate_gray
from coding import rotate_table
from tests.conftest import codeword_pairs, codewords


def cw(string):
    """Shortcut for a codeword from a bit string."""
    return Codeword.from_string(string)


def test_hamming_examples():
    """Distances of the worked example and the extreme cases."""
    assert hamming(cw('0100'), cw('1001')) == 3
    assert hamming(cw('0000'), cw('1111')) == 4


@given(codewords())
def test_hamming_identity(x):
    """Every codeword has distance 0 to itself and n to its complement."""
    assert hamming(x, x) == 0
    assert hamming(x, x.complement()) == x.width


@given(codeword_pairs())
def test_hamming_is_symmetric_and_bounded(pair):
    """The distance is symmetric and between 0 and n."""
    a, b = pair
    assert hamming(a, b) == hamming(b, a)
    assert 0 <= hamming(a, b) <= a.width


def test_hamming_width_mismatch():
    """Codewords of different widths cannot be compared."""
    with pytest.raises(WidthMismatchException):
        hamming(cw('010'), cw('0100'))


def test_table2_profiles(table_n4):
    """The near-1 and near-2 columns of the worked example."""
    assert near_k_profile(table_n4, 1) == (3, 3, 3, 3, 3, 3, 3, 4, 3, 3, 3, 3, 3, 3, 3, 4)
    assert near_k_profile(table_n4, 2) == (2, 2, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1)
    assert near_k_profile(table_n4, 0) == (0,) * 16
    assert near_k_profile(table_n4, 17) == near_k_profile(table_n4, 1).distances


def test_negative_offset():
    """A negative offset is rejected."""
    with pytest.raises(ValueOutOfRangeException):
        near_k_profile(generate_gray(2), -1)


def test_average_hamming():
    """Averages are exact fractions."""
    assert average_hamming(MAXIMAL_SEQUENCE_3) == Fraction(5, 2)
    assert average_hamming(generate_gray(5)) == 1
    assert average_hamming(generate_counting(4)) == Fraction(25, 8)


@given(integers(min_value=2, max_value=8), integers(min_value=0, max_value=3), integers(min_value=-300, max_value=300))
def test_profile_rotates_with_table(n, k, offset):
    """Rotating the table by s rotates every near-k profile by s."""
    table = generate_counting(n)

    assert near_k_profile(rotate_table(table, offset), k) == near_k_profile(table, k).rotate(offset)
