"""Defines a codeword class with various helper methods."""
from functools import total_ordering

from .exceptions import ValueOutOfRangeException, WidthMismatchException
from .functions import check_width, mask, parity, to_bit_string


@total_ordering
class Codeword(object):
    """Defines a binary n-tuple.

    Bit positions are counted 1..n from the right to the left, the rightmost
    bit is the least significant one. Leading zeros are significant, which is
    why the width is stored together with the bits.
    """

    __slots__ = ('bits', 'width')

    def __init__(self, bits: int, width: int):
        """Initialize a new codeword from an unsigned integer and its width."""
        assert isinstance(bits, int)
        check_width(width)

        if not 0 <= bits <= mask(width):
            raise ValueOutOfRangeException('{0} does not fit into {1} bits'.format(bits, width))

        object.__setattr__(self, 'bits', bits)
        object.__setattr__(self, 'width', width)

    def __setattr__(self, key, value):
        """Codewords are immutable."""
        raise AttributeError('{0} is immutable'.format(self.__class__.__name__))

    @classmethod
    def from_string(cls, string: str) -> 'Codeword':
        """Create a codeword from a bit string like '1011' (most significant bit left)."""
        string = string.strip()
        if not string or any(c not in '01' for c in string):
            raise ValueOutOfRangeException('not a bit string: {0!r}'.format(string))
        return cls(int(string, 2), len(string))

    def bit(self, position: int) -> int:
        """Return the bit at position 1..n counted from the right."""
        if not 1 <= position <= self.width:
            raise ValueOutOfRangeException('bit position must be in 1..{0}'.format(self.width))
        return (self.bits >> (position - 1)) & 1

    def complement(self) -> 'Codeword':
        """Return the bitwise complement within the width of the codeword."""
        return Codeword(self.bits ^ mask(self.width), self.width)

    def flip(self, flips: int) -> 'Codeword':
        """Return the codeword with all bits set in `flips` inverted."""
        return Codeword(self.bits ^ flips, self.width)

    def parity(self) -> int:
        """Return 0 if the codeword has an even number of ones and 1 otherwise."""
        return parity(self.bits)

    def check_width(self, other: 'Codeword') -> None:
        """Raise if the other codeword has a different width."""
        if self.width != other.width:
            raise WidthMismatchException('width {0} differs from width {1}'.format(self.width, other.width))

    def __reduce__(self):
        """Pickle codewords by their constructor arguments."""
        return self.__class__, (self.bits, self.width)

    def __eq__(self, other: object) -> bool:
        """Check equality of two codewords."""
        if isinstance(other, Codeword):
            return self.bits == other.bits and self.width == other.width

        return NotImplemented

    def __lt__(self, other: 'Codeword') -> bool:
        """Compare two codewords of equal width lexicographically."""
        if isinstance(other, Codeword):
            self.check_width(other)
            return self.bits < other.bits

        return NotImplemented

    def __hash__(self) -> int:
        """Hash the codeword by bits and width."""
        return hash((self.bits, self.width))

    def __str__(self) -> str:
        """Return the codeword as bit string."""
        return to_bit_string(self.bits, self.width)

    def __repr__(self) -> str:
        """Return nice string representation for console."""
        return "{class_}('{bits}')".format(class_=self.__class__.__name__, bits=str(self))


def complement(cw: Codeword) -> Codeword:
    """Return the bitwise complement of a codeword."""
    assert isinstance(cw, Codeword)

    return cw.complement()
