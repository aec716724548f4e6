"""Defines the code table, an ordered value to codeword map and its inverse."""
from typing import Dict, Iterable, Iterator, Sequence, Tuple, Union, overload

import numpy as np

from .codeword import Codeword
from .exceptions import NotACountingSequenceException, ValueOutOfRangeException, WidthMismatchException


def is_counting_sequence(sequence: Sequence[Codeword]) -> bool:
    """O(2^n): Return True if the sequence visits all 2^n codewords of its width exactly once."""
    if len(sequence) == 0:
        return False
    width = sequence[0].width
    if any(cw.width != width for cw in sequence):
        return False
    return len(sequence) == 1 << width and len(set(cw.bits for cw in sequence)) == len(sequence)


class CodeTable(Sequence[Codeword]):
    """A counting sequence of codewords indexed by the pixel value they represent."""

    def __init__(self, entries: Iterable[Codeword], name: str = None):
        """Create a table from codewords; raise if they do not form a counting sequence."""
        entries = tuple(entries)
        for cw in entries:
            assert isinstance(cw, Codeword)

        if not is_counting_sequence(entries):
            raise NotACountingSequenceException('the codewords do not visit every n-tuple exactly once')

        self._entries = entries
        self._inverse = {cw.bits: value for value, cw in enumerate(entries)}  # type: Dict[int, int]
        self.width = entries[0].width
        self.name = name

    @classmethod
    def from_bits(cls, bits: Iterable[int], width: int, name: str = None) -> 'CodeTable':
        """Create a table from plain integers of the given width."""
        return cls((Codeword(b, width) for b in bits), name=name)

    @property
    def entries(self) -> Tuple[Codeword, ...]:
        """Return all codewords ordered by value."""
        return self._entries

    @property
    def size(self) -> int:
        """Return the number of codewords (2^n)."""
        return len(self._entries)

    @property
    def maxval(self) -> int:
        """Return the largest representable pixel value."""
        return len(self._entries) - 1

    def encode(self, value: int) -> Codeword:
        """O(1): Return the codeword representing value."""
        if not isinstance(value, (int, np.integer)) or not 0 <= value < len(self._entries):
            raise ValueOutOfRangeException('value must be in 0..{0}, got {1!r}'.format(self.maxval, value))
        return self._entries[value]

    def decode(self, cw: Codeword) -> int:
        """O(1): Return the value represented by the codeword."""
        assert isinstance(cw, Codeword)
        if cw.width != self.width:
            raise WidthMismatchException('codeword has width {0}, table has width {1}'.format(cw.width, self.width))
        return self._inverse[cw.bits]

    def bits_array(self) -> np.ndarray:
        """Return the codewords as integer array indexed by value."""
        return np.array([cw.bits for cw in self._entries], dtype=np.int64)

    def values_array(self) -> np.ndarray:
        """Return the values as integer array indexed by codeword bits."""
        values = np.empty(len(self._entries), dtype=np.int64)
        for value, cw in enumerate(self._entries):
            values[cw.bits] = value
        return values

    @overload
    def __getitem__(self, index: int) -> Codeword:
        pass

    @overload
    def __getitem__(self, index: slice) -> Tuple[Codeword, ...]:
        pass

    def __getitem__(self, index: Union[int, slice]) -> Union[Codeword, Tuple[Codeword, ...]]:
        """Return the codeword(s) at index."""
        return self._entries[index]

    def __len__(self) -> int:
        """Return the number of codewords."""
        return len(self._entries)

    def __iter__(self) -> Iterator[Codeword]:
        """Iterate over the codewords ordered by value."""
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        """Two tables are equal if they contain the same codewords in the same order."""
        if isinstance(other, CodeTable):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        """Hash the table by its entries."""
        return hash(self._entries)

    def __repr__(self) -> str:
        """Return nice string representation for console."""
        return '{class_}(name={name!r}, width={width}, entries=({entries}))'.format(
            class_=self.__class__.__name__, name=self.name, width=self.width,
            entries=', '.join(str(cw) for cw in self._entries))


def encode(value: int, table: CodeTable) -> Codeword:
    """Return the codeword representing value in table."""
    return table.encode(value)


def decode(cw: Codeword, table: CodeTable) -> int:
    """Return the value the codeword represents in table."""
    return table.decode(cw)


def rotate_table(table: CodeTable, offset: int) -> CodeTable:
    """Return a table whose value j is represented by the codeword of value (j + offset) mod 2^n.

    Rotating moves the irregularities of a code to other pixel values while all
    cyclic near-k distances are rotated by the same offset.
    """
    assert isinstance(table, CodeTable)
    offset %= len(table)
    name = table.name if offset == 0 else '{0}>>{1}'.format(table.name, offset)
    return CodeTable(table.entries[offset:] + table.entries[:offset], name=name)
