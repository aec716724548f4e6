"""Hamming distances, cyclic near-k distance profiles and average distances."""
from fractions import Fraction
from typing import Iterator, Sequence, Tuple

from coding import Codeword
from coding.exceptions import ValueOutOfRangeException
from coding.functions import popcount


def hamming(a: Codeword, b: Codeword) -> int:
    """Return the number of bit positions in which a and b differ."""
    assert isinstance(a, Codeword)
    assert isinstance(b, Codeword)
    a.check_width(b)

    return popcount(a.bits ^ b.bits)


class DistanceProfile(Sequence[int]):
    """Cyclic near-k Hamming distances of a code.

    distances[j] is the Hamming distance between the codewords of the values
    (j + k) mod 2^n and j.
    """

    def __init__(self, k: int, distances: Sequence[int]):
        """Create a profile for offset k."""
        self.k = k
        self.distances = tuple(distances)

    def __getitem__(self, index):
        """Return the distance(s) at index."""
        return self.distances[index]

    def __len__(self) -> int:
        """Return the length of the profile, which equals the length of the code."""
        return len(self.distances)

    def __iter__(self) -> Iterator[int]:
        """Iterate over the distances."""
        return iter(self.distances)

    def __eq__(self, other: object) -> bool:
        """Compare with another profile or a plain sequence of distances."""
        if isinstance(other, DistanceProfile):
            return self.k == other.k and self.distances == other.distances
        if isinstance(other, (tuple, list)):
            return self.distances == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        """Hash the profile by offset and distances."""
        return hash((self.k, self.distances))

    def indices_of(self, distance: int) -> Tuple[int, ...]:
        """Return all indices j with the given distance."""
        return tuple(j for j, d in enumerate(self.distances) if d == distance)

    def rotate(self, offset: int) -> 'DistanceProfile':
        """Return the profile with index j moved to index j - offset (cyclically)."""
        offset %= len(self.distances)
        return DistanceProfile(self.k, self.distances[offset:] + self.distances[:offset])

    def __repr__(self) -> str:
        """Return nice string representation for console."""
        return '{class_}(k={k}, distances={distances!r})'.format(class_=self.__class__.__name__, k=self.k,
                                                                 distances=self.distances)


def near_k_profile(table: Sequence[Codeword], k: int) -> DistanceProfile:
    """O(2^n): Return the cyclic near-k Hamming distance profile of a sequence of codewords."""
    assert len(table) > 0
    if k < 0:
        raise ValueOutOfRangeException('the offset k must not be negative, got {0}'.format(k))

    size = len(table)
    return DistanceProfile(k, [hamming(table[(j + k) % size], table[j]) for j in range(size)])


def average_hamming(table: Sequence[Codeword]) -> Fraction:
    """O(2^n): Return the exact average of the cyclic near-1 distances of the sequence."""
    profile = near_k_profile(table, 1)
    return Fraction(sum(profile), len(profile))
