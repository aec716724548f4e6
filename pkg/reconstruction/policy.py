"""Defines how candidate values are chosen during prediction-guided reconstruction."""
from enum import Enum
from typing import NamedTuple

import defaults
from coding import ConfigurationException


class TieBreak(Enum):
    """Rule for candidates with the same distance to the prediction.

    Both rules fall back to the lexicographically smaller codeword, which only
    matters for tables that map two codewords to the same value.
    """

    SMALLER_VALUE = 'smaller'
    LARGER_VALUE = 'larger'


class ReconstructionPolicy(NamedTuple('ReconstructionPolicy', [('radius', int), ('include_center', bool),
                                                               ('tie_break', TieBreak)])):
    """Radius of the Hamming ball, whether the decoded codeword itself competes, and the tie-break rule."""

    __slots__ = ()

    def __new__(cls, radius: int = defaults.radius, include_center: bool = defaults.include_center,
                tie_break: TieBreak = TieBreak.SMALLER_VALUE):
        """Create a policy; the radius must not be negative."""
        if not isinstance(radius, int) or radius < 0:
            raise ConfigurationException('radius', 'must be a non-negative integer, got {0!r}'.format(radius))
        return super(ReconstructionPolicy, cls).__new__(cls, radius, include_center, TieBreak(tie_break))

    def check_width(self, width: int) -> None:
        """Raise if the radius exceeds the codeword width."""
        if self.radius > width:
            raise ConfigurationException('radius', 'must not exceed the width {0}, got {1}'.format(width, self.radius))
