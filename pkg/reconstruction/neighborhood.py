"""Prediction-guided reconstruction from a Hamming ball around the decoded codeword.

If the error correction fails, the decoded codeword most likely differs from
the original codeword in few bits. All codewords within a small Hamming
distance of the decoded codeword are therefore candidates, and the candidate
whose value is closest to the prediction is taken as output.
"""
from typing import List, Set, Tuple

import numpy as np

from coding import CodeTable, Codeword, ValueOutOfRangeException
from coding.functions import masks_of_weight
from .policy import ReconstructionPolicy, TieBreak


def ball_masks(width: int, radius: int) -> List[int]:
    """Return all flip masks of weight 1..radius, lighter masks first."""
    return [m for weight in range(1, radius + 1) for m in masks_of_weight(width, weight)]


def neighbors_within(cw: Codeword, radius: int) -> Set[Codeword]:
    """Return all codewords at Hamming distance 1..radius from cw (cw itself excluded)."""
    assert isinstance(cw, Codeword)
    if not isinstance(radius, int) or not 0 <= radius <= cw.width:
        raise ValueOutOfRangeException('radius must be in 0..{0}, got {1!r}'.format(cw.width, radius))

    return {cw.flip(m) for m in ball_masks(cw.width, radius)}


def candidates(decoded: Codeword, table: CodeTable, policy: ReconstructionPolicy) -> List[Tuple[int, Codeword]]:
    """Return (value, codeword) for every candidate codeword of the policy, sorted by codeword."""
    policy.check_width(table.width)
    words = neighbors_within(decoded, policy.radius)
    if policy.include_center:
        words.add(decoded)
    return sorted(((table.decode(cw), cw) for cw in words), key=lambda entry: entry[1])


def _key(value: int, cw: Codeword, predicted: int, tie_break: TieBreak) -> Tuple[int, int, int]:
    """Return the sort key of a candidate; smaller keys are better."""
    return abs(value - predicted), value if tie_break is TieBreak.SMALLER_VALUE else -value, cw.bits


def reconstruct(decoded: Codeword, predicted: int, table: CodeTable,
                policy: ReconstructionPolicy = ReconstructionPolicy()) -> int:
    """Return the candidate value closest to the predicted value."""
    assert isinstance(table, CodeTable)
    if not 0 <= predicted <= table.maxval:
        raise ValueOutOfRangeException('prediction must be in 0..{0}, got {1}'.format(table.maxval, predicted))

    options = candidates(decoded, table, policy)
    if not options:
        # Radius 0 without the center leaves nothing to choose from.
        return table.decode(decoded)

    value, _ = min(options, key=lambda entry: _key(entry[0], entry[1], predicted, policy.tie_break))
    return value


def candidate_matrix(table: CodeTable, policy: ReconstructionPolicy) -> np.ndarray:
    """Return a (2^n, m) array holding the candidate values for every decoded codeword.

    Row b contains the values of the candidates of the codeword with bits b:
    first the center (if included), then the ball in the order of `ball_masks`.
    """
    policy.check_width(table.width)
    masks = ([0] if policy.include_center else []) + ball_masks(table.width, policy.radius)
    if not masks:
        masks = [0]

    words = np.arange(table.size, dtype=np.int64)
    return table.values_array()[words[:, None] ^ np.array(masks, dtype=np.int64)[None, :]]


def reconstruct_array(decoded_bits: np.ndarray, predicted: np.ndarray, table: CodeTable,
                      policy: ReconstructionPolicy = ReconstructionPolicy(),
                      matrix: np.ndarray = None) -> np.ndarray:
    """Vectorized `reconstruct` for arrays of decoded codeword bits and predictions.

    A precomputed `candidate_matrix` may be passed to avoid rebuilding it.
    """
    if matrix is None:
        matrix = candidate_matrix(table, policy)

    values = matrix[decoded_bits]
    distance = np.abs(values - predicted[:, None])
    tie = values if policy.tie_break is TieBreak.SMALLER_VALUE else table.maxval - values
    # Values are unique within a row, so (distance, tie) is a total order.
    keys = distance * table.size + tie
    return values[np.arange(len(values)), np.argmin(keys, axis=1)]
