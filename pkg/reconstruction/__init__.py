"""Reconstruction strategies choosing the final output value from a decoded codeword and a prediction."""

from .neighborhood import (ball_masks, candidate_matrix, candidates, neighbors_within, reconstruct,
                           reconstruct_array)
from .policy import ReconstructionPolicy, TieBreak
from .threshold import threshold_array, threshold_reconstruct
