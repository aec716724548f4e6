"""Distance analysis of counting codes."""

from .distance import DistanceProfile, average_hamming, hamming, near_k_profile
from .search import search_constant_even_near1, search_constant_near1
from .theorems import (MAXIMAL_SEQUENCE_3, Verdict, as_record, check_theorem1, check_theorem3, check_theorem4,
                       check_theorem5, steps_preserve_parity)
