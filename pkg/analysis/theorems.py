"""Verify the distance bounds and distance patterns of counting codes.

Every check returns a Verdict instead of raising, so that several checks can
be reported together.
"""
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, NamedTuple, Sequence

from coding import CodeTable, Codeword, NotACountingSequenceException, is_counting_sequence
from .distance import average_hamming, near_k_profile

Verdict = NamedTuple('Verdict', [('theorem', str), ('n', int), ('passed', bool), ('details', Dict[str, Any])])

#: A maximum counting sequence of length 3: its average distance reaches n - 1/2.
MAXIMAL_SEQUENCE_3 = CodeTable.from_bits([0b000, 0b111, 0b001, 0b110, 0b011, 0b100, 0b010, 0b101], 3,
                                         name='maximal')


def as_record(verdict: Verdict) -> Dict[str, Any]:
    """Return the verdict as a JSON serializable record {theorem, n, pass, details}."""
    details = {key: str(value) if isinstance(value, Fraction) else value for key, value in verdict.details.items()}
    return dict(theorem=verdict.theorem, n=verdict.n, details=details, **{'pass': verdict.passed})


def check_theorem1(table: Sequence[Codeword]) -> Verdict:
    """Check 1 <= average Hamming distance <= n - 1/2 for a counting sequence with n > 1."""
    if not is_counting_sequence(table):
        raise NotACountingSequenceException('the average distance bound only holds for counting sequences')

    n = table[0].width
    average = average_hamming(table)
    upper = Fraction(2 * n - 1, 2)
    return Verdict('theorem1', n, 1 <= average <= upper,
                   dict(average=average, lower=Fraction(1), upper=upper, maximal=average == upper))


def check_theorem3(table: Sequence[Codeword]) -> Verdict:
    """Check near-1 distances >= n - 1, with distance n exactly at the indices p - 1 and 2p - 1."""
    n = table[0].width
    p = len(table) // 2
    profile = near_k_profile(table, 1)

    bound = all(d >= n - 1 for d in profile)
    expected = [n if j in (p - 1, 2 * p - 1) else n - 1 for j in range(len(table))]
    pattern = list(profile) == expected

    return Verdict('theorem3', n, bound and pattern,
                   dict(bound=bound, pattern=pattern, minimum=min(profile), distance_n_at=list(profile.indices_of(n))))


def check_theorem4(table: Sequence[Codeword]) -> Verdict:
    """Check that the near-2 distance is 1 exactly where k mod p is p - 2 or p - 1 and 2 elsewhere."""
    n = table[0].width
    p = len(table) // 2
    profile = near_k_profile(table, 2)

    expected = [1 if k % p in (p - 2, p - 1) else 2 for k in range(len(table))]

    return Verdict('theorem4', n, list(profile) == expected,
                   dict(distance_1_at=list(profile.indices_of(1)), histogram=dict(sorted(Counter(profile).items()))))


def check_theorem5(table: Sequence[Codeword]) -> Verdict:
    """Check the parity consequence: not every near-1 distance is even and both parities are visited equally."""
    n = table[0].width
    profile = near_k_profile(table, 1)

    all_even = all(d % 2 == 0 for d in profile)
    parities = Counter(cw.parity() for cw in table)
    balanced = parities[0] == parities[1] == len(table) // 2

    return Verdict('theorem5', n, not all_even and balanced,
                   dict(all_even=all_even, even_words=parities[0], odd_words=parities[1]))


def steps_preserve_parity(sequence: Sequence[Codeword]) -> bool:
    """Return True if every cyclic near-1 distance is even, i.e. all codewords share one parity."""
    return all(d % 2 == 0 for d in near_k_profile(sequence, 1))
