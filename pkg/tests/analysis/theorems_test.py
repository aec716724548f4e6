"""Tests the analysis.theorems module."""
import json
import random
from fractions import Fraction
from itertools import permutations

import pytest

from analysis import (MAXIMAL_SEQUENCE_3, as_record, check_theorem1, check_theorem3, check_theorem4, check_theorem5,
                      near_k_profile, steps_preserve_parity)
from coding import CodeTable, Codeword, NotACountingSequenceException, generate_counting, generate_gray
from coding.functions import parity


@pytest.mark.parametrize('n', range(2, 13))
def test_theorem1_bounds(n):
    """The average near-1 distance of the counting code lies in [1, n - 1/2]."""
    verdict = check_theorem1(generate_counting(n))

    assert verdict.passed
    assert 1 <= verdict.details['average'] <= Fraction(2 * n - 1, 2)


def test_theorem1_extremes():
    """The maximal sequence attains the upper bound and the Gray code the lower bound."""
    maximal = check_theorem1(MAXIMAL_SEQUENCE_3)
    assert maximal.passed and maximal.details['maximal']
    assert maximal.details['average'] == Fraction(5, 2)

    gray = check_theorem1(generate_gray(4))
    assert gray.passed and gray.details['average'] == 1

    counting = check_theorem1(generate_counting(4))
    assert counting.passed and counting.details['average'] == Fraction(25, 8)


def test_theorem1_holds_for_all_orderings_of_width_2():
    """Every one of the 24 orderings of the 2-bit words satisfies the bounds."""
    orderings = list(permutations(range(4)))

    assert len(orderings) == 24
    assert all(check_theorem1(CodeTable.from_bits(ordering, 2)).passed for ordering in orderings)


def test_theorem1_needs_a_counting_sequence():
    """Sequences that miss words are rejected."""
    with pytest.raises(NotACountingSequenceException):
        check_theorem1([Codeword(0, 2), Codeword(3, 2)])


@pytest.mark.parametrize('n', range(2, 13))
def test_theorem3_pattern(n):
    """Near-1 distances are n at p - 1 and 2p - 1 and n - 1 elsewhere."""
    verdict = check_theorem3(generate_counting(n))
    p = 1 << (n - 1)

    assert verdict.passed
    assert verdict.details['distance_n_at'] == [p - 1, 2 * p - 1]


def test_theorem3_examples(table_n4):
    """Distance 4 at 7 and 15 for n = 4, profile (1, 2, 1, 2) for n = 2, and Gray codes fail."""
    assert check_theorem3(table_n4).details['distance_n_at'] == [7, 15]
    assert near_k_profile(generate_counting(2), 1) == (1, 2, 1, 2)
    assert check_theorem3(generate_counting(2)).passed
    assert not check_theorem3(generate_gray(4)).passed


@pytest.mark.parametrize('n', range(3, 13))
def test_theorem4_pattern(n):
    """Near-2 distances are 1 exactly where k mod p is p - 2 or p - 1."""
    verdict = check_theorem4(generate_counting(n))
    p = 1 << (n - 1)

    assert verdict.passed
    assert verdict.details['distance_1_at'] == [p - 2, p - 1, 2 * p - 2, 2 * p - 1]


def test_theorem4_examples(table_n4):
    """Ones at 6, 7, 14, 15 for n = 4 and at 14, 15, 30, 31 for n = 5."""
    assert check_theorem4(table_n4).details['distance_1_at'] == [6, 7, 14, 15]
    assert check_theorem4(generate_counting(5)).details['distance_1_at'] == [14, 15, 30, 31]
    assert not check_theorem4(generate_gray(4)).passed


@pytest.mark.parametrize('n', range(2, 13))
def test_theorem5_on_counting_codes(n):
    """Counting codes have odd near-1 steps and visit both parity classes equally."""
    verdict = check_theorem5(generate_counting(n))

    assert verdict.passed
    assert verdict.details['even_words'] == verdict.details['odd_words'] == 1 << (n - 1)


def test_even_steps_keep_parity(walks):
    """Walks with even steps stay in one parity class and visit at most half of the words."""
    rng = random.Random(0)
    for _ in range(walks):
        n = rng.randint(2, 8)
        even_masks = [m for m in range(1, 1 << n) if parity(m) == 0]
        word = rng.randrange(1 << n)
        walk = [word]
        for _ in range((1 << n) - 1):
            word ^= rng.choice(even_masks)
            walk.append(word)
        assert steps_preserve_parity([Codeword(w, n) for w in walk])
        assert len(set(parity(w) for w in walk)) == 1
        assert len(set(walk)) <= 1 << (n - 1)


def test_as_record_is_json_serializable(table_n4):
    """Verdicts are exported as {theorem, n, pass, details} records."""
    record = as_record(check_theorem1(table_n4))

    assert set(record) == {'theorem', 'n', 'pass', 'details'}
    assert record['pass'] is True
    assert json.loads(json.dumps(record))['details']['average'] == '25/8'
