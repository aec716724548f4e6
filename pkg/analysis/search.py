"""Exhaustive search for counting sequences with a constant cyclic near-1 distance.

The search enumerates orderings of all n-bit words in lexicographic order and
cuts off every prefix as soon as one step has the wrong distance, which covers
all (2^n)! orderings. Only widths up to 3 are accepted.
"""
import logging
import multiprocessing
from typing import List, Optional, Tuple

import defaults
from coding import SearchSpaceException
from coding.functions import popcount

SearchResult = Tuple[Optional[List[int]], int]


def distance_neighbors(n: int, l: int) -> List[List[int]]:
    """Return for every n-bit word all words at Hamming distance l, in increasing order."""
    size = 1 << n
    return [[w for w in range(size) if popcount(v ^ w) == l] for v in range(size)]


def search_from(first: int, n: int, l: int) -> SearchResult:
    """Return the lexicographically first witness starting with `first` (or None) and the number of visited nodes."""
    size = 1 << n
    neighbors = distance_neighbors(n, l)
    path = [first]
    used = [False] * size
    used[first] = True
    visited = 1

    # Iterative depth-first search; stack holds the next candidate index per depth.
    stack = [0]
    while stack:
        if len(path) == size:
            if popcount(path[-1] ^ path[0]) == l:
                return path, visited
            stack.pop()
            used[path.pop()] = False
            continue

        candidates = neighbors[path[-1]]
        position = stack[-1]
        while position < len(candidates) and used[candidates[position]]:
            position += 1

        if position == len(candidates):
            stack.pop()
            used[path.pop()] = False
            continue

        stack[-1] = position + 1
        word = candidates[position]
        used[word] = True
        path.append(word)
        stack.append(0)
        visited += 1

    return None, visited


def _search_from(args: Tuple[int, int, int]) -> SearchResult:
    """Unpack arguments for the worker pool."""
    return search_from(*args)


def search_constant_near1(n: int, l: int, workers: int = 1) -> Optional[List[int]]:
    """Return the lexicographically first counting sequence whose cyclic near-1 distance is always l, or None.

    The search runs one branch per first element; with more than one worker the
    branches are distributed over a process pool but the result does not depend on it.
    """
    if not isinstance(n, int) or not 2 <= n <= defaults.search_max_width:
        raise SearchSpaceException('exhaustive search is only feasible for n in 2..{0}, got {1!r}'.format(
            defaults.search_max_width, n))
    if not isinstance(l, int) or not 1 <= l <= n:
        raise SearchSpaceException('the distance l must be in 1..{0}, got {1!r}'.format(n, l))

    jobs = [(first, n, l) for first in range(1 << n)]
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_search_from, jobs)
    else:
        results = [_search_from(job) for job in jobs]

    search_constant_near1.properties = dict(visited=sum(visited for _, visited in results))
    logging.debug('Searched n=%d, l=%d with %d visited nodes', n, l, search_constant_near1.properties['visited'])

    for witness, _ in results:
        if witness is not None:
            return witness
    return None


search_constant_near1.properties = dict(visited=0)


def search_constant_even_near1(n: int, l: int, workers: int = 1) -> Optional[List[int]]:
    """Return a counting sequence with constant even cyclic near-1 distance l, or None if there is none."""
    if not isinstance(l, int) or l % 2 != 0:
        raise SearchSpaceException('the distance l must be even, got {0!r}'.format(l))
    return search_constant_near1(n, l, workers=workers)
