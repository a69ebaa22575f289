"""Partitions of nonnegative integers.

A partition is a weakly decreasing tuple of positive integers.  Every basis
in this package is indexed by partitions in reverse-lexicographic order
(largest part first, compared as tuples), fixed once and for all so that
matrices and golden files are reproducible.
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def _partitions_bounded(n, max_part):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n, max_part=None):
    """All partitions of n in reverse-lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    >>> partitions_of(0)
    [()]
    """
    if n < 0:
        return []
    if max_part is None:
        max_part = n
    return list(_partitions_bounded(n, max_part))


@lru_cache(maxsize=None)
def _count_bounded(n, max_part):
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    total = 0
    for first in range(min(n, max_part), 0, -1):
        total += _count_bounded(n - first, first)
    return total


def partition_count(n):
    """The partition function p(n); zero for negative n.

    >>> [partition_count(n) for n in range(10)]
    [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    >>> partition_count(-1)
    0
    """
    if n < 0:
        return 0
    return _count_bounded(n, n)


def is_partition(parts):
    """Whether a tuple is weakly decreasing with positive entries."""
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def merge(p, q):
    """The partition whose parts are the multiset union of p and q.

    >>> merge((2, 1), (3, 1))
    (3, 2, 1, 1)
    """
    return tuple(sorted(p + q, reverse=True))


def partition_index(omega):
    """Position of a partition in partitions_of(sum(omega))."""
    return partitions_of(sum(omega)).index(tuple(omega))
