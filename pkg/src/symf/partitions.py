"""Integer partitions.

Partitions index everything else in this package: symmetric function
basis elements, conjugacy classes of symmetric groups, irreducible
characters.  A partition is stored as a weakly decreasing tuple of
positive integers, so it is immutable and hashable and can be used as a
dictionary key directly.

Whenever the partitions of n are listed, they appear in reverse
lexicographic order, from (n) down to (1,...,1).  Every module relies on
that one canonical order; nothing ever depends on hash order.
"""

from functools import lru_cache


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        prev = None
        for a in parts:
            if not isinstance(a, int) or isinstance(a, bool) or a <= 0:
                raise ValueError("partition parts must be positive integers, got %r" % (a,))
            if prev is not None and a > prev:
                raise ValueError("partition parts must be weakly decreasing, got %r" % (parts,))
            prev = a
        return tuple.__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        """Map each part size to the number of times it occurs."""
        mult = {}
        for a in self:
            mult[a] = mult.get(a, 0) + 1
        return mult

    def conjugate(self):
        """The transposed partition, read off column lengths."""
        if not self:
            return Partition()
        cols = [0] * self[0]
        for a in self:
            for j in range(a):
                cols[j] += 1
        return Partition(cols)

    def has_even_columns(self):
        """True if every column of the diagram has even length.

        Equivalently, every part of the conjugate is even.  The empty
        partition qualifies.
        """
        return all(c % 2 == 0 for c in self.conjugate())

    def __repr__(self):
        return "Partition(%r)" % (list(self),)

    def __str__(self):
        return "[" + ",".join(str(a) for a in self) + "]"


@lru_cache(maxsize=None)
def _partitions_of(n, largest):
    # All partitions of n with parts <= largest, reverse lexicographic.
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_of(n, max_part=None):
    """All partitions of n in reverse lexicographic order.

    partitions_of(0) is the one-element list holding the empty
    partition.  An optional max_part bounds the largest part.  The list
    is a fresh copy; the memoized enumeration stays internal.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if max_part is None:
        max_part = n
    return list(_partitions_of(n, max(max_part, 0)))


def partition_count(n):
    """Number of partitions of n, by Euler's pentagonal number recurrence.

    Independent of the enumeration above, which is exactly why the test
    suite compares the two.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    counts = _pentagonal_counts(n)
    return counts[n]


@lru_cache(maxsize=None)
def _pentagonal_counts(n):
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 else -1
            if g1 <= m:
                total += sign * counts[m - g1]
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts.append(total)
    return counts


@lru_cache(maxsize=None)
def z_of(mu):
    """The centralizer order z_mu = prod_i i^{m_i} m_i! for cycle type mu.

    n!/z_mu is the size of the conjugacy class of cycle type mu, and
    1/z_mu is the weight attached to p_mu all over this package.
    """
    z = 1
    mult = {}
    for a in mu:
        mult[a] = mult.get(a, 0) + 1
    for a, m in mult.items():
        z *= a ** m
        for i in range(2, m + 1):
            z *= i
    return z


def merge(mu, nu):
    """Multiset union of two partitions, the p-basis product index."""
    return Partition(sorted(tuple(mu) + tuple(nu), reverse=True))
