"""
Target spectrum families:
 * S{i}n        : {0, 1, ..., n} without i
 * S{i,j}n^m    : {0, 1, ..., n} with m doubled, without i and j
Also hosts the realizability lists proven for these families and the two
transport maps (shift and dual) that move realizers between families.
"""
from dataclasses import dataclass

from laplacian_realizer.spectra import (
    SpectrumMultiset, complement_spectrum, union_spectrum
)


class DescriptorError(Exception):
    """
    Malformed descriptor, or descriptor text that does not parse
    """
    def __init__(self, message, position=None):
        if position is not None:
            message = '{} (position {})'.format(message, position)
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class SingleMissing(object):
    i: int
    n: int

    def __post_init__(self):
        if not 0 < self.i <= self.n:
            raise DescriptorError('S{{{}}}{} needs 0 < i <= n'.format(
                self.i, self.n))

    @property
    def order(self):
        return self.n

    def __str__(self):
        return 'S{{{}}}{}'.format(self.i, self.n)


@dataclass(frozen=True)
class DoubledMissingPair(object):
    i: int
    j: int
    n: int
    m: int

    def __post_init__(self):
        if not 0 < self.i < self.j <= self.n:
            raise DescriptorError('{} needs 0 < i < j <= n'.format(self))
        if not 1 <= self.m <= self.n:
            raise DescriptorError('{} needs 1 <= m <= n'.format(self))
        if self.m in (self.i, self.j):
            raise DescriptorError('{} doubles a missing value'.format(self))

    @property
    def order(self):
        return self.n

    def __str__(self):
        return 'S{{{},{}}}{}^{}'.format(self.i, self.j, self.n, self.m)


@dataclass(frozen=True)
class ParityClass(object):
    residue: int
    verdict: str

    @property
    def compatible(self):
        return self.verdict == 'Compatible'


def parse_descriptor(text):
    """
    Read "S{i,j}n^m" or "S{i}n"
    """
    text = text.strip()
    pos = 0

    def expect(char):
        nonlocal pos
        if pos >= len(text) or text[pos] != char:
            raise DescriptorError('Expected {!r}'.format(char), pos)
        pos += 1

    def number():
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise DescriptorError('Expected a number', pos)
        return int(text[start:pos])

    expect('S')
    expect('{')
    i = number()
    j = None
    if pos < len(text) and text[pos] == ',':
        pos += 1
        j = number()
    expect('}')
    n = number()
    m = None
    if j is not None:
        expect('^')
        m = number()
    if pos != len(text):
        raise DescriptorError('Trailing characters', pos)

    if j is None:
        return SingleMissing(i, n)
    return DoubledMissingPair(i, j, n, m)


def format_descriptor(d):
    return str(d)


def expand(d):
    if isinstance(d, SingleMissing):
        values = [v for v in range(d.n + 1) if v != d.i]
    else:
        values = [v for v in range(d.n + 1) if v not in (d.i, d.j)]
        values.append(d.m)
    return SpectrumMultiset.from_values(values)


def recognize(s):
    """
    Inverse of expand, None when the multiset has neither shape
    """
    n = s.order
    if n < 1 or s.multiplicity(0) != 1 or s.entries[-1][0] > n:
        return None
    if any(k > 2 for _, k in s.entries):
        return None
    doubled = [v for v, k in s.entries if k == 2]
    present = {v for v, _ in s.entries}
    missing = [v for v in range(n + 1) if v not in present]

    if len(doubled) == 1 and len(missing) == 2:
        return DoubledMissingPair(missing[0], missing[1], n, doubled[0])
    if not doubled and len(missing) == 1:
        return SingleMissing(missing[0], n)
    return None


def parity_check(d):
    """
    n = 0, 3 mod 4: i + j and m share parity; n = 1, 2 mod 4: they differ
    """
    residue = d.n % 4
    same = (d.i + d.j) % 2 == d.m % 2
    ok = same if residue in (0, 3) else not same
    return ParityClass(residue, 'Compatible' if ok else 'Incompatible')


def shift(d):
    """
    Transport along (G u 2K1) v K1 for S{i}n and K1 v (K1 u G) otherwise
    """
    if isinstance(d, SingleMissing):
        return DoubledMissingPair(d.i + 1, d.n + 2, d.n + 3, 1)
    return DoubledMissingPair(d.i + 1, d.j + 1, d.n + 2, d.m + 1)


def dual(d):
    """
    Transport along complement(G) v K1
    """
    return DoubledMissingPair(
        d.n - d.j + 1, d.n - d.i + 1, d.n + 1, d.n + 1 - d.m)


def transform_consistency(d):
    """
    expand(dual(d)) must be the spectrum of the complement of G u K1
    """
    with_isolated = union_spectrum(SpectrumMultiset(((0, 1),)), expand(d))
    return expand(dual(d)) == complement_spectrum(with_isolated, d.n + 1)


def complement_step(d):
    """
    S{i}n with i >= 2 is realized by K1 v complement(H) exactly when H
    realizes S{n-i}(n-1)
    """
    if d.i < 2:
        raise DescriptorError('{} has no complement step'.format(d))
    return SingleMissing(d.n - d.i, d.n - 1)


def single_missing_realizable(i, n):
    """
    Realizable S{i}n with i < n, by n mod 4
    """
    if n == 1:
        return i == 1
    residue = n % 4
    if residue == 0:
        return i % 2 == 0 and 2 <= i <= n - 2
    if residue == 1:
        return i % 2 == 1 and i <= n - 2
    if residue == 2:
        return i % 2 == 1 and i <= n - 1
    return i % 2 == 0 and 2 <= i <= n - 1


def m1_realizable_list(n):
    """
    Values i such that S{i,n-1}n^1 is realizable (n >= 4)
    """
    residue = n % 4
    if residue == 0:
        return list(range(2, n - 1, 2))
    if residue == 1:
        return list(range(2, n - 2, 2))
    if residue == 2:
        return list(range(3, n - 2, 2))
    return list(range(3, n - 1, 2))


def m2_j_n_minus_2_list(n):
    """
    Values i > 1 such that S{i,n-2}n^2 is realizable (n >= 6)
    """
    residue = n % 4
    if residue == 0:
        return list(range(4, n - 3, 2))
    if residue == 1:
        return list(range(4, n - 2, 2))
    if residue == 2:
        return list(range(3, n - 2, 2))
    return list(range(3, n - 3, 2))


def m2_j_n_minus_1_value(n):
    """
    The single i > 1 with S{i,n-1}n^2 realizable, None below order 7
    """
    if n < 7:
        return None
    return n - 3 if n % 4 in (0, 3) else n - 2


def m_n_minus_1_j_value(n):
    """
    The single j with S{1,j}n^(n-1) realizable (n >= 6)
    """
    return 2 if n % 4 in (0, 1) else 3
