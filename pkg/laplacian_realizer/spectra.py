"""
Exact Laplacian spectra: integer characteristic polynomials, integral
spectrum extraction and the spectral calculus of complement, union and join.
No floating point is involved anywhere in this module.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from laplacian_realizer import logger


class SpectrumError(Exception):
    """
    A spectrum does not satisfy the domain of a transform
    """


@dataclass(frozen=True)
class SpectrumMultiset(object):
    """
    Sorted multiset of nonnegative integers, as (value, multiplicity) pairs
    """
    entries: tuple

    def __post_init__(self):
        previous = -1
        for value, multiplicity in self.entries:
            if not isinstance(value, int) or value <= previous:
                raise SpectrumError(
                    'Values must be increasing integers: {}'.format(
                        self.entries))
            if multiplicity < 1:
                raise SpectrumError('Multiplicities must be positive')
            previous = value
        if self.entries and self.entries[0][0] < 0:
            raise SpectrumError('Values must be nonnegative')

    @classmethod
    def from_values(cls, values):
        counts = Counter(int(v) for v in values)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text):
        """
        Read the "0,1^2,4" text form
        """
        values = []
        for token in text.strip().split(','):
            token = token.strip()
            value, _, multiplicity = token.partition('^')
            try:
                values += [int(value)] * int(multiplicity or 1)
            except ValueError:
                raise SpectrumError('Invalid spectrum token {!r}'.format(
                    token))
        return cls.from_values(values)

    def values(self):
        return [v for v, k in self.entries for _ in range(k)]

    @property
    def order(self):
        return sum(k for _, k in self.entries)

    @property
    def total(self):
        return sum(v * k for v, k in self.entries)

    @property
    def square_total(self):
        return sum(v * v * k for v, k in self.entries)

    def multiplicity(self, value):
        return dict(self.entries).get(value, 0)

    def __contains__(self, value):
        return self.multiplicity(value) > 0

    def __str__(self):
        return ','.join(
            str(v) if k == 1 else '{}^{}'.format(v, k)
            for v, k in self.entries)


@dataclass(frozen=True)
class NotIntegral(object):
    """
    The characteristic polynomial kept a factor without integer roots
    """
    quotient_degree: int

    def __str__(self):
        return 'NotIntegral(quotient degree {})'.format(self.quotient_degree)


@dataclass(frozen=True)
class CharPoly(object):
    """
    det(xI - L) with integer coefficients, leading coefficient first
    """
    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def evaluate(self, x):
        result = 0
        for c in self.coefficients:
            result = result * x + c
        return result

    def deflate(self, root):
        """
        Synthetic division by (x - root), returns (quotient, remainder)
        """
        quotient = []
        carry = 0
        for c in self.coefficients:
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return CharPoly(tuple(quotient)), remainder

    def __str__(self):
        terms = []
        for power, c in zip(range(self.degree, -1, -1), self.coefficients):
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if power == 0:
                body = str(c)
            else:
                body = 'x' if power == 1 else 'x^{}'.format(power)
                if c != 1:
                    body = '{}{}'.format(c, body)
            terms.append((sign, body))
        if not terms:
            return '0'
        first_sign, first = terms[0]
        out = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            out += ' {} {}'.format(sign, body)
        return out


def laplacian_matrix(g):
    matrix = []
    for v, row in enumerate(g.rows):
        line = [-(row >> u & 1) for u in range(g.n)]
        line[v] = g.degree(v)
        matrix.append(line)
    return matrix


def _fits_int64(n):
    # Entries of the Faddeev-LeVerrier iterates stay below 2 n^(n+1) 2^n
    return 2 * n ** (n + 1) * 2 ** n < 2 ** 63


def _faddeev_leverrier(matrix):
    n = len(matrix)
    a = np.array(matrix, dtype=np.int64)
    identity = np.eye(n, dtype=np.int64)
    coefficients = [1]
    m = identity
    for k in range(1, n + 1):
        am = a @ m
        c = -int(np.trace(am)) // k
        coefficients.append(c)
        m = am + c * identity
    return coefficients


def bareiss_determinant(matrix):
    """
    Fraction-free Gaussian elimination on an integer matrix
    """
    m = [list(row) for row in matrix]
    n = len(m)
    sign, previous = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // previous
        previous = pivot
    return sign * m[n - 1][n - 1]


def _bareiss_interpolation(matrix):
    """
    Sample det(kI - L) at k = 0..n and interpolate exactly
    """
    n = len(matrix)
    samples = []
    for k in range(n + 1):
        shifted = [
            [(k if u == v else 0) - matrix[v][u] for u in range(n)]
            for v in range(n)
        ]
        samples.append(bareiss_determinant(shifted))

    # Newton forward differences on the nodes 0..n
    differences = []
    level = samples
    while level:
        differences.append(level[0])
        level = [b - a for a, b in zip(level, level[1:])]

    # Sum of delta^k y_0 * x(x-1)...(x-k+1) / k!, low degree first
    total = [Fraction(0)] * (n + 1)
    falling = [Fraction(1)]
    factorial = 1
    for k, delta in enumerate(differences):
        if k:
            factorial *= k
            falling = [Fraction(0)] + falling
            for p in range(len(falling) - 1):
                falling[p] -= (k - 1) * falling[p + 1]
        for p, c in enumerate(falling):
            total[p] += delta * c / factorial

    if any(c.denominator != 1 for c in total):
        raise SpectrumError('Interpolation produced a non-integer')
    return [int(c) for c in reversed(total)]


def laplacian_char_poly(g, engine=None):
    """
    Exact characteristic polynomial of the Laplacian of g
    engine: None picks int64 Faddeev-LeVerrier when safe, else Bareiss
    """
    matrix = laplacian_matrix(g)
    if engine is None:
        engine = 'leverrier' if _fits_int64(g.n) else 'bareiss'
    if engine == 'leverrier':
        if not _fits_int64(g.n):
            raise SpectrumError(
                'Order {} may overflow the int64 engine'.format(g.n))
        coefficients = _faddeev_leverrier(matrix)
    elif engine == 'bareiss':
        coefficients = _bareiss_interpolation(matrix)
    else:
        raise SpectrumError('Unknown engine {}'.format(engine))
    return CharPoly(tuple(coefficients))


def integral_roots(poly, bound):
    """
    Deflate poly by the candidate roots 0..bound, increasing
    Returns (roots with multiplicity, remaining quotient)
    """
    roots = []
    for k in range(bound + 1):
        if poly.degree == 0:
            break
        while poly.degree > 0:
            quotient, remainder = poly.deflate(k)
            if remainder != 0:
                break
            roots.append(k)
            poly = quotient
    return roots, poly


def integer_spectrum(g):
    """
    SpectrumMultiset when every Laplacian eigenvalue is an integer,
    NotIntegral otherwise. Roots never exceed the order.
    """
    roots, rest = integral_roots(laplacian_char_poly(g), g.n)
    if rest.degree > 0:
        return NotIntegral(rest.degree)
    return SpectrumMultiset.from_values(roots)


def trace_moments(g):
    """
    (sum of eigenvalues, sum of squared eigenvalues), from degrees alone
    """
    degrees = g.degrees()
    total = sum(degrees)
    return total, sum(d * d for d in degrees) + total


def _require_zero(s):
    if 0 not in s:
        raise SpectrumError('{} is not a graph spectrum (no 0)'.format(s))


def complement_spectrum(s, n):
    _require_zero(s)
    if s.order != n:
        raise SpectrumError(
            'Spectrum {} has order {}, expected {}'.format(s, s.order, n))
    values = s.values()
    if values[-1] > n:
        raise SpectrumError('{} exceeds the bound {}'.format(s, n))
    return SpectrumMultiset.from_values([0] + [n - v for v in values[1:]])


def union_spectrum(sg, sh):
    return SpectrumMultiset.from_values(sg.values() + sh.values())


def join_spectrum(sg, sh):
    _require_zero(sg)
    _require_zero(sh)
    n, m = sg.order, sh.order
    values = [0]
    values += [m + v for v in sg.values()[1:]]
    values += [n + v for v in sh.values()[1:]]
    values.append(n + m)
    logger.debug('Join spectrum of orders {} and {}'.format(n, m))
    return SpectrumMultiset.from_values(values)


def algebraic_connectivity(s):
    values = s.values()
    if len(values) < 2:
        raise SpectrumError('Algebraic connectivity needs order >= 2')
    return values[1]


def spectral_radius(s):
    return s.entries[-1][0]
