"""
Decide whether a descriptor is Laplacian realizable and, when it is,
produce a construction certificate.

Every certificate is evaluated and its exact spectrum compared with the
target before it is handed out. Targets the constructions cannot reach
fall back to exhaustive search when their order fits the search budget.
"""
from dataclasses import dataclass

from laplacian_realizer import logger
from laplacian_realizer.cache import OracleCache
from laplacian_realizer.descriptors import (
    DoubledMissingPair, SingleMissing, dual, expand, m1_realizable_list,
    m2_j_n_minus_1_value, m2_j_n_minus_2_list, m_n_minus_1_j_value,
    parity_check, shift, single_missing_realizable
)
from laplacian_realizer.expression import (
    Complement, Join, K, Oracle, P, Union, empty, evaluate, format_expr,
    order
)
from laplacian_realizer.graph import decode_graph6
from laplacian_realizer.search import (
    DEFAULT_BUDGET, KNOWN_CONNECTED_COUNTS, check_budget, find_realizers,
    is_prime
)
from laplacian_realizer.spectra import integer_spectrum


@dataclass(frozen=True)
class Realizable(object):
    certificate: object
    alternatives: tuple = ()
    notes: tuple = ()

    outcome = 'Realizable'


@dataclass(frozen=True)
class NotRealizable(object):
    reason: str
    notes: tuple = ()

    outcome = 'NotRealizable'


@dataclass(frozen=True)
class Unknown(object):
    tag: str
    notes: tuple = ()

    outcome = 'Unknown'


class NotFound(object):
    """
    Exhaustive search proved that no connected graph has the spectrum
    """
    def __repr__(self):
        return 'NotFound'


NOT_FOUND = NotFound()


@dataclass(frozen=True)
class SearchIncomplete(object):
    """
    The enumeration missed classes, so an empty result proves nothing
    """
    order: int
    enumerated: int
    expected: int = None

    def __str__(self):
        return 'search enumerated {} of {} classes at order {}'.format(
            self.enumerated, self.expected, self.order)


def shift_certificate(d, certificate):
    """
    Realizer of shift(d) built from a realizer of d
    """
    if isinstance(d, SingleMissing):
        return Join(Union(certificate, empty(2)), K(1))
    return Join(K(1), Union(K(1), certificate))


def dual_certificate(certificate):
    """
    Realizer of dual(d) built from a realizer of d
    """
    return Join(Complement(certificate), K(1))


class Realizer(object):
    """
    Theorem dispatcher with a search backed oracle
    Verdicts are memoized per instance
    """

    def __init__(self, budget=DEFAULT_BUDGET, cache=None,
                 strategy='augment', workers=1, progress=False):
        self.budget = budget
        self.cache = cache if cache is not None else OracleCache()
        self.strategy = strategy
        self.workers = workers
        self.progress = progress
        self._verdicts = {}

    # Oracle

    def resolve_oracle(self, d):
        """
        A canonical connected realizer of d, NOT_FOUND, or SearchIncomplete
        when the enumeration fell short of the known class count
        Raises SearchBudgetError when d is above the search budget and the
        cache has no answer
        """
        record = self.cache.lookup(d)
        if record is not None:
            if record.found:
                return decode_graph6(record.graph6)
            if record.exhausted >= d.n:
                return NOT_FOUND

        check_budget(d.n, self.budget)
        logger.debug('Searching order {} for {}'.format(d.n, d))
        report = find_realizers(
            expand(d), d.n, self.budget, self.strategy, self.workers,
            self.progress)
        if report.found:
            g = decode_graph6(report.found[0].graph6)
            self.cache.store_found(d, g)
            return g
        if not report.exhausted:
            return SearchIncomplete(
                d.n, report.enumerated, KNOWN_CONNECTED_COUNTS.get(d.n))
        self.cache.store_empty(d, d.n)
        return NOT_FOUND

    def resolve_graph(self, d):
        g = self.resolve_oracle(d)
        if g is NOT_FOUND or isinstance(g, SearchIncomplete):
            return None
        return g

    def certify(self, certificate, d):
        """
        Evaluate certificate and compare its exact spectrum with d
        """
        if order(certificate) != d.n:
            return False
        g = evaluate(certificate, self.resolve_graph)
        if not g.is_connected():
            return False
        return integer_spectrum(g) == expand(d)

    # Dispatch

    def decide(self, d):
        verdict = self._verdicts.get(d)
        if verdict is None:
            if isinstance(d, SingleMissing):
                verdict = self._decide_single(d)
            else:
                verdict = self._decide_pair(d)
            logger.debug('{} -> {}'.format(d, verdict.outcome))
            self._verdicts[d] = verdict
        return verdict

    def _search(self, d, fallback):
        """
        Replace an undecided verdict by a search result within budget
        """
        if d.n > self.budget:
            return fallback
        result = self.resolve_oracle(d)
        if isinstance(result, SearchIncomplete):
            logger.warning('{}: {}'.format(d, result))
            return Unknown(fallback.tag, fallback.notes + (str(result),))
        if result is NOT_FOUND:
            return NotRealizable('exhaustive search', fallback.notes)
        return Realizable(
            Oracle(d), notes=fallback.notes + ('found by exhaustive search',))

    def _branches(self, d, theorem, branches, notes=()):
        """
        Try every construction branch of a theorem
        branches: (label, sub descriptors, builder) triples
        Realizable when one branch certifies, otherwise the most informative
        failure: Unknown beats NotRealizable(theorem)
        """
        notes = list(notes)
        certified = []
        unknown = None
        for label, subs, build in branches:
            verdicts = [self.decide(s) for s in subs]
            failed = [v for v in verdicts if not isinstance(v, Realizable)]
            if failed:
                unknown = unknown or next(
                    (v for v in failed if isinstance(v, Unknown)), None)
                continue
            certificate = build(*[v.certificate for v in verdicts])
            if order(certificate) != d.n:
                notes.append('branch {} has order {}, rejected'.format(
                    label, order(certificate)))
                logger.info('Branch {} for {} has the wrong order'.format(
                    label, d))
                continue
            if self.certify(certificate, d):
                certified.append(certificate)
            else:
                logger.error('Branch {} failed to certify {}: {}'.format(
                    label, d, format_expr(certificate)))
                notes.append('branch {} failed verification'.format(label))

        if certified:
            return Realizable(certified[0], tuple(certified[1:]), tuple(notes))
        if unknown is not None:
            return Unknown(unknown.tag, tuple(notes) + unknown.notes)
        return NotRealizable(theorem, tuple(notes))

    def _within(self, verdict, d, iff, tag):
        # Outside the range of an iff theorem a failed construction says
        # nothing, so search decides
        if isinstance(verdict, Realizable) or iff:
            return verdict
        return self._search(d, Unknown(tag, verdict.notes))

    # S{i}n

    def _decide_single(self, d):
        i, n = d.i, d.n
        if n == 1:
            return Realizable(K(1))
        if i == n:
            return self._search(d, Unknown('S_nn'))
        if not single_missing_realizable(i, n):
            return NotRealizable('edge count parity of S{i}n')
        return self.construct_single(i, n)

    def construct_single(self, i, n):
        d = SingleMissing(i, n)
        if n == 2:
            return Realizable(K(2))

        if i >= 2:
            return self._branches(d, 'complement step', [(
                'K1 v complement(H)',
                [SingleMissing(n - i, n - 1)],
                lambda h: Join(K(1), Complement(h)),
            )])

        branches = []
        if n >= 5:
            branches.append((
                '2K1 v (K1 u G1)',
                [SingleMissing(n - 4, n - 3)],
                lambda g1: Join(empty(2), Union(K(1), g1)),
            ))
        branches.append((
            'K1 v H',
            [SingleMissing(n - 1, n - 1)],
            lambda h: Join(K(1), h),
        ))
        verdict = self._branches(d, 'S{1}n construction', branches)
        return self._within(verdict, d, n >= 6, 'S_nn')

    # S{i,j}n^m

    def _decide_pair(self, d):
        i, j, n, m = d.i, d.j, d.n, d.m

        if not parity_check(d).compatible:
            return NotRealizable('parity of i + j and m')

        if j == n:
            return self._decide_missing_n(d)
        if m == 1:
            if j < n - 1:
                return NotRealizable('m = 1 needs j = n - 1')
            if i not in m1_realizable_list(n):
                return NotRealizable('m = 1 list')
            return self.construct_m1(i, n)
        if m == 2:
            return self._decide_m2(d)
        if m == n:
            if i != 1:
                return NotRealizable('double n excludes eigenvalue 1')
            return self.construct_part1(d)
        if m == n - 1:
            if i > 2:
                return NotRealizable('m = n - 1 needs i in {1, 2}')
            if i == 1:
                if n >= 6 and j != m_n_minus_1_j_value(n):
                    return NotRealizable('m = n - 1 selects j by n mod 4')
                return self.construct_part1(d)
        return self._decide_by_duality(d)

    def _decide_missing_n(self, d):
        notes = []
        if is_prime(d.n):
            notes.append('n = {} is prime'.format(d.n))
        if d.m == 1:
            if d.n < 9:
                notes.append('S{i,n}n^1 realizers need n >= 9')
            return self._search(d, Unknown('S_i_n_double1', tuple(notes)))
        return self._search(d, Unknown('S_i_n_any', tuple(notes)))

    def _decide_m2(self, d):
        i, j, n = d.i, d.j, d.n
        if i == 1:
            if n < 6:
                return self._search(d, Unknown('S_1j_double2'))
            notes = ()
            if is_prime(n - 1):
                notes = ('n = {} = p + 1 with p prime'.format(n),)
            f = DoubledMissingPair(j - 1, n - 1, n - 1, 1)
            verdict = self.decide(f)
            if isinstance(verdict, Realizable):
                return self.construct_m2(i, j, n)
            if isinstance(verdict, NotRealizable):
                return NotRealizable(
                    'i = 1 reduction to {}'.format(f), notes)
            return self._search(d, Unknown('S_1j_double2', notes))

        if j <= n - 3:
            return NotRealizable('m = 2 with i > 1 needs j > n - 3')
        if j == n - 2:
            if n < 6:
                return self._search(d, Unknown('small order'))
            if i not in m2_j_n_minus_2_list(n):
                return NotRealizable('m = 2, j = n - 2 list')
            return self.construct_m2(i, j, n)
        if n < 7:
            return self._search(d, Unknown('small order'))
        if i != m2_j_n_minus_1_value(n):
            return NotRealizable('m = 2, j = n - 1 value')
        return self.construct_m2(i, j, n)

    def _decide_by_duality(self, d):
        """
        d = dual(p) with p one order below; p realizable gives d, and for
        i >= 2 the converse holds too
        """
        p = DoubledMissingPair(d.n - d.j, d.n - d.i, d.n - 1, d.n - d.m)
        verdict = self.decide(p)
        if isinstance(verdict, Realizable):
            certificate = dual_certificate(verdict.certificate)
            if self.certify(certificate, d):
                return Realizable(certificate, notes=(
                    'complement of a realizer of {} joined with K1'.format(
                        p),))
            logger.error('Duality certificate failed for {}'.format(d))
        if isinstance(verdict, NotRealizable) and d.i >= 2:
            return NotRealizable('duality with {}'.format(p))
        return self._search(d, Unknown('uncovered-m'))

    # Constructions

    def construct_m1(self, i, n):
        """
        S{i,n-1}n^1
        """
        d = DoubledMissingPair(i, n - 1, n, 1)
        branches = []
        if i == n - 2 and n >= 6:
            branches.append((
                'K1 v (complement(P3) u X)',
                [SingleMissing(2, n - 4)],
                lambda x: Join(K(1), Union(Complement(P(3)), x)),
            ))
        branches.append((
            '(G u 2K1) v K1',
            [SingleMissing(i - 1, n - 3)],
            lambda g: shift_certificate(SingleMissing(i - 1, n - 3), g),
        ))
        verdict = self._branches(d, 'm = 1 construction', branches)
        return self._within(verdict, d, n >= 4, 'S_nn')

    def construct_m2(self, i, j, n):
        """
        S{i,j}n^2 for j = n - 2, j = n - 1 and the i = 1 reduction
        """
        d = DoubledMissingPair(i, j, n, 2)
        if i == 1:
            f = DoubledMissingPair(j - 1, n - 1, n - 1, 1)
            return self._branches(d, 'i = 1 reduction', [(
                'K1 v F', [f], lambda g: Join(K(1), g))])

        if j == n - 2:
            h = DoubledMissingPair(i - 1, n - 3, n - 2, 1)
            verdict = self._branches(d, 'm = 2, j = n - 2 construction', [(
                'K1 v (K1 u H)', [h], lambda g: shift_certificate(h, g))])
            return self._within(verdict, d, n >= 6, 'small order')

        if i == n - 2:
            verdict = self._branches(d, 'm = 2, j = n - 1 construction', [(
                'K1 v (P3 u X)',
                [SingleMissing(3, n - 4)],
                lambda x: Join(K(1), Union(P(3), x)),
            )])
            return self._within(verdict, d, n >= 7, 'small order')

        def chain(h1):
            inner = Join(K(1), Union(empty(2), h1))
            return Join(K(1), Union(K(2), inner))

        branches = []
        if n >= 7:
            branches.append(('K1 v (K2 u (K1 v (2K1 u H1)))',
                             [SingleMissing(1, n - 6)], chain))
        if n >= 6:
            # H1 of order n - 6 and of order n - 5 are both tried
            branches.append(('K1 v (K2 u (K1 v (2K1 u H1))), H1 of S{1}(n-5)',
                             [SingleMissing(1, n - 5)], chain))
            f = DoubledMissingPair(2, n - 2, n - 2, n - 3)
            branches.append((
                'K1 v (K1 u complement(F))',
                [f],
                lambda g: Join(K(1), Union(K(1), Complement(g))),
            ))
        verdict = self._branches(d, 'm = 2, j = n - 1 construction', branches)
        return self._within(verdict, d, n >= 7, 'small order')

    def construct_part1(self, d):
        """
        S{1}n, and S{1,j}n^m for m = n or m = n - 1
        """
        if isinstance(d, SingleMissing):
            return self.construct_single(d.i, d.n)
        if d.m == d.n:
            return self._construct_double_n(d)
        return self._construct_double_n_minus_1(d)

    def _construct_double_n(self, d):
        j, n = d.j, d.n
        branches = []
        if j == 2:
            if n >= 5:
                branches.append((
                    'P3 v (K1 u H)',
                    [SingleMissing(n - 5, n - 4)],
                    lambda h: Join(P(3), Union(K(1), h)),
                ))
            branches.append((
                'K2 v H',
                [SingleMissing(n - 2, n - 2)],
                lambda h: Join(K(2), h),
            ))
        elif j <= n - 2:
            branches.append((
                'K2 v (K1 u H)',
                [SingleMissing(j - 2, n - 3)],
                lambda h: Join(K(2), Union(K(1), h)),
            ))
        else:
            if n >= 6:
                branches.append((
                    'K2 v (K2 u H)',
                    [SingleMissing(2, n - 4)],
                    lambda h: Join(K(2), Union(K(2), h)),
                ))
            branches.append((
                'K2 v (K1 u H)',
                [SingleMissing(n - 3, n - 3)],
                lambda h: Join(K(2), Union(K(1), h)),
            ))
        verdict = self._branches(d, 'm = n construction', branches)
        return self._within(verdict, d, n >= 5, 'S_nn')

    def _construct_double_n_minus_1(self, d):
        j, n = d.j, d.n
        branches = []
        if j == 2 and n >= 7:
            branches.append((
                '(K1 u K2) v (K1 u H)',
                [SingleMissing(n - 6, n - 4)],
                lambda h: Join(Union(K(1), K(2)), Union(K(1), h)),
            ))
        if j == 3 and n >= 6:
            branches.append((
                '2K1 v (K1 u H)',
                [DoubledMissingPair(1, n - 4, n - 3, n - 3)],
                lambda h: Join(empty(2), Union(K(1), h)),
            ))
            branches.append((
                'K1 v F',
                [DoubledMissingPair(2, n - 1, n - 1, n - 2)],
                lambda f: Join(K(1), f),
            ))
        verdict = self._branches(d, 'm = n - 1 construction', branches)
        return self._within(verdict, d, n >= 6, 'small order')


def transport_checks(realizer, d, verdict):
    """
    Check the shift and duality constructions built on a certified d
    Returns a list of (label, holds)
    """
    results = []
    certificate = verdict.certificate
    shifted = shift(d)
    results.append(('shift {} -> {}'.format(d, shifted), realizer.certify(
        shift_certificate(d, certificate), shifted)))
    if isinstance(d, DoubledMissingPair):
        image = dual(d)
        results.append(('dual {} -> {}'.format(d, image), realizer.certify(
            dual_certificate(certificate), image)))
    return results
