"""
Verification suites: exhaustive and randomized cross-checks of the
spectral calculus, the realizability lists, the conjectured empty
families and the transport constructions.
"""
from dataclasses import dataclass

import networkx as nx
import numpy as np

from laplacian_realizer import logger
from laplacian_realizer.descriptors import (
    DoubledMissingPair, SingleMissing, expand, m1_realizable_list,
    m2_j_n_minus_1_value, m2_j_n_minus_2_list, parity_check,
    transform_consistency
)
from laplacian_realizer.expression import (
    Complement, Join, Union, evaluate, family
)
from laplacian_realizer.graph import (
    complement, decode_graph6, is_join, join, union
)
from laplacian_realizer.realizer import Realizable, Realizer, transport_checks
from laplacian_realizer.search import (
    KNOWN_CONNECTED_COUNTS, conjecture_targets, enumerate_connected,
    find_realizers_many, integral_census, scan_conjecture,
    verify_structural_props
)
from laplacian_realizer.spectra import (
    complement_spectrum, integer_spectrum, join_spectrum,
    laplacian_char_poly, union_spectrum
)
from laplacian_realizer.tables import TABLES, check_table

SUITES = ('spectral-calculus', 'm1-lists', 'm2-lists', 'conjectures',
          'structural', 'parity', 'transport', 'enumeration', 'tables')


@dataclass
class CheckResult(object):
    suite: str
    name: str
    passed: bool
    detail: str = ''

    def record(self):
        return 'suite={} check={} status={} detail={}'.format(
            self.suite, self.name, 'pass' if self.passed else 'fail',
            self.detail)

    def __str__(self):
        out = '{} {}/{}'.format(
            'PASS' if self.passed else 'FAIL', self.suite, self.name)
        if self.detail:
            out += ': ' + self.detail
        return out


def _pairs(found):
    return {(d.i, d.j) for d in found}


def _hits(targets, n, budget, workers):
    """
    Descriptors among targets with at least one connected realizer
    """
    spectra = {expand(d): d for d in targets}
    reports = find_realizers_many(
        list(spectra), n, budget=budget, workers=workers)
    return [spectra[s] for s, report in reports.items() if report.found], \
        reports


def _root_multiplicity(poly, root):
    count = 0
    while poly.degree > 0:
        quotient, remainder = poly.deflate(root)
        if remainder:
            break
        count += 1
        poly = quotient
    return count


class Verifier(object):
    """
    Runs the named suites up to order max_n
    """

    def __init__(self, max_n=8, workers=1, samples=1000, seed=0,
                 realizer=None):
        self.max_n = max_n
        self.workers = workers
        self.samples = samples
        self.rng = np.random.default_rng(seed)
        self.realizer = realizer or Realizer(budget=max_n, workers=workers)

    def run(self, suite='all'):
        names = SUITES if suite == 'all' else (suite,)
        results = []
        for name in names:
            method = getattr(self, 'suite_' + name.replace('-', '_'))
            suite_results = method()
            for result in suite_results:
                if not result.passed:
                    logger.error(str(result))
            results += suite_results
        return results

    # spectral-calculus

    def random_integral_expr(self, budget):
        """
        Random expression over Laplacian integral families, order <= budget
        """
        if budget >= 2 and self.rng.random() < 0.5:
            left = int(self.rng.integers(1, budget))
            right = int(self.rng.integers(1, budget - left + 1))
            a = self.random_integral_expr(left)
            b = self.random_integral_expr(right)
            op = int(self.rng.integers(3))
            if op == 0:
                return Union(a, b)
            if op == 1:
                return Join(a, b)
            return Complement(Union(a, b))
        n = int(self.rng.integers(1, budget + 1))
        tag = ('K', 'E', 'A', 'S', 'Kpq')[int(self.rng.integers(5))]
        if tag == 'S' and n < 2:
            tag = 'K'
        if tag == 'Kpq':
            if n < 2:
                return family('E', n)
            p = int(self.rng.integers(1, n))
            return family('Kpq', p, n - p)
        return family(tag, n)

    def suite_spectral_calculus(self):
        failures = []
        half = max(1, min(self.max_n, 10) // 2)
        for _ in range(self.samples):
            g = evaluate(self.random_integral_expr(half))
            h = evaluate(self.random_integral_expr(half))
            sg, sh = integer_spectrum(g), integer_spectrum(h)
            checks = [
                ('union', union_spectrum(sg, sh), union(g, h)),
                ('join', join_spectrum(sg, sh), join(g, h)),
                ('complement', complement_spectrum(sg, g.n), complement(g)),
            ]
            for label, predicted, composed in checks:
                if integer_spectrum(composed) != predicted:
                    failures.append(label)
        results = [CheckResult(
            'spectral-calculus', 'random-pairs', not failures,
            '{} pairs, {} failures'.format(self.samples, len(failures)))]

        bad = []
        for n in range(2, min(self.max_n, 7) + 1):
            for g in enumerate_connected(n, budget=n):
                has_n = laplacian_char_poly(g).evaluate(n) == 0
                if has_n != is_join(g):
                    bad.append(g)
        results.append(CheckResult(
            'spectral-calculus', 'join-criterion', not bad,
            'n <= {}, {} mismatches'.format(min(self.max_n, 7), len(bad))))
        return results

    # m1-lists / m2-lists

    def suite_m1_lists(self):
        results = []
        for n in range(4, self.max_n + 1):
            targets = [
                DoubledMissingPair(i, j, n, 1)
                for j in range(3, n + 1) for i in range(2, j)
            ]
            found, _ = _hits(targets, n, self.max_n, self.workers)
            expected = {(i, n - 1) for i in m1_realizable_list(n)}
            decided = {
                (d.i, d.j) for d in targets
                if isinstance(self.realizer.decide(d), Realizable)
            }
            results.append(CheckResult(
                'm1-lists', 'n={}'.format(n),
                _pairs(found) == expected == decided,
                'search {} list {} decide {}'.format(
                    sorted(_pairs(found)), sorted(expected),
                    sorted(decided))))
        return results

    @staticmethod
    def expected_m2(n):
        if n == 4:
            return {(1, 3)}
        if n == 5:
            return {(1, 4)}
        expected = {(i, n - 2) for i in m2_j_n_minus_2_list(n)}
        value = m2_j_n_minus_1_value(n)
        if value is not None:
            expected.add((value, n - 1))
        return expected

    def suite_m2_lists(self):
        results = []
        for n in range(4, self.max_n + 1):
            targets = [
                DoubledMissingPair(i, j, n, 2)
                for j in range(3, n + 1) for i in range(1, j) if i != 2
            ]
            found, _ = _hits(targets, n, self.max_n, self.workers)
            expected = self.expected_m2(n)
            decided = {
                (d.i, d.j) for d in targets
                if isinstance(self.realizer.decide(d), Realizable)
            }
            results.append(CheckResult(
                'm2-lists', 'n={}'.format(n),
                _pairs(found) == expected == decided,
                'search {} list {} decide {}'.format(
                    sorted(_pairs(found)), sorted(expected),
                    sorted(decided))))
        return results

    # conjectures

    def suite_conjectures(self):
        results = []
        for n in range(2, self.max_n + 1):
            tags = ['S_nn']
            if n >= 3:
                tags.append('S_i_n_double1')
            if n >= 6:
                tags.append('S_1j_double2')
            for tag in tags:
                report = scan_conjecture(
                    tag, n, budget=self.max_n, workers=self.workers)
                for hit in report.found:
                    d = next(d for d in conjecture_targets(tag, n)
                             if str(expand(d)) == hit.spectrum)
                    props = verify_structural_props(
                        decode_graph6(hit.graph6), d)
                    logger.error('Counterexample {} for {}: {}'.format(
                        hit.graph6, tag, props))
                results.append(CheckResult(
                    'conjectures', '{} n={}'.format(tag, n),
                    report.exhausted and not report.found,
                    'enumerated {} found {}'.format(
                        report.enumerated, len(report.found))))
        return results

    # structural

    def suite_structural(self):
        results = []
        top = min(self.max_n, 7)
        bad = []
        for n in range(2, top + 1):
            for g in enumerate_connected(n, budget=n):
                poly = laplacian_char_poly(g)
                if _root_multiplicity(poly, n) >= 2 and poly.evaluate(1) == 0:
                    bad.append(g)
        results.append(CheckResult(
            'structural', 'double-n-excludes-1', not bad,
            'n <= {}, {} violations'.format(top, len(bad))))

        for n in range(4, self.max_n + 1):
            targets = [DoubledMissingPair(i, n - 1, n, 1)
                       for i in m1_realizable_list(n)]
            _, reports = _hits(targets, n, self.max_n, self.workers)
            failed = []
            for d in targets:
                for hit in reports[expand(d)].found:
                    props = dict(verify_structural_props(
                        decode_graph6(hit.graph6), d))
                    if not props['pendants>=2']:
                        failed.append(hit.graph6)
            results.append(CheckResult(
                'structural', 'm1-pendants n={}'.format(n), not failed,
                '{} realizers without two pendants'.format(len(failed))))
        return results

    # parity

    def suite_parity(self):
        results = []
        for n in range(3, min(self.max_n, 8) + 1):
            census = integral_census(n, budget=n, workers=self.workers)
            checked, bad = 0, []
            for g, s, d in census:
                if isinstance(d, DoubledMissingPair):
                    checked += 1
                    if not parity_check(d).compatible:
                        bad.append(str(d))
            results.append(CheckResult(
                'parity', 'n={}'.format(n), not bad,
                '{} spectra checked, exceptions {}'.format(checked, bad)))
        return results

    # transport

    def certified(self):
        """
        Certified descriptors of order <= max_n from the m = 1 and m = 2
        lists, the S{i}n lists and the tables
        """
        descriptors = []
        for n in range(2, self.max_n + 1):
            descriptors += [SingleMissing(i, n) for i in range(1, n)]
            if n >= 4:
                descriptors += [DoubledMissingPair(i, n - 1, n, 1)
                                for i in m1_realizable_list(n)]
                descriptors += [DoubledMissingPair(i, j, n, 2)
                                for i, j in sorted(self.expected_m2(n))]
        out = []
        for d in descriptors:
            verdict = self.realizer.decide(d)
            if isinstance(verdict, Realizable):
                out.append((d, verdict))
        return out

    def suite_transport(self):
        bad = [
            str(d) for d in self._all_descriptors(12)
            if not transform_consistency(d)
        ]
        results = [CheckResult(
            'transport', 'transform-consistency', not bad,
            'n <= 12, failures {}'.format(bad[:5]))]

        checked, failures = 0, []
        for d, verdict in self.certified():
            for label, holds in transport_checks(self.realizer, d, verdict):
                checked += 1
                if not holds:
                    failures.append(label)
        results.append(CheckResult(
            'transport', 'certified-shift-dual', not failures,
            '{} constructions, failures {}'.format(checked, failures)))
        return results

    @staticmethod
    def _all_descriptors(top):
        for n in range(2, top + 1):
            for j in range(2, n + 1):
                for i in range(1, j):
                    for m in range(1, n + 1):
                        if m not in (i, j):
                            yield DoubledMissingPair(i, j, n, m)

    # enumeration

    def suite_enumeration(self):
        results = []
        atlas = {}
        for g in nx.graph_atlas_g()[1:]:
            if nx.is_connected(g):
                n = g.number_of_nodes()
                atlas[n] = atlas.get(n, 0) + 1

        for n in range(1, min(self.max_n, 7) + 1):
            count = sum(1 for _ in enumerate_connected(n, budget=n))
            results.append(CheckResult(
                'enumeration', 'atlas n={}'.format(n), count == atlas[n],
                'augment {} atlas {}'.format(count, atlas[n])))

        for n in range(8, min(self.max_n, 9) + 1):
            augment = sum(1 for _ in enumerate_connected(
                n, budget=n, workers=self.workers))
            extend = sum(1 for _ in enumerate_connected(
                n, budget=n, strategy='extend'))
            results.append(CheckResult(
                'enumeration', 'strategies n={}'.format(n),
                augment == extend == KNOWN_CONNECTED_COUNTS[n],
                'augment {} extend {}'.format(augment, extend)))
        return results

    # tables

    def suite_tables(self):
        results = []
        for name, table in sorted(TABLES.items()):
            diff = check_table(name)
            results.append(CheckResult(
                'tables', name, not diff,
                '{} rows'.format(len(table['rows'])) if not diff
                else ''.join(diff)))
        return results
