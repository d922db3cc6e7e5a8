"""
Exhaustive search over connected graphs up to isomorphism.

Generation is isomorph-free by canonical augmentation: a child H = G + v
is kept iff v lies in the automorphism orbit of the last non-cut vertex
of H's canonical labeling. Every connected graph has a non-cut vertex,
so every class is reached from exactly one parent class.
"""
import multiprocessing as mp
from dataclasses import dataclass, field

import pynauty
from tqdm import tqdm

from laplacian_realizer import logger
from laplacian_realizer.descriptors import (
    DoubledMissingPair, SingleMissing, expand, recognize
)
from laplacian_realizer.graph import (
    Graph, cartesian_product, encode_graph6, is_join
)
from laplacian_realizer.spectra import (
    NotIntegral, SpectrumError, integer_spectrum, laplacian_char_poly,
    trace_moments
)

# Connected graphs on n unlabeled vertices
KNOWN_CONNECTED_COUNTS = {
    1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117,
    9: 261080, 10: 11716571,
}

DEFAULT_BUDGET = 9
MAX_BUDGET = 10

# 'extend' keeps every graph of a level in memory
EXTEND_LIMIT = 9

STRATEGIES = ('augment', 'extend')

CONJECTURES = {
    'S_i_n_double1': 'S{i,n}n^1 for 2 <= i < n',
    'S_1j_double2': 'S{1,j}n^2 for 3 <= j <= n',
    'S_i_n_any': 'S{i,n}n^m for every i and m',
    'S_nn': 'S{n}n',
}


class SearchBudgetError(Exception):
    """
    Requested order is above the configured search budget
    """


def _to_pynauty(g):
    return pynauty.Graph(
        g.n, directed=False,
        adjacency_dict={v: g.neighbors(v) for v in range(g.n)})


def canonical_form(g):
    """
    Bytes equal for two graphs iff they are isomorphic
    """
    return g.n.to_bytes(2, 'big') + pynauty.certificate(_to_pynauty(g))


def canonical_graph(g):
    """
    The isomorph-canonical labeled representative of g
    """
    return g.relabel(pynauty.canon_label(_to_pynauty(g)))


def _is_cut_vertex(g, v):
    return g.n > 1 and not g.without_vertex(v).is_connected()


def _is_canonical_extension(child):
    pg = _to_pynauty(child)
    labels = pynauty.canon_label(pg)
    orbits = pynauty.autgrp(pg)[3]
    new = child.n - 1
    for w in reversed(labels):
        if not _is_cut_vertex(child, w):
            return orbits[w] == orbits[new]
    return False


def _extensions(parent, connected=True):
    # Add vertex k = parent.n adjacent to the vertices set in mask
    k = parent.n
    first = 1 if connected else 0
    for mask in range(first, 1 << k):
        rows = [row | ((mask >> v & 1) << k)
                for v, row in enumerate(parent.rows)]
        rows.append(mask)
        yield Graph._trusted(k + 1, rows)


def augment_children(parent):
    """
    Canonical connected one-vertex extensions of a connected graph
    """
    seen = set()
    children = []
    for child in _extensions(parent):
        key = canonical_form(child)
        if key in seen:
            continue
        seen.add(key)
        if _is_canonical_extension(child):
            children.append(child)
    return children


def _augment_worker(payload):
    n, rows = payload
    return [(c.n, c.rows) for c in augment_children(Graph._trusted(n, rows))]


def _augment(n, workers, progress):
    if n == 1:
        yield Graph.empty(1)
        return
    if workers <= 1 or n <= 3:
        for parent in _augment(n - 1, 1, False):
            yield from augment_children(parent)
        return

    # Shard by parent, order kept so every run merges identically
    parents = [(p.n, p.rows) for p in _augment(n - 1, 1, False)]
    with mp.Pool(workers) as pool:
        results = pool.imap(_augment_worker, parents, chunksize=16)
        for children in tqdm(results, total=len(parents),
                             disable=not progress, unit='parent'):
            for child_n, rows in children:
                yield Graph._trusted(child_n, rows)


def _extend(n, progress):
    level = {canonical_form(Graph.empty(1)): Graph.empty(1)}
    for _ in range(1, n):
        following = {}
        for g in tqdm(level.values(), disable=not progress, unit='graph'):
            for child in _extensions(g, connected=False):
                key = canonical_form(child)
                if key not in following:
                    following[key] = child
        level = following
    for key in sorted(level):
        if level[key].is_connected():
            yield level[key]


def check_budget(n, budget):
    if budget is None:
        budget = DEFAULT_BUDGET
    if budget > MAX_BUDGET:
        raise SearchBudgetError(
            'Search budget {} is above the supported {}'.format(
                budget, MAX_BUDGET))
    if n > budget:
        raise SearchBudgetError(
            'Order {} exceeds the search budget {}'.format(n, budget))


def enumerate_connected(n, budget=None, strategy='augment', workers=1,
                        progress=False):
    """
    Yield one labeled representative per isomorphism class of connected
    graphs on n vertices
    """
    check_budget(n, budget)
    if strategy not in STRATEGIES:
        raise SearchBudgetError('Unknown strategy {}'.format(strategy))
    if strategy == 'extend':
        if n > EXTEND_LIMIT:
            raise SearchBudgetError(
                "Strategy 'extend' stops at order {}".format(EXTEND_LIMIT))
        return _extend(n, progress)
    return _augment(n, workers, progress)


@dataclass
class Hit(object):
    graph6: str
    spectrum: str
    descriptor: str = ''


@dataclass
class ScanReport(object):
    order: int
    target: str
    found: list = field(default_factory=list)
    enumerated: int = 0
    exhausted: bool = False

    def records(self):
        """
        Line oriented rendering: one header line then one line per hit
        """
        lines = ['order={} target={} enumerated={} exhausted={} found={}'
                 .format(self.order, self.target, self.enumerated,
                         'yes' if self.exhausted else 'no', len(self.found))]
        for hit in self.found:
            line = '{} {}'.format(hit.graph6, hit.spectrum)
            if hit.descriptor:
                line += ' ' + hit.descriptor
            lines.append(line)
        return lines


class _Target(object):
    # Cheap invariants first, exact polynomial last

    def __init__(self, spectrum):
        self.possible = (
            spectrum.multiplicity(0) == 1 and spectrum.total % 2 == 0)
        self.moments = (spectrum.total, spectrum.square_total)
        self.radius = spectrum.entries[-1][0]
        # prod (x - root), leading coefficient first
        coefficients = [1]
        for root in spectrum.values():
            coefficients = [
                a - root * b for a, b in
                zip(coefficients + [0], [0] + coefficients)]
        self.poly = tuple(coefficients)

    def matches(self, g, moments, char_poly):
        if not self.possible or moments != self.moments:
            return False
        if g.edge_count and max(g.degrees()) + 1 > self.radius:
            return False
        return char_poly().coefficients == self.poly


def find_realizers_many(targets, n, budget=None, strategy='augment',
                        workers=1, progress=False):
    """
    One enumeration pass for several spectra of order n
    Returns {spectrum: ScanReport}
    """
    for s in targets:
        if s.order != n:
            raise SpectrumError(
                'Spectrum {} does not have order {}'.format(s, n))
    checks = [(s, _Target(s)) for s in targets]
    reports = {s: ScanReport(n, str(s)) for s in targets}
    live = [(s, t) for s, t in checks if t.possible]

    count = 0
    for g in enumerate_connected(n, budget, strategy, workers, progress):
        count += 1
        if not live:
            continue
        moments = trace_moments(g)
        cache = []

        def char_poly():
            if not cache:
                cache.append(laplacian_char_poly(g))
            return cache[0]

        for s, target in live:
            if target.matches(g, moments, char_poly):
                d = recognize(s)
                reports[s].found.append(Hit(
                    encode_graph6(canonical_graph(g)).decode('ascii'),
                    str(s), str(d) if d else ''))

    exhausted = count == KNOWN_CONNECTED_COUNTS.get(n)
    if not exhausted:
        logger.error('Enumerated {} connected graphs on {} vertices, '
                     'expected {}'.format(
                         count, n, KNOWN_CONNECTED_COUNTS.get(n)))
    for report in reports.values():
        report.enumerated = count
        report.exhausted = exhausted
    return reports


def find_realizers(target, n, budget=None, strategy='augment', workers=1,
                   progress=False):
    return find_realizers_many(
        [target], n, budget, strategy, workers, progress)[target]


def conjecture_targets(tag, n):
    if tag == 'S_i_n_double1':
        return [DoubledMissingPair(i, n, n, 1) for i in range(2, n)]
    if tag == 'S_1j_double2':
        return [DoubledMissingPair(1, j, n, 2) for j in range(3, n + 1)]
    if tag == 'S_i_n_any':
        return [
            DoubledMissingPair(i, n, n, m)
            for i in range(1, n) for m in range(1, n + 1) if m != i
            and m != n
        ]
    if tag == 'S_nn':
        return [SingleMissing(n, n)]
    raise SearchBudgetError('Unknown conjecture {}'.format(tag))


def scan_conjecture(tag, n, budget=None, strategy='augment', workers=1,
                    progress=False):
    """
    Exhaustively test every member of a conjectured nonexistent family
    """
    descriptors = conjecture_targets(tag, n)
    spectra = [expand(d) for d in descriptors]
    reports = find_realizers_many(
        spectra, n, budget, strategy, workers, progress)
    merged = ScanReport(n, tag)
    for s in spectra:
        merged.found += reports[s].found
        merged.enumerated = reports[s].enumerated
        merged.exhausted = reports[s].exhausted
    if not spectra:
        merged.enumerated = sum(
            1 for _ in enumerate_connected(n, budget, strategy, workers))
        merged.exhausted = merged.enumerated == KNOWN_CONNECTED_COUNTS[n]

    if tag == 'S_i_n_double1' and is_prime(n) and merged.found:
        logger.error('Internal inconsistency: S{{i,n}}n^1 realizer '
                     'found at prime order {}'.format(n))
    return merged


def integral_census(n, budget=None, strategy='augment', workers=1,
                    progress=False):
    """
    Every connected Laplacian integral graph on n vertices, as
    (graph, spectrum, descriptor or None)
    """
    census = []
    for g in enumerate_connected(n, budget, strategy, workers, progress):
        s = integer_spectrum(g)
        if isinstance(s, NotIntegral):
            continue
        census.append((canonical_graph(g), s, recognize(s)))
    return census


def is_prime(n):
    return n > 1 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def is_cartesian_product(g):
    """
    A pair of connected factors (a, b), both with at least two vertices,
    whose Cartesian product is isomorphic to g, or None
    """
    if not g.is_connected():
        return None
    n = g.n
    target = canonical_form(g)
    for p in range(2, int(n ** 0.5) + 1):
        if n % p:
            continue
        q = n // p
        left = list(enumerate_connected(p, budget=MAX_BUDGET))
        right = left if p == q else list(
            enumerate_connected(q, budget=MAX_BUDGET))
        for a in left:
            for b in right:
                # |E(a x b)| = |E(a)| q + |E(b)| p
                if a.edge_count * q + b.edge_count * p != g.edge_count:
                    continue
                if canonical_form(cartesian_product(a, b)) == target:
                    return a, b
    return None


def verify_structural_props(g, d):
    """
    Evaluate the structural necessary conditions on a claimed realizer
    Returns a list of (property, holds)
    """
    s = expand(d)
    n = g.n
    degrees = g.degrees()
    props = [('join_iff_n_in_spectrum', is_join(g) == (n in s))]
    if not isinstance(d, DoubledMissingPair):
        return props

    props.append(('degrees_in_2..n-3',
                  min(degrees) >= 2 and max(degrees) <= n - 3))
    if d.m == 1 and d.j == n - 1:
        props.append(('pendants>=2', len(g.pendant_vertices()) >= 2))
    if d.m == 1 and d.j == n:
        props.append(('order>=9', n >= 9))
        props.append(('order_not_prime', not is_prime(n)))
    if d.j == n and n <= MAX_BUDGET * 2:
        # Factor orders stay within the enumeration range
        props.append(('not_cartesian', is_cartesian_product(g) is None))
    return props
