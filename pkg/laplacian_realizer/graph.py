"""
Immutable simple graphs stored as adjacency bit rows, the named families
used by the constructions, and the graph operations the spectral calculus
talks about (union, join, complement, Cartesian product).
"""
from dataclasses import dataclass

import networkx as nx

from laplacian_realizer import logger, PROFILES

GRAPH6_HEADER = b'>>graph6<<'

# Largest order accepted by the operations, see set_profile()
MAX_ORDER = PROFILES['default']


class GraphError(Exception):
    """
    A graph could not be built or decoded
    """


class CapacityError(GraphError):
    """
    An operation would exceed the order allowed by the build profile
    """


class ParameterError(GraphError):
    """
    Invalid parameters for a named graph family
    """


class FormatError(GraphError):
    """
    Malformed graph6 input, with the offending byte offset
    """
    def __init__(self, message, offset):
        super().__init__('{} (byte {})'.format(message, offset))
        self.offset = offset


def set_profile(name):
    """
    Switch the capacity bound used by every graph operation
    """
    global MAX_ORDER
    if name not in PROFILES:
        raise ParameterError('Unknown profile {}'.format(name))
    MAX_ORDER = PROFILES[name]
    logger.debug('Graph profile {} ({} vertices max)'.format(name, MAX_ORDER))


def check_capacity(n):
    if n > MAX_ORDER:
        raise CapacityError(
            'Order {} exceeds the profile bound {}'.format(n, MAX_ORDER))


def iter_bits(mask):
    """
    Indices of the set bits of an integer, increasing
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph(object):
    """
    Labeled simple graph on vertices 0..n-1
    Row v is an integer whose bit u is set when u ~ v
    """
    __slots__ = ('_n', '_rows')

    def __init__(self, n, rows):
        rows = tuple(rows)
        if n < 1:
            raise ParameterError('A graph needs at least one vertex')
        check_capacity(n)
        if len(rows) != n:
            raise GraphError('Expected {} rows, got {}'.format(n, len(rows)))
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError('Row {} points outside the graph'.format(v))
            if row >> v & 1:
                raise GraphError('Loop on vertex {}'.format(v))
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(
                        'Asymmetric adjacency {}-{}'.format(v, u))
        self._n = n
        self._rows = rows

    @classmethod
    def _trusted(cls, n, rows):
        # Skip validation, used by the operations below on valid inputs
        g = cls.__new__(cls)
        g._n = n
        g._rows = tuple(rows)
        return g

    @classmethod
    def empty(cls, n):
        check_capacity(n)
        return cls._trusted(n, [0] * n)

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError('Loop on vertex {}'.format(u))
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError('Edge {}-{} out of range'.format(u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_networkx(cls, graph):
        nodes = sorted(graph.nodes())
        index = {v: k for k, v in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), [(index[u], index[v]) for u, v in graph.edges()])

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    @property
    def edge_count(self):
        return sum(bin(row).count('1') for row in self._rows) // 2

    def adjacent(self, u, v):
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v):
        return list(iter_bits(self._rows[v]))

    def degree(self, v):
        return bin(self._rows[v]).count('1')

    def degrees(self):
        return [bin(row).count('1') for row in self._rows]

    def edges(self):
        return [
            (v, u)
            for v, row in enumerate(self._rows)
            for u in iter_bits(row >> (v + 1) << (v + 1))
        ]

    def pendant_vertices(self):
        return [v for v, d in enumerate(self.degrees()) if d == 1]

    def is_connected(self):
        return len(connected_components(self)) == 1

    def relabel(self, order):
        """
        New graph whose vertex k is the old vertex order[k]
        """
        position = {old: new for new, old in enumerate(order)}
        if sorted(position) != list(range(self._n)):
            raise GraphError('Relabeling must be a permutation')
        rows = [0] * self._n
        for new, old in enumerate(order):
            for u in iter_bits(self._rows[old]):
                rows[new] |= 1 << position[u]
        return Graph._trusted(self._n, rows)

    def induced(self, keep):
        """
        Subgraph induced by the given vertices, relabeled in that order
        """
        keep = list(keep)
        rows = []
        for old in keep:
            row = 0
            for new, u in enumerate(keep):
                if self._rows[old] >> u & 1:
                    row |= 1 << new
            rows.append(row)
        return Graph._trusted(len(keep), rows)

    def without_vertex(self, v):
        return self.induced(u for u in range(self._n) if u != v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return 'Graph(n={}, edges={})'.format(self._n, self.edge_count)


@dataclass(frozen=True)
class GraphFamily(object):
    """
    A named graph family member, e.g. GraphFamily('Kpq', (3, 1))
    Tags: K complete, P path, C cycle, Kpq complete bipartite,
    S star on n vertices, A anti-regular, E empty (nK_1)
    """
    tag: str
    params: tuple

    @property
    def order(self):
        if self.tag == 'Kpq':
            return self.params[0] + self.params[1]
        return self.params[0]


FAMILY_TAGS = ('K', 'P', 'C', 'Kpq', 'S', 'A', 'E')


def _validate_family(f):
    if f.tag not in FAMILY_TAGS:
        raise ParameterError('Unknown family {}'.format(f.tag))
    arity = 2 if f.tag == 'Kpq' else 1
    if len(f.params) != arity or not all(
            isinstance(p, int) for p in f.params):
        raise ParameterError(
            '{} needs {} integer parameter(s)'.format(f.tag, arity))
    minimum = {'C': 3, 'S': 2}.get(f.tag, 1)
    if min(f.params) < minimum:
        raise ParameterError('{}{} out of range'.format(f.tag, f.params))


def build_family(f):
    """
    Canonical labeled representative of a family member
    """
    _validate_family(f)
    n = f.order
    check_capacity(n)

    if f.tag == 'K':
        full = (1 << n) - 1
        return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])

    if f.tag == 'E':
        return Graph.empty(n)

    if f.tag == 'P':
        return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    if f.tag == 'C':
        return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    if f.tag == 'Kpq':
        p, q = f.params
        return join(Graph.empty(p), Graph.empty(q))

    if f.tag == 'S':
        return join(Graph.empty(1), Graph.empty(n - 1))

    # Anti-regular: A_1 = K_1, A_2 = K_2, A_n = K_1 v (A_{n-2} u K_1)
    if n == 1:
        return Graph.empty(1)
    if n == 2:
        return build_family(GraphFamily('K', (2,)))
    inner = build_family(GraphFamily('A', (n - 2,)))
    return join(Graph.empty(1), union(inner, Graph.empty(1)))


def union(g, h):
    """
    Disjoint union, h relabeled after g
    """
    check_capacity(g.n + h.n)
    shift = g.n
    rows = list(g.rows) + [row << shift for row in h.rows]
    return Graph._trusted(g.n + h.n, rows)


def join(g, h):
    """
    Union plus every edge between the two blocks
    """
    check_capacity(g.n + h.n)
    shift = g.n
    block_g = (1 << g.n) - 1
    block_h = ((1 << h.n) - 1) << shift
    rows = [row | block_h for row in g.rows]
    rows += [(row << shift) | block_g for row in h.rows]
    return Graph._trusted(g.n + h.n, rows)


def complement(g):
    full = (1 << g.n) - 1
    return Graph._trusted(
        g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.rows)])


def cartesian_product(g, h):
    """
    Vertex (v, u) is numbered v * h.n + u
    """
    n = g.n * h.n
    check_capacity(n)
    rows = [0] * n
    for v in range(g.n):
        for u in range(h.n):
            row = 0
            for w in iter_bits(h.rows[u]):
                row |= 1 << (v * h.n + w)
            for w in iter_bits(g.rows[v]):
                row |= 1 << (w * h.n + u)
            rows[v * h.n + u] = row
    return Graph._trusted(n, rows)


def connected_components(g):
    """
    Vertex sets of the components, ordered by smallest vertex
    """
    remaining = (1 << g.n) - 1
    components = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.rows[low.bit_length() - 1] & ~seen
            seen |= new
            frontier |= new
        remaining &= ~seen
        components.append(frozenset(iter_bits(seen)))
    return components


def is_join(g):
    """
    A graph on two or more vertices is a join iff its complement is
    disconnected
    """
    return g.n >= 2 and not complement(g).is_connected()


def _graph6_order(data):
    # Returns (n, offset of the first adjacency byte)
    if not data:
        raise FormatError('Empty graph6 string', 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise FormatError('Truncated order header', len(data))
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def decode_graph6(s):
    """
    Parse a graph6 string (bytes or str, optional >>graph6<< header)
    """
    if isinstance(s, str):
        s = s.encode('ascii', 'replace')
    data = s.rstrip(b'\r\n')
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]

    for offset, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError('Invalid graph6 byte {!r}'.format(
                chr(b)), base + offset)

    n, start = _graph6_order(data)
    if n < 1:
        raise FormatError('Graph6 order must be positive', base)
    check_capacity(n)

    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    body = data[start:]
    if len(body) != expected:
        raise FormatError(
            'Expected {} adjacency bytes, found {}'.format(
                expected, len(body)),
            base + start + min(len(body), expected))

    padding = expected * 6 - bits
    if padding and (body[-1] - 63) & ((1 << padding) - 1):
        raise FormatError('Nonzero padding bits', base + len(data) - 1)

    graph = nx.from_graph6_bytes(data)
    return Graph.from_networkx(graph)


def encode_graph6(g):
    """
    graph6 bytes without header nor newline
    """
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b'\n')


def to_dot(g, name='G'):
    lines = ['graph {} {{'.format(name)]
    lines += ['  {};'.format(v) for v in range(g.n)]
    lines += ['  {} -- {};'.format(u, v) for u, v in g.edges()]
    lines.append('}')
    return '\n'.join(lines) + '\n'
