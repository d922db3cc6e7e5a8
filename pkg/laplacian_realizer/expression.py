"""
Construction expressions: the certificates handed back by the realizer.

Text form:
    K<n> P<n> C<n> Kpq<p>,<q> S<n> A<n> E<n>   named families
    U(x,y)   disjoint union
    J(x,y)   join
    C(x)     complement
    O(S{i,j}n^m) or O(S{i}n)   realizer supplied by the search oracle
"""
from dataclasses import dataclass

from laplacian_realizer.descriptors import (
    DescriptorError, parse_descriptor
)
from laplacian_realizer.graph import (
    GraphFamily, build_family, complement, join, union
)


class ExpressionError(Exception):
    """
    Malformed expression text, or an expression that cannot be evaluated
    """
    def __init__(self, message, position=None):
        if position is not None:
            message = '{} (position {})'.format(message, position)
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Base(object):
    family: GraphFamily


@dataclass(frozen=True)
class Union(object):
    left: object
    right: object


@dataclass(frozen=True)
class Join(object):
    left: object
    right: object


@dataclass(frozen=True)
class Complement(object):
    child: object


@dataclass(frozen=True)
class Oracle(object):
    descriptor: object


def family(tag, *params):
    return Base(GraphFamily(tag, tuple(params)))


def empty(n):
    return family('E', n)


def K(n):
    return family('K', n)


def P(n):
    return family('P', n)


def format_expr(e):
    if isinstance(e, Base):
        return e.family.tag + ','.join(str(p) for p in e.family.params)
    if isinstance(e, Union):
        return 'U({},{})'.format(format_expr(e.left), format_expr(e.right))
    if isinstance(e, Join):
        return 'J({},{})'.format(format_expr(e.left), format_expr(e.right))
    if isinstance(e, Complement):
        return 'C({})'.format(format_expr(e.child))
    if isinstance(e, Oracle):
        return 'O({})'.format(e.descriptor)
    raise ExpressionError('Not an expression: {!r}'.format(e))


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self, size=1):
        return self.text[self.pos:self.pos + size]

    def expect(self, char):
        if self.peek() != char:
            raise ExpressionError('Expected {!r}'.format(char), self.pos)
        self.pos += 1

    def number(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExpressionError('Expected a number', self.pos)
        return int(self.text[start:self.pos])

    def binary(self, cls):
        self.expect('(')
        left = self.expression()
        self.expect(',')
        right = self.expression()
        self.expect(')')
        return cls(left, right)

    def expression(self):
        start = self.pos
        head = self.peek()

        if head in ('U', 'J'):
            self.pos += 1
            return self.binary(Union if head == 'U' else Join)

        if head == 'C':
            self.pos += 1
            if self.peek() == '(':
                self.pos += 1
                child = self.expression()
                self.expect(')')
                return Complement(child)
            return self._family('C', start)

        if head == 'O':
            self.pos += 1
            self.expect('(')
            end = self.text.find(')', self.pos)
            if end < 0:
                raise ExpressionError('Unclosed oracle', start)
            try:
                descriptor = parse_descriptor(self.text[self.pos:end])
            except DescriptorError as e:
                position = self.pos + (e.position or 0)
                raise ExpressionError(str(e), position)
            self.pos = end + 1
            return Oracle(descriptor)

        if self.peek(3) == 'Kpq':
            self.pos += 3
            p = self.number()
            self.expect(',')
            q = self.number()
            return self._checked(GraphFamily('Kpq', (p, q)), start)

        if head in ('K', 'P', 'S', 'A', 'E'):
            self.pos += 1
            return self._family(head, start)

        raise ExpressionError('Unexpected {!r}'.format(head or 'end'), start)

    def _family(self, tag, start):
        return self._checked(GraphFamily(tag, (self.number(),)), start)

    def _checked(self, f, start):
        minimum = {'C': 3, 'S': 2}.get(f.tag, 1)
        if min(f.params) < minimum:
            raise ExpressionError(
                '{}{} out of range'.format(f.tag, f.params), start)
        return Base(f)


def parse_expr(text):
    parser = _Parser(text.strip())
    e = parser.expression()
    if parser.pos != len(parser.text):
        raise ExpressionError('Trailing characters', parser.pos)
    return e


def order(e):
    """
    Vertex count, without evaluating anything
    """
    if isinstance(e, Base):
        return e.family.order
    if isinstance(e, (Union, Join)):
        return order(e.left) + order(e.right)
    if isinstance(e, Complement):
        return order(e.child)
    return e.descriptor.n


def depth(e):
    if isinstance(e, (Union, Join)):
        return 1 + max(depth(e.left), depth(e.right))
    if isinstance(e, Complement):
        return 1 + depth(e.child)
    return 0


def oracles(e):
    """
    Descriptors of every oracle leaf, left to right
    """
    if isinstance(e, Oracle):
        return [e.descriptor]
    if isinstance(e, (Union, Join)):
        return oracles(e.left) + oracles(e.right)
    if isinstance(e, Complement):
        return oracles(e.child)
    return []


def evaluate(e, resolver=None):
    """
    Build the labeled graph of an expression
    resolver maps a descriptor to a Graph for oracle leaves
    """
    if isinstance(e, Base):
        return build_family(e.family)
    if isinstance(e, Union):
        return union(evaluate(e.left, resolver), evaluate(e.right, resolver))
    if isinstance(e, Join):
        return join(evaluate(e.left, resolver), evaluate(e.right, resolver))
    if isinstance(e, Complement):
        return complement(evaluate(e.child, resolver))
    if isinstance(e, Oracle):
        if resolver is None:
            raise ExpressionError(
                'No resolver for oracle {}'.format(e.descriptor))
        g = resolver(e.descriptor)
        if g is None or g.n != e.descriptor.n:
            raise ExpressionError(
                'Oracle could not supply {}'.format(e.descriptor))
        return g
    raise ExpressionError('Not an expression: {!r}'.format(e))
