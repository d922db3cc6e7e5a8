import pytest


@pytest.mark.parametrize('text', [
    'Kpq3,1',
    'J(U(K2,E2),K1)',
    'J(K1,C(J(K2,E2)))',
    'J(U(J(E2,C(P3)),E2),K1)',
    'J(U(Kpq3,1,K2),K1)',
    'U(C5,S4)',
    'J(K1,O(S{4,7}7^1))',
    'C(A6)',
])
def test_parse_format(text):
    from laplacian_realizer.expression import format_expr, parse_expr
    assert format_expr(parse_expr(text)) == text


def test_structure():
    from laplacian_realizer.descriptors import DoubledMissingPair
    from laplacian_realizer.expression import (
        Complement, Join, Oracle, Union, depth, family, oracles, order,
        parse_expr
    )
    e = parse_expr('J(K1,C(J(K2,E2)))')
    assert e == Join(family('K', 1), Complement(
        Join(family('K', 2), family('E', 2))))
    assert order(e) == 5
    assert depth(e) == 3
    assert oracles(e) == []

    e = parse_expr('U(O(S{2,4}5^1),C4)')
    assert isinstance(e, Union)
    assert isinstance(e.left, Oracle)
    assert order(e) == 9
    assert oracles(e) == [DoubledMissingPair(2, 4, 5, 1)]


@pytest.mark.parametrize('text, position', [
    ('J(K1,K2', 7),
    ('X3', 0),
    ('C2', 0),
    ('S1', 0),
    ('Kpq3', 4),
    ('K', 1),
    ('K1)', 2),
    ('O(S{2,4}5)', 9),
])
def test_parse_errors(text, position):
    from laplacian_realizer.expression import ExpressionError, parse_expr
    with pytest.raises(ExpressionError) as e:
        parse_expr(text)
    assert e.value.position == position


def test_evaluate():
    from laplacian_realizer.expression import evaluate, parse_expr
    from laplacian_realizer.spectra import integer_spectrum
    g = evaluate(parse_expr('J(U(K2,E2),K1)'))
    assert g.n == 5
    assert str(integer_spectrum(g)) == '0,1^2,3,5'
    assert str(integer_spectrum(evaluate(parse_expr('C4')))) == '0,2^2,4'


def test_evaluate_oracle():
    from laplacian_realizer.expression import (
        ExpressionError, evaluate, parse_expr
    )
    from laplacian_realizer.graph import Graph
    e = parse_expr('J(K1,O(S{1}2))')
    with pytest.raises(ExpressionError):
        evaluate(e)
    with pytest.raises(ExpressionError):
        evaluate(e, lambda d: None)
    with pytest.raises(ExpressionError):
        evaluate(e, lambda d: Graph.empty(3))
    g = evaluate(e, lambda d: Graph.from_edges(2, [(0, 1)]))
    assert g.edge_count == 3
