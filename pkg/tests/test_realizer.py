import pytest


def decide(realizer, text):
    from laplacian_realizer.descriptors import parse_descriptor
    return realizer.decide(parse_descriptor(text))


def assert_certified(realizer, text, verdict):
    from laplacian_realizer.descriptors import parse_descriptor
    from laplacian_realizer.realizer import Realizable
    assert isinstance(verdict, Realizable), verdict
    d = parse_descriptor(text)
    assert realizer.certify(verdict.certificate, d)
    for alternative in verdict.alternatives:
        assert realizer.certify(alternative, d)


@pytest.mark.parametrize('text', [
    'S{2,3}4^1', 'S{2,4}5^1', 'S{3,5}6^1', 'S{5,6}7^1', 'S{3,6}7^1',
    'S{2,7}8^1', 'S{4,7}8^1', 'S{6,7}8^1',
    'S{1,3}4^2', 'S{1,4}5^2', 'S{3,4}6^2', 'S{4,6}7^2', 'S{5,7}8^2',
    'S{4,6}8^2',
])
def test_reference_rows(realizer, text):
    """
    Every descriptor of the reference tables is decided realizable
    """
    assert_certified(realizer, text, decide(realizer, text))


def test_m1_shift(realizer):
    from laplacian_realizer.expression import format_expr
    verdict = decide(realizer, 'S{2,3}4^1')
    assert format_expr(verdict.certificate) == 'J(U(K1,E2),K1)'


def test_single_missing(realizer):
    from laplacian_realizer.expression import format_expr
    from laplacian_realizer.realizer import NotRealizable, Realizable

    verdict = decide(realizer, 'S{1}5')
    assert isinstance(verdict, Realizable)
    assert format_expr(verdict.certificate) == 'J(E2,U(K1,K2))'
    assert verdict.alternatives == ()

    verdict = decide(realizer, 'S{3}5')
    assert format_expr(verdict.certificate) == \
        'J(K1,C(J(K1,C(J(K1,C(K2))))))'
    assert_certified(realizer, 'S{3}5', verdict)

    verdict = decide(realizer, 'S{2}5')
    assert isinstance(verdict, NotRealizable)
    assert verdict.reason == 'edge count parity of S{i}n'

    assert decide(realizer, 'S{1}1').certificate is not None


@pytest.mark.parametrize('text, reason', [
    ('S{3,4}8^1', 'm = 1 needs j = n - 1'),
    ('S{1,4}8^2', 'parity of i + j and m'),
    ('S{3,5}8^2', 'm = 2 with i > 1 needs j > n - 3'),
    ('S{3,7}8^2', 'm = 2, j = n - 1 value'),
    ('S{2,3}6^6', 'double n excludes eigenvalue 1'),
])
def test_not_realizable(realizer, text, reason):
    from laplacian_realizer.realizer import NotRealizable
    verdict = decide(realizer, text)
    assert isinstance(verdict, NotRealizable)
    assert verdict.reason == reason


def test_unknown_beyond_budget():
    from laplacian_realizer.realizer import Realizer, Unknown
    realizer = Realizer(budget=6)
    verdict = decide(realizer, 'S{1,5}8^2')
    assert isinstance(verdict, Unknown)
    assert verdict.tag == 'S_1j_double2'
    assert 'n = 8 = p + 1 with p prime' in verdict.notes

    verdict = decide(realizer, 'S{3,9}9^1')
    assert isinstance(verdict, Unknown)
    assert verdict.tag == 'S_i_n_double1'


def test_i1_reduction_searched(realizer):
    """
    With order 7 searchable the reduction target is refuted
    """
    from laplacian_realizer.realizer import NotRealizable
    verdict = decide(realizer, 'S{1,5}8^2')
    assert isinstance(verdict, NotRealizable)
    assert verdict.reason == 'i = 1 reduction to S{4,7}7^1'


def test_double_n(realizer):
    from laplacian_realizer.expression import format_expr
    verdict = decide(realizer, 'S{1,3}5^5')
    assert format_expr(verdict.certificate) == 'J(K2,U(K1,K2))'
    assert_certified(realizer, 'S{1,3}5^5', verdict)


def test_duality(realizer):
    verdict = decide(realizer, 'S{2,3}5^4')
    assert_certified(realizer, 'S{2,3}5^4', verdict)
    assert any('S{2,3}4^1' in note for note in verdict.notes)


def test_rejected_branch_noted(realizer):
    verdict = decide(realizer, 'S{4,6}7^2')
    assert any('rejected' in note for note in verdict.notes)


def test_resolve_oracle(realizer):
    from laplacian_realizer.descriptors import parse_descriptor
    from laplacian_realizer.realizer import NOT_FOUND
    from laplacian_realizer.search import SearchBudgetError
    from laplacian_realizer.spectra import integer_spectrum

    d = parse_descriptor('S{2,3}4^1')
    g = realizer.resolve_oracle(d)
    assert str(integer_spectrum(g)) == '0,1^2,4'
    assert realizer.cache.lookup(d).found

    d = parse_descriptor('S{4}4')
    assert realizer.resolve_oracle(d) is NOT_FOUND
    assert realizer.cache.lookup(d).exhausted == 4
    assert realizer.resolve_graph(d) is None

    with pytest.raises(SearchBudgetError):
        realizer.resolve_oracle(parse_descriptor('S{9}9'))


def test_certify_rejects(realizer):
    from laplacian_realizer.descriptors import parse_descriptor
    from laplacian_realizer.expression import parse_expr
    d = parse_descriptor('S{2,3}4^1')
    assert realizer.certify(parse_expr('Kpq3,1'), d)
    assert not realizer.certify(parse_expr('C4'), d)
    assert not realizer.certify(parse_expr('K3'), d)
    assert not realizer.certify(parse_expr('U(K1,K3)'), d)


def test_transport(realizer):
    from laplacian_realizer.descriptors import parse_descriptor
    from laplacian_realizer.realizer import transport_checks
    d = parse_descriptor('S{2,4}5^1')
    checks = transport_checks(realizer, d, realizer.decide(d))
    assert [label for label, _ in checks] == [
        'shift S{2,4}5^1 -> S{3,5}7^2',
        'dual S{2,4}5^1 -> S{2,4}6^5',
    ]
    assert all(holds for _, holds in checks)


def test_shift_dual_certificates():
    from laplacian_realizer.descriptors import SingleMissing
    from laplacian_realizer.expression import K, format_expr
    from laplacian_realizer.realizer import (
        dual_certificate, shift_certificate
    )
    assert format_expr(shift_certificate(SingleMissing(1, 1), K(1))) == \
        'J(U(K1,E2),K1)'
    assert format_expr(dual_certificate(K(2))) == 'J(C(K2),K1)'


def test_small_i1_realizable_without_prime_note(realizer):
    verdict = decide(realizer, 'S{1,3}4^2')
    assert_certified(realizer, 'S{1,3}4^2', verdict)
    assert not any('p + 1' in note for note in verdict.notes)


def test_incomplete_search_stays_unknown(monkeypatch):
    """
    An enumeration that misses a class never proves non-existence
    """
    from laplacian_realizer import search
    from laplacian_realizer.descriptors import parse_descriptor
    from laplacian_realizer.realizer import Realizer, SearchIncomplete, Unknown
    complete = search.enumerate_connected

    def without_four_edges(n, *args, **kwargs):
        # Drops C4 and the paw at order 4
        for g in complete(n, *args, **kwargs):
            if n != 4 or g.edge_count != 4:
                yield g

    monkeypatch.setattr(search, 'enumerate_connected', without_four_edges)
    realizer = Realizer(budget=5)
    verdict = decide(realizer, 'S{1,3}4^2')
    assert isinstance(verdict, Unknown)
    assert verdict.tag == 'S_1j_double2'
    assert verdict.notes == ('search enumerated 4 of 6 classes at order 4',)

    d = parse_descriptor('S{1,3}4^2')
    result = realizer.resolve_oracle(d)
    assert isinstance(result, SearchIncomplete)
    assert result.expected == 6
    assert realizer.cache.lookup(d) is None
    assert realizer.resolve_graph(d) is None
