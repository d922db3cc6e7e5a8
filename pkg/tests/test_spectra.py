import pytest
from hypothesis import given, settings

from tests.strategies import graphs


def spectrum(text):
    from laplacian_realizer.spectra import SpectrumMultiset
    return SpectrumMultiset.parse(text)


def test_multiset_text():
    s = spectrum('0, 1^2, 4')
    assert s.values() == [0, 1, 1, 4]
    assert str(s) == '0,1^2,4'
    assert s.order == 4
    assert s.total == 6
    assert s.square_total == 18
    assert 1 in s and 2 not in s


def test_multiset_errors():
    from laplacian_realizer.spectra import SpectrumError, SpectrumMultiset
    with pytest.raises(SpectrumError):
        SpectrumMultiset.parse('0,x')
    with pytest.raises(SpectrumError):
        SpectrumMultiset(((1, 1), (0, 1)))
    with pytest.raises(SpectrumError):
        SpectrumMultiset(((-1, 1),))


@pytest.mark.parametrize('name, expected', [
    ('K1,3', '0,1^2,4'),
    ('C4', '0,2^2,4'),
    ('K4', '0,4^3'),
])
def test_known_spectra(small_graphs, name, expected):
    from laplacian_realizer.spectra import integer_spectrum
    assert str(integer_spectrum(small_graphs[name])) == expected


def test_not_integral(small_graphs):
    from laplacian_realizer.spectra import NotIntegral, integer_spectrum
    result = integer_spectrum(small_graphs['P4'])
    assert isinstance(result, NotIntegral)
    # 0 and 2 are roots, x^2 - 4x + 2 stays
    assert result.quotient_degree == 2


def test_char_poly_text(small_graphs):
    from laplacian_realizer.spectra import laplacian_char_poly
    poly = laplacian_char_poly(small_graphs['K1,3'])
    assert poly.coefficients == (1, -6, 9, -4, 0)
    assert str(poly) == 'x^4 - 6x^3 + 9x^2 - 4x'


@settings(deadline=None, max_examples=60)
@given(graphs())
def test_char_poly_sympy(g):
    """
    Both engines agree with the sympy characteristic polynomial
    """
    import sympy
    from laplacian_realizer.spectra import (
        laplacian_char_poly, laplacian_matrix
    )
    x = sympy.symbols('x')
    expected = tuple(int(c) for c in sympy.Matrix(
        laplacian_matrix(g)).charpoly(x).all_coeffs())
    assert laplacian_char_poly(g, 'leverrier').coefficients == expected
    assert laplacian_char_poly(g, 'bareiss').coefficients == expected


def test_engine_errors(small_graphs):
    from laplacian_realizer.graph import Graph
    from laplacian_realizer.spectra import SpectrumError, laplacian_char_poly
    with pytest.raises(SpectrumError):
        laplacian_char_poly(small_graphs['C4'], 'floating')
    with pytest.raises(SpectrumError):
        laplacian_char_poly(Graph.empty(30), 'leverrier')
    # large orders fall back to exact elimination
    poly = laplacian_char_poly(Graph.empty(30))
    assert poly.coefficients == (1,) + (0,) * 30


def test_bareiss_determinant():
    from laplacian_realizer.spectra import bareiss_determinant
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([[7]]) == 7


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=5), graphs(max_n=5))
def test_spectral_calculus(g, h):
    """
    Union, join and complement transforms match the composed graphs
    whenever both operands are Laplacian integral
    """
    from laplacian_realizer.graph import complement, join, union
    from laplacian_realizer.spectra import (
        NotIntegral, complement_spectrum, integer_spectrum, join_spectrum,
        union_spectrum
    )
    sg, sh = integer_spectrum(g), integer_spectrum(h)
    if isinstance(sg, NotIntegral) or isinstance(sh, NotIntegral):
        return
    assert integer_spectrum(union(g, h)) == union_spectrum(sg, sh)
    assert integer_spectrum(join(g, h)) == join_spectrum(sg, sh)
    assert integer_spectrum(complement(g)) == complement_spectrum(sg, g.n)


def test_transform_domains():
    from laplacian_realizer.spectra import (
        SpectrumError, complement_spectrum, join_spectrum
    )
    with pytest.raises(SpectrumError):
        complement_spectrum(spectrum('0,1^2,4'), 3)
    with pytest.raises(SpectrumError):
        complement_spectrum(spectrum('0,5'), 2)
    with pytest.raises(SpectrumError):
        join_spectrum(spectrum('1,2'), spectrum('0'))


def test_complement_example():
    from laplacian_realizer.spectra import complement_spectrum
    # K1,3 against K3 u K1
    assert str(complement_spectrum(spectrum('0,1^2,4'), 4)) == '0^2,3^2'


@given(graphs())
def test_trace_moments(g):
    from laplacian_realizer.spectra import (
        NotIntegral, integer_spectrum, trace_moments
    )
    s = integer_spectrum(g)
    if isinstance(s, NotIntegral):
        return
    assert trace_moments(g) == (s.total, s.square_total)


def test_connectivity_radius():
    from laplacian_realizer.spectra import (
        SpectrumError, algebraic_connectivity, spectral_radius
    )
    s = spectrum('0,1^2,4')
    assert algebraic_connectivity(s) == 1
    assert spectral_radius(s) == 4
    with pytest.raises(SpectrumError):
        algebraic_connectivity(spectrum('0'))
