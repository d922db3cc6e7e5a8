"""
The two reference tables of small realizers, rebuilt from certificates
and compared with the golden files shipped in laplacian_realizer/tables.
"""
import difflib
import os

from laplacian_realizer.descriptors import expand, parse_descriptor
from laplacian_realizer.expression import evaluate, parse_expr
from laplacian_realizer.spectra import integer_spectrum

TABLES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'tables')

# (certificate, descriptor it realizes)
TABLES = {
    'm1': {
        'title': 'Laplacian integral graphs realizing S{i,j}n^1, n = 4..8',
        'rows': [
            ('Kpq3,1', 'S{2,3}4^1'),
            ('J(K1,C(J(K2,E2)))', 'S{2,4}5^1'),
            ('J(K1,U(E2,P3))', 'S{3,5}6^1'),
            ('J(K1,U(P3,C(P3)))', 'S{5,6}7^1'),
            ('J(K1,U(E2,J(K1,C(P3))))', 'S{3,6}7^1'),
            ('J(U(J(E2,C(P3)),E2),K1)', 'S{2,7}8^1'),
            ('J(U(A5,E2),K1)', 'S{4,7}8^1'),
            ('J(U(C(P3),A4),K1)', 'S{6,7}8^1'),
        ],
    },
    'm2': {
        'title': 'Laplacian integral graphs realizing S{i,j}n^2, n = 4..8',
        'rows': [
            ('C4', 'S{1,3}4^2'),
            ('Kpq3,2', 'S{1,4}5^2'),
            ('J(U(Kpq3,1,K1),K1)', 'S{3,4}6^2'),
            ('J(U(Kpq3,1,K2),K1)', 'S{4,6}7^2'),
            ('J(U(J(U(K2,E2),K1),K2),K1)', 'S{5,7}8^2'),
            ('J(K1,U(K1,J(K1,U(E2,P3))))', 'S{4,6}8^2'),
        ],
    },
}

HEADER = 'construction | spectrum | descriptor'


class TableRowError(Exception):
    """
    A table certificate does not realize its descriptor
    """


def golden_path(name):
    return os.path.join(TABLES_DIR, '{}.txt'.format(name))


def render_row(certificate, descriptor):
    g = evaluate(parse_expr(certificate))
    spectrum = integer_spectrum(g)
    if spectrum != expand(parse_descriptor(descriptor)):
        raise TableRowError('{} has spectrum {}, expected {}'.format(
            certificate, spectrum, descriptor))
    return '{} | {} | {}'.format(certificate, spectrum, descriptor)


def render_table(name):
    table = TABLES[name]
    lines = ['# {}: {}'.format(name, table['title']), HEADER]
    lines += [render_row(c, d) for c, d in table['rows']]
    return '\n'.join(lines) + '\n'


def read_golden(name):
    with open(golden_path(name), encoding='utf-8') as f:
        return f.read()


def check_table(name):
    """
    Returns the unified diff between the golden file and a fresh render,
    empty when they are identical
    """
    fresh = render_table(name)
    golden = read_golden(name)
    return list(difflib.unified_diff(
        golden.splitlines(keepends=True), fresh.splitlines(keepends=True),
        fromfile='golden/{}.txt'.format(name),
        tofile='rendered/{}.txt'.format(name)))
