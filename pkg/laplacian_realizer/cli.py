import argparse
import os.path
import sys
from laplacian_realizer.search import CONJECTURES
from laplacian_realizer.verify import SUITES
from laplacian_realizer.workflow import Workflow, EXIT_ERROR


def build_parser():
    base_dir = os.path.realpath(os.path.dirname(__file__))
    parser = argparse.ArgumentParser(
      prog='lrealize',
      formatter_class=argparse.RawDescriptionHelpFormatter,
      description='Construct, decide and verify graphs realizing the '
                  'Laplacian spectra S{i,j}n^m and S{i}n.',
      epilog=open(os.path.join(base_dir, 'help.txt')).read(),
    )

    # Shared options
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--budget',
        dest='budget',
        type=int,
        help='Largest order handed to exhaustive search. [default=7]')
    common.add_argument(
        '--cache',
        dest='cache',
        type=str,
        help='Oracle cache file (JSON lines).')
    common.add_argument(
        '--workers',
        dest='workers',
        type=int,
        help='Worker processes used by exhaustive search. [default=1]')
    common.add_argument(
        '--profile',
        dest='profile',
        type=str,
        choices=['default', 'wide'],
        help='Graph capacity profile: default (64 vertices) or wide (4096).')
    common.add_argument(
        '--format',
        dest='format',
        type=str,
        default='text',
        choices=['text', 'records'],
        help='Output layout. [default=text]')
    common.add_argument(
        '-v',
        '--verbose',
        dest='verbose',
        type=int,
        default=2,
        choices=[1, 2, 3, 4, 5],
        help='Verbose - select level of verbosity. 1=DEBUG(most verbose),'
             ' 2=INFO, 3=WARNING, 4=ERROR, 5= CRITICAL(least verbose).'
             ' [default=2]')

    commands = parser.add_subparsers(dest='command')
    commands.required = True

    spectrum = commands.add_parser(
        'spectrum', parents=[common],
        help='Exact Laplacian spectrum of a graph6 string or certificate.')
    spectrum.add_argument('inputs', type=str, nargs='+')

    realize = commands.add_parser(
        'realize', parents=[common],
        help='Decide descriptors such as S{2,4}5^1 and print certificates.')
    realize.add_argument('inputs', type=str, nargs='+')

    commands.add_parser(
        'tables', parents=[common],
        help='Rebuild the reference tables and compare with golden files.')

    verify = commands.add_parser(
        'verify', parents=[common],
        help='Run verification suites.')
    verify.add_argument(
        '--suite',
        dest='suite',
        type=str,
        default='all',
        choices=list(SUITES) + ['all'],
        help='Suite to run. [default=all]')
    verify.add_argument(
        '--max-n',
        dest='max_n',
        type=int,
        default=8,
        help='Largest order checked. [default=8]')

    scan = commands.add_parser(
        'scan', parents=[common],
        help='Exhaustively scan a conjectured empty family.')
    scan.add_argument(
        'inputs', type=str, nargs='+', choices=sorted(CONJECTURES),
        metavar='TAG')
    scan.add_argument(
        '--order',
        dest='order',
        type=int,
        required=True,
        help='Order of the scanned graphs.')

    dot = commands.add_parser(
        'dot', parents=[common],
        help='DOT rendering of a graph6 string or certificate.')
    dot.add_argument('inputs', type=str, nargs='+')

    return parser


def main(argv=None):
    """
    CLI Entry point
    """
    options = build_parser().parse_args(argv)
    try:
        workflow = Workflow(**vars(options))
        return workflow.run()
    except Exception as e:
        print('Error: {}'.format(e))
        return EXIT_ERROR  # erroneous exit code


if __name__ == '__main__':
    exit = main()
    sys.exit(exit)
