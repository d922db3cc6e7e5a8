from laplacian_realizer import logger
from laplacian_realizer.cache import OracleCache
from laplacian_realizer.descriptors import (
    DescriptorError, expand, parse_descriptor
)
from laplacian_realizer.expression import evaluate, format_expr, parse_expr
from laplacian_realizer.graph import (
    GraphError, decode_graph6, encode_graph6, set_profile, to_dot
)
from laplacian_realizer.realizer import NotRealizable, Realizable, Realizer
from laplacian_realizer.search import scan_conjecture
from laplacian_realizer.settings import Settings
from laplacian_realizer.spectra import integer_spectrum
from laplacian_realizer.tables import TABLES, check_table, render_table
from laplacian_realizer.verify import Verifier

COMMANDS = ('spectrum', 'realize', 'tables', 'verify', 'scan', 'dot')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_REALIZABLE = 2
EXIT_UNKNOWN = 3


def detect_input(text):
    """
    'descriptor', 'certificate' or 'graph6', from the leading characters
    Graph6 bytes are never digits nor parentheses
    """
    text = text.strip()
    if text.startswith('S{'):
        try:
            parse_descriptor(text)
            return 'descriptor'
        except DescriptorError:
            pass
        # Order 20 graph6 strings start with S too
        try:
            decode_graph6(text)
            return 'graph6'
        except GraphError:
            return 'descriptor'
    if text.startswith('Kpq') or (len(text) > 1 and text[1] in '0123456789('):
        return 'certificate'
    return 'graph6'


class Workflow():
    """
    Command workflow:
     * Load settings and the oracle cache
     * Run one command
     * Write the result lines through output
    """

    def __init__(self, command, inputs=(), budget=None, cache=None,
                 workers=None, profile=None, suite='all', max_n=8,
                 format='text', order=None, verbose=2, output=print):
        logger.setLevel(level=verbose * 10)
        if command not in COMMANDS:
            raise Exception('Unknown command {}'.format(command))

        self.command = command
        self.inputs = list(inputs)
        self.suite = suite
        self.max_n = max_n
        self.format = format
        self.order = order
        self.output = output

        # Load settings
        self.settings = Settings(budget, cache, workers, profile)
        set_profile(self.settings.profile)

        self.cache = OracleCache(self.settings.cache).load()
        self.realizer = Realizer(
            budget=self.settings.budget, cache=self.cache,
            workers=self.settings.workers)

    def run(self):
        """
        Run the command, returns the exit code
        """
        code = getattr(self, 'run_' + self.command)()
        logger.info('All done.')
        return code

    def load_graph(self, text):
        kind = detect_input(text)
        if kind == 'certificate':
            return evaluate(parse_expr(text), self.realizer.resolve_graph)
        if kind == 'graph6':
            return decode_graph6(text.strip())
        raise Exception('Expected a graph6 string or a certificate')

    def run_spectrum(self):
        for text in self.inputs:
            if detect_input(text) == 'descriptor':
                self.output(str(expand(parse_descriptor(text))))
            else:
                self.output(str(integer_spectrum(self.load_graph(text))))
        return EXIT_OK

    def run_realize(self):
        codes = []
        for text in self.inputs:
            d = parse_descriptor(text)
            verdict = self.realizer.decide(d)
            self.render_verdict(d, verdict)
            if isinstance(verdict, Realizable):
                codes.append(EXIT_OK)
            elif isinstance(verdict, NotRealizable):
                codes.append(EXIT_NOT_REALIZABLE)
            else:
                codes.append(EXIT_UNKNOWN)
        return max(codes) if codes else EXIT_OK

    def render_verdict(self, d, verdict):
        fields = [('descriptor', str(d)), ('outcome', verdict.outcome)]
        if isinstance(verdict, Realizable):
            g = evaluate(verdict.certificate, self.realizer.resolve_graph)
            fields += [
                ('certificate', format_expr(verdict.certificate)),
                ('graph6', encode_graph6(g).decode('ascii')),
                ('spectrum', str(integer_spectrum(g))),
            ]
            fields += [('alternative', format_expr(c))
                       for c in verdict.alternatives]
        elif isinstance(verdict, NotRealizable):
            fields.append(('reason', verdict.reason))
        else:
            fields.append(('conjecture', verdict.tag))
            fields.append(('searched', 'n <= {}'.format(
                self.settings.budget)))
        fields += [('note', note) for note in verdict.notes]

        if self.format == 'records':
            self.output(' '.join('{}={}'.format(k, v) for k, v in fields))
        else:
            for key, value in fields:
                self.output('{:<12} {}'.format(key + ':', value))

    def run_tables(self):
        code = EXIT_OK
        for name in sorted(TABLES):
            self.output(render_table(name).rstrip('\n'))
            diff = check_table(name)
            if diff:
                logger.error('Table {} differs from its golden file'.format(
                    name))
                self.output(''.join(diff).rstrip('\n'))
                code = EXIT_ERROR
        return code

    def run_verify(self):
        verifier = Verifier(
            max_n=self.max_n, workers=self.settings.workers,
            realizer=Realizer(budget=self.max_n, cache=self.cache,
                              workers=self.settings.workers))
        results = verifier.run(self.suite)
        for result in results:
            self.output(result.record() if self.format == 'records'
                        else str(result))
        failed = [r for r in results if not r.passed]
        self.output('{} checks, {} failed'.format(len(results), len(failed)))
        return EXIT_ERROR if failed else EXIT_OK

    def run_scan(self):
        n = self.order or self.max_n
        for tag in self.inputs:
            report = scan_conjecture(
                tag, n, budget=max(n, self.settings.budget),
                workers=self.settings.workers, progress=True)
            if self.format == 'records':
                for line in report.records():
                    self.output(line)
            else:
                self.output('{} at order {}: {} graphs, {}'.format(
                    tag, n, report.enumerated,
                    'exhausted' if report.exhausted else 'incomplete'))
                if not report.found:
                    self.output('no realizer found')
                for hit in report.found:
                    self.output('counterexample {} {} {}'.format(
                        hit.graph6, hit.spectrum, hit.descriptor))
        return EXIT_OK

    def run_dot(self):
        for number, text in enumerate(self.inputs):
            name = 'G' if len(self.inputs) == 1 else 'G{}'.format(number)
            self.output(to_dot(self.load_graph(text), name).rstrip('\n'))
        return EXIT_OK
