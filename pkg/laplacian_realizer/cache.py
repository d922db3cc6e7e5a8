"""
Persistent memo of oracle answers, one JSON record per line:

    {"key": "S{2,4}5^1", "status": "found", "graph6": "Dsc",
     "certificate": "", "spectrum": "0,1^2,3,5", "exhausted": 0,
     "timestamp": "..."}

Found records are re-verified spectrally when loaded; a line that fails
is quarantined on its own and the rest of the file stays usable.
Quarantined lines move to <cache>.quarantine on the next save.
"""
import json
import os
import tempfile
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

from laplacian_realizer import logger
from laplacian_realizer.descriptors import (
    DescriptorError, expand, parse_descriptor
)
from laplacian_realizer.graph import GraphError, decode_graph6, encode_graph6
from laplacian_realizer.spectra import integer_spectrum

FIELDS = ('key', 'status', 'graph6', 'certificate', 'spectrum', 'exhausted',
          'timestamp')


class CacheError(Exception):
    """
    The cache file could not be read or written
    """


@dataclass(frozen=True)
class CacheRecord(object):
    key: str
    status: str
    graph6: str = ''
    certificate: str = ''
    spectrum: str = ''
    exhausted: int = 0
    timestamp: str = ''

    @property
    def found(self):
        return self.status == 'found'

    def to_json(self):
        data = asdict(self)
        return json.dumps({name: data[name] for name in FIELDS})


def _now():
    return datetime.now(timezone.utc).isoformat(timespec='seconds')


def _check_record(record):
    """
    Raise ValueError unless the record is internally consistent
    """
    d = parse_descriptor(record.key)
    if record.status == 'empty':
        if record.exhausted < d.n:
            raise ValueError('exhausted order {} below {}'.format(
                record.exhausted, d.n))
        return
    if record.status != 'found':
        raise ValueError('unknown status {!r}'.format(record.status))
    g = decode_graph6(record.graph6)
    if not g.is_connected():
        raise ValueError('graph is disconnected')
    if integer_spectrum(g) != expand(d) or record.spectrum != str(expand(d)):
        raise ValueError('spectrum does not match {}'.format(record.key))


class OracleCache(object):
    """
    In memory when path is None, otherwise backed by a JSON lines file
    Single writer: every store rewrites the file atomically
    """

    def __init__(self, path=None):
        self.path = path
        self.records = {}
        self.quarantined = []
        self._unsaved_quarantine = []

    def load(self):
        if self.path is None or not os.path.exists(self.path):
            return self
        try:
            with open(self.path, encoding='utf-8') as f:
                lines = f.readlines()
        except OSError as e:
            raise CacheError('Cannot read {}: {}'.format(self.path, e))

        for number, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                record = CacheRecord(**{
                    name: data[name] for name in FIELDS if name in data})
                _check_record(record)
            except (ValueError, TypeError, KeyError, DescriptorError,
                    GraphError) as e:
                logger.warning('Quarantined cache line {}: {}'.format(
                    number, e))
                self.quarantined.append((number, line.rstrip('\n')))
                self._unsaved_quarantine.append(line.rstrip('\n'))
                continue
            self.records[record.key] = record
        logger.debug('Loaded {} cache records from {}'.format(
            len(self.records), self.path))
        return self

    @property
    def quarantine_path(self):
        return self.path + '.quarantine'

    def save(self):
        if self.path is None:
            return
        self._set_aside()
        directory = os.path.dirname(os.path.abspath(self.path))
        try:
            os.makedirs(directory, exist_ok=True)
            fd, temp = tempfile.mkstemp(dir=directory, suffix='.tmp')
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                for key in sorted(self.records):
                    f.write(self.records[key].to_json() + '\n')
            os.replace(temp, self.path)
        except OSError as e:
            raise CacheError('Cannot write {}: {}'.format(self.path, e))

    def _set_aside(self):
        if not self._unsaved_quarantine:
            return
        try:
            with open(self.quarantine_path, 'a', encoding='utf-8') as f:
                for line in self._unsaved_quarantine:
                    f.write(line + '\n')
        except OSError as e:
            raise CacheError('Cannot write {}: {}'.format(
                self.quarantine_path, e))
        self._unsaved_quarantine = []

    def lookup(self, d):
        return self.records.get(str(d))

    def put(self, record):
        self.records[record.key] = record
        self.save()

    def store_found(self, d, g, certificate=''):
        self.put(CacheRecord(
            key=str(d),
            status='found',
            graph6=encode_graph6(g).decode('ascii'),
            certificate=certificate,
            spectrum=str(expand(d)),
            timestamp=_now(),
        ))

    def store_empty(self, d, exhausted):
        self.put(CacheRecord(
            key=str(d),
            status='empty',
            spectrum=str(expand(d)),
            exhausted=exhausted,
            timestamp=_now(),
        ))

    def __len__(self):
        return len(self.records)


def load_cache(path):
    return OracleCache(path).load()


def store_cache(cache, path):
    target = OracleCache(path)
    target.records = dict(cache.records)
    target.save()
