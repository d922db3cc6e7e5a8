import json

import pytest


def test_round_trip(tmpdir):
    from laplacian_realizer.cache import load_cache, OracleCache
    from laplacian_realizer.descriptors import parse_descriptor
    from laplacian_realizer.graph import decode_graph6

    path = str(tmpdir.join('sub', 'oracle.jsonl'))
    cache = OracleCache(path)
    found = parse_descriptor('S{2,3}4^1')
    empty = parse_descriptor('S{4}4')
    cache.store_found(found, decode_graph6('CF'), 'Kpq3,1')
    cache.store_empty(empty, 4)

    loaded = load_cache(path)
    assert len(loaded) == 2
    assert loaded.quarantined == []
    record = loaded.lookup(found)
    assert record.found
    assert record.graph6 == 'CF'
    assert record.certificate == 'Kpq3,1'
    assert record.spectrum == '0,1^2,4'
    assert not loaded.lookup(empty).found
    assert loaded.lookup(empty).exhausted == 4
    assert loaded.lookup(parse_descriptor('S{2}3')) is None


def test_line_format(tmpdir):
    from laplacian_realizer.cache import FIELDS, OracleCache
    from laplacian_realizer.descriptors import parse_descriptor

    path = str(tmpdir.join('oracle.jsonl'))
    OracleCache(path).store_empty(parse_descriptor('S{4}4'), 4)
    with open(path) as f:
        lines = f.read().splitlines()
    assert len(lines) == 1
    data = json.loads(lines[0])
    assert tuple(data) == FIELDS
    assert data['key'] == 'S{4}4'
    assert data['status'] == 'empty'
    assert data['spectrum'] == '0,1,2,3'


def test_quarantine(tmpdir):
    """
    Bad lines are set aside one by one, good lines stay usable
    """
    from laplacian_realizer.cache import OracleCache

    good = {'key': 'S{2,3}4^1', 'status': 'found', 'graph6': 'CF',
            'certificate': '', 'spectrum': '0,1^2,4', 'exhausted': 0,
            'timestamp': ''}
    wrong_spectrum = dict(good, key='S{1,3}4^2', spectrum='0,2^2,4')
    short_search = {'key': 'S{4}4', 'status': 'empty', 'exhausted': 3}
    path = tmpdir.join('oracle.jsonl')
    path.write('\n'.join([
        json.dumps(good),
        'not json',
        json.dumps(wrong_spectrum),
        json.dumps(short_search),
        json.dumps({'key': 'S{9,2}4^1', 'status': 'empty'}),
        '',
    ]))

    cache = OracleCache(str(path)).load()
    assert list(cache.records) == ['S{2,3}4^1']
    assert [number for number, _ in cache.quarantined] == [2, 3, 4, 5]


def test_memory_cache():
    from laplacian_realizer.cache import OracleCache
    from laplacian_realizer.descriptors import parse_descriptor
    cache = OracleCache().load()
    cache.store_empty(parse_descriptor('S{4}4'), 4)
    assert len(cache) == 1


def test_unwritable(tmpdir):
    from laplacian_realizer.cache import CacheError, OracleCache
    from laplacian_realizer.descriptors import parse_descriptor
    blocker = tmpdir.join('file')
    blocker.write('')
    cache = OracleCache(str(blocker.join('oracle.jsonl')))
    with pytest.raises(CacheError):
        cache.store_empty(parse_descriptor('S{4}4'), 4)


def test_store_cache(tmpdir):
    from laplacian_realizer.cache import OracleCache, load_cache, store_cache
    from laplacian_realizer.descriptors import parse_descriptor
    cache = OracleCache()
    cache.store_empty(parse_descriptor('S{4}4'), 4)
    path = str(tmpdir.join('copy.jsonl'))
    store_cache(cache, path)
    assert len(load_cache(path)) == 1


def test_quarantine_kept_on_disk(tmpdir):
    """
    Rewriting the cache moves bad lines to the side file exactly once
    """
    from laplacian_realizer.cache import OracleCache
    from laplacian_realizer.descriptors import parse_descriptor

    path = tmpdir.join('oracle.jsonl')
    path.write('not json\n')
    cache = OracleCache(str(path)).load()
    assert cache.quarantine_path == str(path) + '.quarantine'

    cache.store_empty(parse_descriptor('S{4}4'), 4)
    cache.store_empty(parse_descriptor('S{4}4'), 4)
    assert 'not json' not in path.read()
    assert tmpdir.join('oracle.jsonl.quarantine').read() == 'not json\n'
    assert len(OracleCache(str(path)).load()) == 1
