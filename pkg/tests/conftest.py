import pytest


def pytest_addoption(parser):
    parser.addoption(
        '--runslow', action='store_true', default=False,
        help='run exhaustive checks at orders 8 and 9')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope='session')
def cache_path(tmpdir_factory):
    """
    Oracle cache file shared by the session realizer
    """
    workdir = tmpdir_factory.mktemp('cache')
    yield str(workdir.join('oracle.jsonl'))
    workdir.remove()


@pytest.fixture(scope='session')
def realizer(cache_path):
    """
    Realizer searching up to order 7, backed by a throwaway cache
    """
    from laplacian_realizer.cache import OracleCache
    from laplacian_realizer.realizer import Realizer
    return Realizer(budget=7, cache=OracleCache(cache_path).load())


@pytest.fixture(scope='session')
def small_graphs():
    """
    A few named graphs with known Laplacian spectra
    """
    from laplacian_realizer.graph import Graph
    return {
        'K1,3': Graph.from_edges(4, [(0, 3), (1, 3), (2, 3)]),
        'C4': Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        'P4': Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
        'K4': Graph.from_edges(
            4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    }


@pytest.fixture
def isolated_home(tmpdir, monkeypatch):
    """
    Empty home and working directories, no cache override
    """
    home = tmpdir.mkdir('home')
    work = tmpdir.mkdir('work')
    monkeypatch.setenv('HOME', str(home))
    monkeypatch.delenv('REALIZER_CACHE', raising=False)
    monkeypatch.chdir(str(work))
    return home, work
