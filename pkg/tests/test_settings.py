import pytest


def test_defaults(isolated_home):
    from laplacian_realizer.settings import Settings
    settings = Settings()
    assert settings.budget == 7
    assert settings.workers == 1
    assert settings.profile == 'default'
    assert settings.cache.endswith('laplacian_realizer/oracle.jsonl')
    assert '~' not in settings.cache


def test_precedence(isolated_home, monkeypatch):
    """
    Command line > current directory > home directory > defaults
    """
    from laplacian_realizer import CONFIG_FILE
    from laplacian_realizer.settings import Settings
    home, work = isolated_home
    home.join(CONFIG_FILE).write(
        '[realizer]\nbudget=5\nworkers=3\ncache=/tmp/home.jsonl\n')
    work.join(CONFIG_FILE).write('[realizer]\nbudget=6\n')

    settings = Settings()
    assert settings.budget == 6
    assert settings.workers == 3
    assert settings.cache == '/tmp/home.jsonl'

    monkeypatch.setenv('REALIZER_CACHE', '/tmp/env.jsonl')
    assert Settings().cache == '/tmp/env.jsonl'

    settings = Settings(budget=4, cache='/tmp/cli.jsonl', profile='wide')
    assert settings.budget == 4
    assert settings.cache == '/tmp/cli.jsonl'
    assert settings.profile == 'wide'


def test_other_sections_ignored(isolated_home):
    from laplacian_realizer import CONFIG_FILE
    from laplacian_realizer.settings import Settings
    _, work = isolated_home
    work.join(CONFIG_FILE).write('[other]\nbudget=2\n')
    assert Settings().budget == 7


@pytest.mark.parametrize('content, options', [
    ('[realizer]\nbudget=lots\n', {}),
    ('[realizer]\nprofile=huge\n', {}),
    ('', {'workers': 0}),
    ('', {'budget': 0}),
])
def test_invalid(isolated_home, content, options):
    from laplacian_realizer import CONFIG_FILE
    from laplacian_realizer.settings import Settings, SettingsError
    _, work = isolated_home
    work.join(CONFIG_FILE).write(content)
    with pytest.raises(SettingsError):
        Settings(**options)
