import os.path
from configparser import ConfigParser

from laplacian_realizer import logger, CONFIG_FILE, CACHE_ENV, PROFILES

SECTION = 'realizer'

DEFAULTS = {
    'budget': 7,
    'cache': '~/.cache/laplacian_realizer/oracle.jsonl',
    'workers': 1,
    'profile': 'default',
}


class SettingsError(Exception):
    """
    Invalid value in a configuration file
    """


class Settings(object):
    """
    Runtime settings
    """
    def __init__(self, budget=None, cache=None, workers=None, profile=None):
        """
        ---- Order of precedence, per key ----
        1) Value given on command line
        2) Value in the config file in the current working directory
        3) Value in the config file in the user's home directory
        4) Built-in default

        REALIZER_CACHE overrides the cache path of any file layer
        """
        configCurrentDir = os.path.abspath(
            os.path.normpath('./' + CONFIG_FILE)
        )
        configHomeDir = os.path.expanduser(
            os.path.normpath('~/' + CONFIG_FILE)
        )

        values = dict(DEFAULTS)
        for path in (configHomeDir, configCurrentDir):
            if os.path.isfile(path):
                logger.debug('Using settings from \'%s\'.' % path)
                values.update(self.read(path))

        if os.environ.get(CACHE_ENV):
            logger.debug('Cache path from {}'.format(CACHE_ENV))
            values['cache'] = os.environ[CACHE_ENV]

        given = {
            'budget': budget, 'cache': cache,
            'workers': workers, 'profile': profile,
        }
        values.update({k: v for k, v in given.items() if v is not None})

        self.budget = int(values['budget'])
        self.cache = os.path.expanduser(values['cache'])
        self.workers = int(values['workers'])
        self.profile = values['profile']

        if self.profile not in PROFILES:
            raise SettingsError('Unknown profile {}'.format(self.profile))
        if self.budget < 1 or self.workers < 1:
            raise SettingsError('budget and workers must be positive')

    @staticmethod
    def read(path):
        config = ConfigParser()
        config.read(path)
        if not config.has_section(SECTION):
            return {}
        out = {}
        for key in DEFAULTS:
            if config.has_option(SECTION, key):
                out[key] = config.get(SECTION, key)
        for key in ('budget', 'workers'):
            if key in out:
                try:
                    int(out[key])
                except ValueError:
                    raise SettingsError('{} in {} must be an integer'.format(
                        key, path))
        return out
