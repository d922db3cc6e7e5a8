import logging
import platform


# Setup config file name
if platform.system() == 'Windows':
    CONFIG_FILE = 'realizer.ini'
else:
    CONFIG_FILE = '.realizerrc'

# Environment override for the oracle cache location
CACHE_ENV = 'REALIZER_CACHE'

# Largest order per build profile
PROFILES = {
    'default': 64,
    'wide': 4096,
}

# Setup common logger
logger = logging.getLogger('laplacian_realizer')
logger.setLevel(level=logging.WARNING)
channel = logging.StreamHandler()
formatter = logging.Formatter('%(asctime)s [%(levelname)s] %(message)s')
channel.setFormatter(formatter)
logger.addHandler(channel)
