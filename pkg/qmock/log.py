import logging

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s %(message)s'

# console output stays quiet until a level is asked for
formatter = logging.Formatter(LOG_FORMAT)
console = logging.StreamHandler()
console.setFormatter(formatter)
console.setLevel(logging.ERROR)
logging.getLogger().addHandler(console)


def _level(loglevel):
    return getattr(logging, loglevel.upper()) if isinstance(loglevel, str) else loglevel


def set_log_level(loglevel):
    """Set the package logger and the console handler, name or number."""
    level = _level(loglevel)
    logging.getLogger('qmock').setLevel(level)
    console.setLevel(level)


def setup_logfile(logfile, loglevel=logging.NOTSET):
    """Mirror all records reaching the root logger into ``logfile``."""
    handler = logging.FileHandler(logfile)
    handler.setFormatter(formatter)
    handler.setLevel(_level(loglevel))
    logging.getLogger().addHandler(handler)
    return handler
