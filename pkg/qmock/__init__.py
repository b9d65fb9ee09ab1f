import logging

from qmock.series_core import QSeries
from qmock.genfun import GenFunId, series_of
from qmock.indefinite import QuadraticForm2, ThetaCharacteristic
from qmock.verify.registry import run_registry
from qmock.verify.report import IdentityReport

__all__ = [
    'QSeries', 'GenFunId', 'series_of', 'QuadraticForm2', 'ThetaCharacteristic',
    'run_registry', 'IdentityReport'
]


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())
