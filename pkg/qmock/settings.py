import logging
import environs

from qmock.errors import QMockConfigError
from qmock.config.characteristic_config import *
from qmock.config.identity_config import *

logger = logging.getLogger(__name__)

# read environment variables, a .env file included
ENV = environs.Env()
ENV.read_env()

ENV_PREFIX = "QMOCK_"

# exponents are stored as integers counted in units of 1/SCALE
SCALE = 24

# environs reader per parameter type
ENVTYPES = {
    str: ENV.str,
    bool: ENV.bool,
    int: ENV.int,
    float: ENV.float,
}


class ConfigParam():
    """One tunable: its type, default and the values it may take."""

    def __init__(self, type=None, default=None, choice=None, minimum=None):
        self.type = type
        self.default = default
        self.choice = choice
        self.minimum = minimum

    def __repr__(self):
        return "ConfigParam(type=%s, default=%s, choice=%s, minimum=%s)" % (
            self.type.__name__, self.default, self.choice, self.minimum
        )

    def parse(self, value):
        # ints are accepted where floats are expected, bools never count as ints
        if self.type is float and isinstance(value, int) \
                and not isinstance(value, bool):
            value = float(value)
        if not isinstance(value, self.type) or (
                self.type is int and isinstance(value, bool)):
            raise TypeError("expected %s, got %r" % (self.type.__name__, value))
        if self.choice is not None and value not in self.choice:
            raise ValueError("%r is not one of %s" % (value, ", ".join(self.choice)))
        if self.minimum is not None and value < self.minimum:
            raise ValueError("%r is below the minimum %s" % (value, self.minimum))
        return value


class ConfigParamGroup():
    """A named block of parameters, read from QMOCK_<GROUP>_<NAME>."""

    def __init__(self, sub_params=None, required=False):
        self.sub_params = sub_params or {}
        self.required = required

    def __repr__(self):
        return "ConfigParamGroup(%s)" % ", ".join(self.sub_params)


def _from_environment(param_name, param, prefix):
    with ENV.prefixed(ENV_PREFIX + prefix):
        try:
            return ENVTYPES[param.type](param_name.upper())
        except environs.EnvError:
            return None


def get_param(param_name=None, process_config=None, default_config=None, prefix=""):
    """Resolve one parameter.

    The environment (QMOCK_<prefix><NAME>) wins over the caller's value,
    which wins over the default. Bad values raise QMockConfigError.
    """
    if param_name not in default_config:
        raise QMockConfigError("%s is not a valid parameter" % param_name)
    param = default_config[param_name]
    process_config = process_config or {}

    for src, read in (
            ("environment", lambda: _from_environment(param_name, param, prefix)),
            ("process config", lambda: process_config.get(param_name)),
            ("default", lambda: param.default),
    ):
        value = read()
        if value is not None:
            break
    try:
        value = param.parse(value)
    except (TypeError, ValueError) as e:
        raise QMockConfigError("error on parameter '%s': %s" % (param_name, e))

    logger.debug("use %s value: %s=%s", src, param_name, value)
    return value


def parse_config(input_params=None, default_config=None, prefix=""):
    """Validate a (nested) parameter dict against ``default_config``."""
    input_params = input_params or {}
    default_config = default_config or DEFAULT_CONFIG
    unknown = sorted(set(input_params) - set(default_config))
    if unknown:
        raise QMockConfigError("unknown parameters: %s" % ", ".join(unknown))
    out = {}
    for name, param in default_config.items():
        if not isinstance(param, ConfigParamGroup):
            out[name] = get_param(name, input_params, default_config, prefix)
        elif param.required or name in input_params:
            out[name] = parse_config(
                input_params.get(name), param.sub_params, prefix=name.upper() + "_"
            )
        else:
            out[name] = {}
    return out


EXACT_PARAMETERS = {
    # horizon in powers of q (not in 1/24 units)
    "terms": ConfigParam(type=int, default=500, minimum=1),
    # horizon for the identities stated in the original variable
    # 0 means twice "terms", the same range after q -> q^2
    "original_terms": ConfigParam(type=int, default=0, minimum=0),
    "ck_k": ConfigParam(type=int, default=5, minimum=0),
}

NUMERIC_PARAMETERS = {
    "tol": ConfigParam(type=float, default=1e-8),
    "tau_seed": ConfigParam(type=int, default=0),
    "samples": ConfigParam(type=int, default=10, minimum=1),
    "min_imag": ConfigParam(type=float, default=0.5),
    "max_imag": ConfigParam(type=float, default=2.0),
    "holomorphic_terms": ConfigParam(type=int, default=240, minimum=8),
}

DEFAULT_CONFIG = {
    "threads": ConfigParam(type=int, default=1, minimum=1),
    "executor": ConfigParam(
        type=str, default="concurrent_threads", choice=EXECUTOR_TYPES
    ),
    "exact": ConfigParamGroup(sub_params=EXACT_PARAMETERS, required=True),
    "numeric": ConfigParamGroup(sub_params=NUMERIC_PARAMETERS, required=True),
}
